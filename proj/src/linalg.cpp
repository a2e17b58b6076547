// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#include "slpris/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "slpris/errors.hpp"
#include "slpris/kernels.hpp"

namespace slpris {

std::vector<double> matvec(const Mat& m, const std::vector<double>& x) {
  std::vector<double> y(m.rows);
  const auto& k = kern::active();
  for (int r = 0; r < m.rows; ++r) y[r] = k.dot(m.row(r), x.data(), m.cols);
  return y;
}

std::vector<double> mat_tvec(const Mat& m, const std::vector<double>& x) {
  std::vector<double> y(m.cols, 0.0);
  for (int r = 0; r < m.rows; ++r) {
    const double xr = x[r];
    const double* row = m.row(r);
    for (int c = 0; c < m.cols; ++c) y[c] += row[c] * xr;
  }
  return y;
}

std::vector<cplx> cmatvec(const CMat& m, const std::vector<cplx>& x) {
  std::vector<cplx> y(m.rows);
  const auto& k = kern::active();
  for (int r = 0; r < m.rows; ++r) y[r] = k.cdotu(m.row(r), x.data(), m.cols);
  return y;
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

bool all_finite(const Mat& m) { return all_finite(m.a); }

bool all_finite(const CMat& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double norm2_sq(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return acc;
}

double norm2_sq(const std::vector<cplx>& v) {
  double acc = 0.0;
  for (const cplx& z : v) acc += z.real() * z.real() + z.imag() * z.imag();
  return acc;
}

SpsdSolution solve_spsd(const Mat& q, const std::vector<double>& rhs,
                        double pivot_rel_floor) {
  const int n = q.rows;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  Mat l(n, n);
  std::vector<double> d(n);
  double d0 = 0.0;
  for (int i = 0; i < n; ++i) {
    d[i] = q(i, i);
    d0 = std::max(d0, d[i]);
  }
  const double pivot_floor = pivot_rel_floor * std::max(d0, 1e-300);

  int rank = 0;
  for (int r = 0; r < n; ++r) {
    int p = r;
    for (int j = r + 1; j < n; ++j)
      if (d[j] > d[p]) p = j;
    if (d[p] <= pivot_floor) break;
    if (p != r) {
      std::swap(perm[r], perm[p]);
      std::swap(d[r], d[p]);
      for (int s = 0; s < r; ++s) std::swap(l(r, s), l(p, s));
    }
    l(r, r) = std::sqrt(d[r]);
    for (int i = r + 1; i < n; ++i) {
      double sum = q(perm[i], perm[r]);
      for (int s = 0; s < r; ++s) sum -= l(i, s) * l(r, s);
      l(i, r) = sum / l(r, r);
      d[i] -= l(i, r) * l(i, r);
    }
    ++rank;
  }

  std::vector<double> bp(n);
  for (int i = 0; i < n; ++i) bp[i] = rhs[perm[i]];

  // Forward solve on the leading rank×rank block.
  std::vector<double> w(rank);
  for (int i = 0; i < rank; ++i) {
    double sum = bp[i];
    for (int s = 0; s < i; ++s) sum -= l(i, s) * w[s];
    w[i] = sum / l(i, i);
  }

  SpsdSolution out;
  out.z.assign(n, 0.0);

  auto back_solve = [&](std::vector<double>& y) {
    for (int i = rank - 1; i >= 0; --i) {
      double sum = w[i];
      for (int s = i + 1; s < rank; ++s) sum -= l(s, i) * y[s];
      y[i] = sum / l(i, i);
    }
  };

  if (rank == n) {
    std::vector<double> y(rank);
    back_solve(y);
    for (int i = 0; i < rank; ++i) out.z[perm[i]] = y[i];
    out.kind = SpsdSolution::Kind::kSolved;
    return out;
  }

  // Rank-deficient: check whether the trailing rows are consistent.
  double rhs_inf = 0.0;
  for (double v : bp) rhs_inf = std::max(rhs_inf, std::fabs(v));
  double w_nrm = std::sqrt(norm2_sq(w));
  const double cons_tol = 1e-9 * std::max(rhs_inf + std::sqrt(std::max(d0, 0.0)) * w_nrm, 1e-300);

  int worst = -1;
  double worst_resid = 0.0;
  for (int i = rank; i < n; ++i) {
    double resid = bp[i];
    for (int s = 0; s < rank; ++s) resid -= l(i, s) * w[s];
    if (std::fabs(resid) > worst_resid) {
      worst_resid = std::fabs(resid);
      worst = i;
    }
  }

  if (worst < 0 || worst_resid <= cons_tol) {
    std::vector<double> y(rank);
    back_solve(y);
    for (int i = 0; i < rank; ++i) out.z[perm[i]] = y[i];
    out.kind = SpsdSolution::Kind::kConsistent;
    return out;
  }

  // Inconsistent: build a null direction of Q supported on the leading
  // block plus the worst trailing index, oriented so rhsᵀ z > 0.
  std::vector<double> u(rank);
  for (int i = rank - 1; i >= 0; --i) {
    double sum = -l(worst, i);
    for (int s = i + 1; s < rank; ++s) sum -= l(s, i) * u[s];
    u[i] = sum / l(i, i);
  }
  for (int i = 0; i < rank; ++i) out.z[perm[i]] = u[i];
  out.z[perm[worst]] = 1.0;
  double dir = 0.0;
  for (int i = 0; i < n; ++i) dir += rhs[i] * out.z[i];
  if (dir < 0.0)
    for (double& v : out.z) v = -v;
  out.kind = SpsdSolution::Kind::kRay;
  return out;
}

std::vector<cplx> solve_hpd(const CMat& a, const std::vector<cplx>& b,
                            double pivot_rel_floor) {
  const int n = a.rows;
  CMat l(n, n);
  double maxdiag = 1e-300;
  for (int i = 0; i < n; ++i) maxdiag = std::max(maxdiag, a(i, i).real());

  for (int j = 0; j < n; ++j) {
    double dj = a(j, j).real();
    for (int s = 0; s < j; ++s) dj -= std::norm(l(j, s));
    if (!(dj > pivot_rel_floor * maxdiag))
      throw SingularChannel("rank-deficient Hermitian system");
    const double ljj = std::sqrt(dj);
    l(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      cplx sum = a(i, j);
      for (int s = 0; s < j; ++s) sum -= l(i, s) * std::conj(l(j, s));
      l(i, j) = sum / ljj;
    }
  }

  std::vector<cplx> y(n);
  for (int i = 0; i < n; ++i) {
    cplx sum = b[i];
    for (int s = 0; s < i; ++s) sum -= l(i, s) * y[s];
    y[i] = sum / l(i, i).real();
  }
  std::vector<cplx> x(n);
  for (int i = n - 1; i >= 0; --i) {
    cplx sum = y[i];
    for (int s = i + 1; s < n; ++s) sum -= std::conj(l(s, i)) * x[s];
    x[i] = sum / l(i, i).real();
  }
  return x;
}

}  // namespace slpris
