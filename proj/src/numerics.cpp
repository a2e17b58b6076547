// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#include "slpris/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "slpris/errors.hpp"
#include "slpris/kernels.hpp"

namespace slpris {

namespace {

// Shared active-set core: minimize ½ zᵀQz − qᵀz subject to z ≥ 0 for a
// small symmetric positive-semidefinite Q (Lawson–Hanson structure, with
// the least-squares subproblem generalized to a rank-revealing SPSD
// solve). Unbounded descent along a nonnegative null ray of Q is the
// Farkas certificate used by the dual route below.
struct NqpResult {
  enum class Status { kOptimal, kIterCap, kUnbounded };
  Status status = Status::kOptimal;
  std::vector<double> z;
  std::vector<int> ray_support;  // set when unbounded
};

NqpResult nonneg_qp(const Mat& q, const std::vector<double>& lin, int iter_cap) {
  const int n = q.rows;
  NqpResult out;
  out.z.assign(n, 0.0);

  double lin_inf = 0.0, diag_max = 0.0;
  for (int i = 0; i < n; ++i) {
    lin_inf = std::max(lin_inf, std::fabs(lin[i]));
    diag_max = std::max(diag_max, q(i, i));
  }
  if (lin_inf == 0.0) return out;  // z = 0 optimal
  const double tol_w = 1e-12 * lin_inf;
  const double blowup_cap = 1e12 * std::max(1.0, lin_inf / std::max(diag_max, 1e-300));

  std::vector<char> passive(n, 0), banned(n, 0);
  std::vector<int> pidx;  // passive indices, ascending
  std::vector<double>& z = out.z;

  auto rebuild_pidx = [&] {
    pidx.clear();
    for (int i = 0; i < n; ++i)
      if (passive[i]) pidx.push_back(i);
  };

  int iters = 0;
  while (iters++ < iter_cap) {
    // w = lin − Q z, entering index = most positive among free indices.
    int enter = -1;
    double wbest = tol_w;
    for (int i = 0; i < n; ++i) {
      if (passive[i] || banned[i]) continue;
      double w = lin[i];
      for (int j = 0; j < n; ++j) w -= q(i, j) * z[j];
      if (w > wbest) {
        wbest = w;
        enter = i;
      }
    }
    if (enter < 0) return out;  // KKT satisfied (or all candidates banned)

    passive[enter] = 1;
    rebuild_pidx();

    // Inner loop: solve the equality subproblem on the passive set and
    // clip back to the nonnegative orthant until the subproblem solution
    // is interior.
    bool progressed = false;
    while (true) {
      const int p = static_cast<int>(pidx.size());
      Mat qpp(p, p);
      std::vector<double> rhs(p);
      for (int a = 0; a < p; ++a) {
        rhs[a] = lin[pidx[a]];
        for (int b = 0; b < p; ++b) qpp(a, b) = q(pidx[a], pidx[b]);
      }
      SpsdSolution sub = solve_spsd(qpp, rhs);

      if (sub.kind == SpsdSolution::Kind::kRay) {
        // Objective decreases without bound along the ray. Walk to the
        // nearest bound; if the ray is itself nonnegative there is no
        // bound to hit and the problem is unbounded.
        double step = std::numeric_limits<double>::infinity();
        int blocker = -1;
        double ray_inf = 0.0;
        for (int a = 0; a < p; ++a) ray_inf = std::max(ray_inf, std::fabs(sub.z[a]));
        for (int a = 0; a < p; ++a) {
          if (sub.z[a] < -1e-12 * ray_inf) {
            const double s = z[pidx[a]] / (-sub.z[a]);
            if (s < step) {
              step = s;
              blocker = a;
            }
          }
        }
        if (blocker < 0) {
          out.status = NqpResult::Status::kUnbounded;
          for (int a = 0; a < p; ++a)
            if (sub.z[a] > 1e-12 * ray_inf) out.ray_support.push_back(pidx[a]);
          return out;
        }
        for (int a = 0; a < p; ++a) z[pidx[a]] += step * sub.z[a];
        z[pidx[blocker]] = 0.0;
        for (int a = 0; a < p; ++a)
          if (z[pidx[a]] <= 0.0 && sub.z[a] < 0.0) {
            z[pidx[a]] = 0.0;
            passive[pidx[a]] = 0;
          }
        rebuild_pidx();
        if (step > 0.0) progressed = true;
        if (pidx.empty()) break;
        continue;
      }

      // Solved / consistent candidate.
      bool interior = true;
      for (int a = 0; a < p; ++a)
        if (sub.z[a] <= 0.0) {
          interior = false;
          break;
        }
      if (interior) {
        for (int a = 0; a < p; ++a) z[pidx[a]] = sub.z[a];
        progressed = true;
        break;
      }

      // Clip step toward the candidate: stop at the first bound hit.
      double alpha = 1.0;
      for (int a = 0; a < p; ++a) {
        if (sub.z[a] <= 0.0) {
          const double denom = z[pidx[a]] - sub.z[a];
          const double s = denom > 0.0 ? z[pidx[a]] / denom : 0.0;
          alpha = std::min(alpha, s);
        }
      }
      for (int a = 0; a < p; ++a)
        z[pidx[a]] += alpha * (sub.z[a] - z[pidx[a]]);

      // Remove every blocking index that has (numerically) hit zero.
      bool removed = false;
      double zmax = 0.0;
      for (int a = 0; a < p; ++a) zmax = std::max(zmax, std::fabs(z[pidx[a]]));
      for (int a = 0; a < p; ++a) {
        const int i = pidx[a];
        if (sub.z[a] <= 0.0 && z[i] <= 1e-12 * std::max(zmax, 1e-300)) {
          z[i] = 0.0;
          passive[i] = 0;
          removed = true;
        }
      }
      if (alpha > 0.0) progressed = true;
      if (!removed) {
        // Degenerate clip (alpha = 0 with no index leaving); drop the
        // entering index to avoid cycling.
        z[enter] = 0.0;
        passive[enter] = 0;
        break;
      }
      rebuild_pidx();
      if (pidx.empty()) break;
    }

    if (progressed) {
      std::fill(banned.begin(), banned.end(), 0);
    } else {
      banned[enter] = 1;
    }

    double z_inf = 0.0;
    for (double v : z) z_inf = std::max(z_inf, std::fabs(v));
    if (z_inf > blowup_cap) {
      out.status = NqpResult::Status::kUnbounded;
      for (int i = 0; i < n; ++i)
        if (passive[i]) out.ray_support.push_back(i);
      return out;
    }
  }

  out.status = NqpResult::Status::kIterCap;
  return out;
}

}  // namespace

std::vector<double> nnls(const Mat& a, const std::vector<double>& b) {
  const int m = a.rows, n = a.cols;
  if (m < 1 || n < 1) throw InvalidArgument("nnls: empty system");
  if (!all_finite(a) || !all_finite(b)) throw InvalidArgument("nnls: non-finite input");
  if (static_cast<int>(b.size()) != m) throw InvalidArgument("nnls: rhs length mismatch");

  Mat q(n, n);
  std::vector<double> lin(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int r = 0; r < m; ++r) s += a(r, i) * a(r, j);
      q(i, j) = q(j, i) = s;
    }
    double s = 0.0;
    for (int r = 0; r < m; ++r) s += a(r, i) * b[r];
    lin[i] = s;
  }

  NqpResult res = nonneg_qp(q, lin, 50 * (m + n));
  if (res.status != NqpResult::Status::kOptimal)
    throw ConvergenceFailure("nnls: iteration cap exceeded", std::move(res.z));
  return res.z;
}

QpSolution solve_min_norm_qp(const RealSystem& sys) {
  const int m = sys.g.rows, n = sys.g.cols;
  if (m < 1 || n < 1) throw InvalidArgument("solve_min_norm_qp: empty system");
  if (!all_finite(sys.g) || !all_finite(sys.c))
    throw InvalidArgument("solve_min_norm_qp: non-finite input");
  if (static_cast<int>(sys.c.size()) != m)
    throw InvalidArgument("solve_min_norm_qp: rhs length mismatch");

  // Dual: minimize ½ λᵀ(½GGᵀ)λ − cᵀλ over λ ≥ 0, with x = ½Gᵀλ.
  const auto& k = kern::active();
  Mat q(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      q(i, j) = q(j, i) = 0.5 * k.dot(sys.g.row(i), sys.g.row(j), n);

  NqpResult res = nonneg_qp(q, sys.c, 50 * (m + n));
  if (res.status == NqpResult::Status::kUnbounded)
    throw InfeasibleSystem("solve_min_norm_qp: contradictory constraints",
                           std::move(res.ray_support));

  QpSolution sol;
  sol.multipliers.assign(m, 0.0);
  for (int i = 0; i < m; ++i) sol.multipliers[i] = 0.5 * res.z[i];
  sol.x = mat_tvec(sys.g, sol.multipliers);
  sol.power = norm2_sq(sol.x);
  sol.kkt_residual = kkt_certificate(sys, sol);

  if (res.status == NqpResult::Status::kIterCap)
    throw ConvergenceFailure("solve_min_norm_qp: iteration cap exceeded", std::move(sol.x));
  return sol;
}

double kkt_certificate(const RealSystem& sys, const QpSolution& sol) {
  const int m = sys.g.rows, n = sys.g.cols;
  if (static_cast<int>(sol.x.size()) != n ||
      static_cast<int>(sol.multipliers.size()) != m ||
      static_cast<int>(sys.c.size()) != m)
    throw InvalidArgument("kkt_certificate: dimension mismatch");

  const std::vector<double> gx = matvec(sys.g, sol.x);
  const std::vector<double> gtl = mat_tvec(sys.g, sol.multipliers);

  double viol = 0.0;
  for (int i = 0; i < m; ++i) {
    viol = std::max(viol, sys.c[i] - gx[i]);                          // feasibility
    viol = std::max(viol, -sol.multipliers[i]);                      // λ ≥ 0
    viol = std::max(viol, std::fabs(sol.multipliers[i] * (gx[i] - sys.c[i])));  // slackness
  }
  for (int j = 0; j < n; ++j)
    viol = std::max(viol, std::fabs(sol.x[j] - gtl[j]));             // stationarity
  return std::max(viol, 0.0);
}

CMat right_pseudo_inverse(const CMat& heff) {
  const int kk = heff.rows, mm = heff.cols;
  if (kk < 1 || mm < 1) throw InvalidArgument("right_pseudo_inverse: empty channel");
  if (kk > mm) throw InvalidArgument("right_pseudo_inverse: more users than antennas");
  if (!all_finite(heff)) throw InvalidArgument("right_pseudo_inverse: non-finite channel");

  const auto& kn = kern::active();
  CMat gram(kk, kk);
  for (int i = 0; i < kk; ++i)
    for (int j = 0; j < kk; ++j)
      gram(i, j) = kn.cdotc(heff.row(i), heff.row(j), mm);

  CMat w(mm, kk);
  std::vector<cplx> e(kk);
  for (int col = 0; col < kk; ++col) {
    std::fill(e.begin(), e.end(), cplx{});
    e[col] = 1.0;
    const std::vector<cplx> u = solve_hpd(gram, e);  // throws SingularChannel
    for (int r = 0; r < mm; ++r) {
      cplx acc{};
      for (int i = 0; i < kk; ++i) acc += std::conj(heff(i, r)) * u[i];
      w(r, col) = acc;
    }
  }
  return w;
}

}  // namespace slpris
