// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace slpris {

using cplx = std::complex<double>;

// Dense row-major real matrix. All problems in this library are small
// (tens of rows at most); everything is kept owned and contiguous.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  double* row(int r) { return a.data() + static_cast<std::size_t>(r) * cols; }
  const double* row(int r) const { return a.data() + static_cast<std::size_t>(r) * cols; }

  bool operator==(const Mat&) const = default;
};

// Dense row-major complex matrix.
struct CMat {
  int rows = 0, cols = 0;
  std::vector<cplx> a;

  CMat() = default;
  CMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, cplx{}) {}

  cplx& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  cplx operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  cplx* row(int r) { return a.data() + static_cast<std::size_t>(r) * cols; }
  const cplx* row(int r) const { return a.data() + static_cast<std::size_t>(r) * cols; }

  bool operator==(const CMat&) const = default;
};

std::vector<double> matvec(const Mat& m, const std::vector<double>& x);
std::vector<double> mat_tvec(const Mat& m, const std::vector<double>& x);  // mᵀ x
std::vector<cplx> cmatvec(const CMat& m, const std::vector<cplx>& x);

bool all_finite(const std::vector<double>& v);
bool all_finite(const Mat& m);
bool all_finite(const CMat& m);

double norm2_sq(const std::vector<double>& v);
double norm2_sq(const std::vector<cplx>& v);

// Outcome of a symmetric positive-semidefinite solve Q z = rhs.
struct SpsdSolution {
  enum class Kind {
    kSolved,      // full rank, z is the solution
    kConsistent,  // rank deficient but rhs is in the range; z is one solution
    kRay,         // rhs not in the range; z is a direction with Q z ≈ 0 and rhsᵀz > 0
  };
  Kind kind = Kind::kSolved;
  std::vector<double> z;
};

// Diagonal-pivoted rank-revealing Cholesky solve for small SPSD systems.
// pivot_rel_floor is the relative threshold below which a pivot is treated
// as zero (rank deficiency).
SpsdSolution solve_spsd(const Mat& q, const std::vector<double>& rhs,
                        double pivot_rel_floor = 1e-13);

// Solves the Hermitian positive-definite system A x = b (in place Cholesky).
// Throws SingularChannel when a pivot falls below pivot_rel_floor relative
// to the largest diagonal entry.
std::vector<cplx> solve_hpd(const CMat& a, const std::vector<cplx>& b,
                            double pivot_rel_floor = 1e-12);

}  // namespace slpris
