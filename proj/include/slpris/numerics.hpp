// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#pragma once

#include <vector>

#include "slpris/linalg.hpp"

namespace slpris {

// Real inequality system G x ≥ c over the 2M-real stacking of a complex
// transmit vector.
struct RealSystem {
  Mat g;                  // m × n
  std::vector<double> c;  // m
};

struct QpSolution {
  std::vector<double> x;            // n
  std::vector<double> multipliers;  // m, nonnegative, x = Gᵀ·multipliers
  double power = 0.0;               // ‖x‖²
  double kkt_residual = 0.0;
};

// Nonnegative least squares min ‖A x − b‖₂ s.t. x ≥ 0, Lawson–Hanson
// active set on the normal equations. Throws InvalidArgument on non-finite
// input, ConvergenceFailure (carrying the best iterate) past the
// 50·(m+n) iteration cap.
std::vector<double> nnls(const Mat& a, const std::vector<double>& b);

// Minimum-norm point of {x : G x ≥ c}: min ‖x‖². Solved through the dual,
// a nonnegative quadratic program in the multipliers with x recovered as
// Gᵀλ; the active-set core is shared with nnls. Throws InfeasibleSystem
// (identifying the certificate rows) when the constraints are
// contradictory, which requires a rank-deficient G.
QpSolution solve_min_norm_qp(const RealSystem& sys);

// Max violation across primal feasibility, multiplier nonnegativity,
// stationarity x = Gᵀλ and complementary slackness. Zero for an exact
// optimum. Throws InvalidArgument on dimension mismatch.
double kkt_certificate(const RealSystem& sys, const QpSolution& sol);

// Right pseudo-inverse W = Hᴴ(HHᴴ)⁻¹ of a K×M channel with K ≤ M, so that
// H·W = I. Throws SingularChannel when H is row-rank deficient.
CMat right_pseudo_inverse(const CMat& heff);

}  // namespace slpris
