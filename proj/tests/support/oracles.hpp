// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors
//
// Independent reference solvers used only by tests. They deliberately share
// no code with the solver paths they check.

#pragma once

#include <optional>
#include <vector>

#include "slpris/channel.hpp"
#include "slpris/numerics.hpp"
#include "slpris/rng.hpp"
#include "slpris/slp.hpp"

namespace slpris::test {

struct EnumQp {
  std::vector<double> x;
  double power = 0.0;
};

// Exact minimum-norm point of {x : Gx ≥ c} by enumerating every active
// subset, solving the equality-constrained projection for each, and keeping
// the feasible minimum. Exponential in the row count; fine for m ≤ ~12.
std::optional<EnumQp> min_norm_qp_enumerate(const Mat& g, const std::vector<double>& c,
                                            double feas_tol = 1e-9);

// Brute-force grid minimum of ‖Ax − b‖ over x ≥ 0 for 2-variable systems.
std::vector<double> nnls_grid_2var(const Mat& a, const std::vector<double>& b, double hi,
                                   double resolution);

// Random QPSK symbol drawn from {(±1±j)/√2}.
cplx random_qpsk(Rng& rng);

// Random complex matrix with unit-variance entries.
CMat random_cmat(int rows, int cols, Rng& rng);

// Random channel set with O(1)-scale links.
ChannelSet random_channelset(int k_users, int m, int n, Rng& rng);

}  // namespace slpris::test
