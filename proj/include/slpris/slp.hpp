// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#pragma once

#include <utility>
#include <vector>

#include "slpris/numerics.hpp"
#include "slpris/rng.hpp"

namespace slpris {

// A block of L unit-modulus QPSK symbol vectors with per-user constellation
// rotation offsets (multiples of 2π/psi held fixed for the whole block).
struct SymbolBlock {
  CMat data;                      // L×K, entries in {(±1±j)/√2}
  std::vector<double> rotations;  // K
  int psi = 4;
};

// Per-user constellation scaling s_k = noise-std × sqrt(target SINR).
struct QosTargets {
  std::vector<double> s;
};

struct PrecoderBlock {
  CMat x;                   // M×L transmit matrix
  double total_power = 0.0;  // squared Frobenius norm of x
};

// d̃(ℓ,k) = e^{-jφ_k}·d(ℓ,k).
CMat rotate_symbols(const SymbolBlock& block);

// Detection-region constraints for one slot as 2K real inequalities over
// the stacking (Re x; Im x): each rotated symbol's received real and
// imaginary parts must land beyond the scaled constellation point, on the
// correct side. Throws UnsupportedConstellation if a target has a
// vanishing real or imaginary component (not a rotated QPSK point).
RealSystem ci_system(const CMat& heff, const std::vector<cplx>& targets, const QosTargets& qos);

// Minimum-power transmit vector for one slot under the constraints above.
std::pair<std::vector<cplx>, double> solve_symbol_precoder(const CMat& heff,
                                                           const std::vector<cplx>& targets,
                                                           const QosTargets& qos);

// All L slots under one effective channel; slot problems are independent.
PrecoderBlock solve_block(const CMat& heff, const CMat& targets, const QosTargets& qos);

double block_power(const PrecoderBlock& block);

// Uniform random QPSK block, L×K.
CMat draw_qpsk_block(int l, int k, Rng& rng);

}  // namespace slpris
