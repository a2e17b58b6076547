// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#pragma once

#include <vector>

#include "slpris/ris.hpp"

namespace slpris {

struct AlternateOpts {
  double eps_conv = 1e-3;  // relative block-power decrease
  int max_iter = 20;
  PhaseOpts phase;
};

// One alternation run for a fixed rotation combination. power_trace holds
// the block power after the initial precoder pass and after every accepted
// phase update; it is non-increasing by construction (a candidate phase
// configuration is kept only if the re-solved precoders do not cost more).
struct AlternationResult {
  PrecoderBlock x;
  PhaseConfig theta;
  std::vector<double> power_trace;
  int iterations = 0;  // phase-design rounds executed
  bool converged = false;
};

struct RotationSearchResult {
  std::vector<double> best_phi;          // K rotation offsets
  int best_combo = 0;                    // lexicographic index of best_phi
  AlternationResult best;
  std::vector<double> per_combo_power;   // Q = psi^K entries
};

struct RotationOpts {
  AlternateOpts alt;
  // Initial phases for every combination; empty = all-zero phases
  // (identity reflection) sized from the channel.
  PhaseConfig theta0{{}, 1.0};
};

AlternationResult alternate_block(const ChannelSet& ch, const SymbolBlock& block,
                                  const PhaseConfig& theta0, const QosTargets& qos,
                                  const AlternateOpts& opts = {});

// Exhaustive search over the psi^K rotation combinations in lexicographic
// order (first user most significant); ties keep the first minimum.
// Guarded at K ≤ 8 (BudgetExceeded beyond).
RotationSearchResult rotation_search(const ChannelSet& ch, const CMat& data,
                                     const QosTargets& qos, const RotationOpts& opts = {});

}  // namespace slpris
