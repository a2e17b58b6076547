// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#pragma once

#include <utility>
#include <vector>

#include "slpris/orchestrator.hpp"

namespace slpris {

struct SchemeOpts {
  AlternateOpts alt;
  // Initial phases for RIS-assisted schemes; empty = identity reflection.
  PhaseConfig theta0{{}, 1.0};
  // Phase tuning for the zero-forcing benchmark (same line-scan machinery
  // as the margin maximizer, run in descent on the block power).
  int zf_grid_points = 64;
  double zf_golden_tol = 1e-6;
  int zf_max_passes = 10;
  double zf_rel_tol = 1e-4;
};

// Zero-forcing precoder for one slot: x = W·(s ⊙ d), W the right
// pseudo-inverse, so user k receives exactly s_k·d_k.
std::pair<std::vector<cplx>, double> zf_block(const CMat& heff, const std::vector<cplx>& targets,
                                              const QosTargets& qos);

// Block power of zero forcing under a fixed effective channel.
double zf_block_power(const CMat& heff, const CMat& data, const QosTargets& qos);

// Zero forcing with the surface phases tuned by cyclic coordinate descent
// on the block power; monotone non-increasing across updates.
double zf_with_ris(const ChannelSet& ch, const CMat& data, const QosTargets& qos,
                   const PhaseConfig& theta0, const SchemeOpts& opts = {});

// Runs one comparison scheme on a channel/symbol realization and returns
// its total block power.
double run_scheme(SchemeId id, const ChannelSet& ch, const CMat& data, const QosTargets& qos,
                  const SchemeOpts& opts = {});

}  // namespace slpris
