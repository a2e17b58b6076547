// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "slpris/channel.hpp"
#include "slpris/slp.hpp"

namespace slpris {

// Per-slot, per-user QoS margins: the largest common scaling of the two
// detection-region constraints still satisfied by the received signal.
struct MarginTable {
  Mat z;  // L×K
};

struct PhaseOpts {
  int grid_points = 64;
  double golden_tol = 1e-6;  // radians
  int max_passes = 10;
  double rel_tol = 1e-4;  // pass-level relative improvement of Σz
  // When set, receives one Σz sequence (value after every coordinate
  // update) per call.
  std::vector<std::vector<double>>* trace_sink = nullptr;
};

// z(ℓ,k) = min over the real/imaginary constraint pair of the normalized
// received margin for slot ℓ, user k.
MarginTable margins(const ChannelSet& ch, const PhaseConfig& phase, const PrecoderBlock& x,
                    const CMat& targets);

double sum_margins(const MarginTable& table);

// Affine profile of one received sample in one surface element's phase:
// h_k(θ)·x[ℓ] = a + b·e^{jθ_n} with all other elements held fixed.
std::pair<cplx, cplx> phase_profile(const ChannelSet& ch, const PhaseConfig& phase,
                                    const PrecoderBlock& x, int k, int l, int n);

// Safeguarded cyclic coordinate ascent on Σz over the element phases:
// each coordinate is scanned on a uniform grid, refined by golden section,
// and accepted only when it improves the incumbent objective. Always
// returns a configuration no worse than theta_init.
PhaseConfig optimize_phases(const ChannelSet& ch, const PrecoderBlock& x, const CMat& targets,
                            const PhaseConfig& theta_init, const PhaseOpts& opts = {});

// Uniform grid over [0, 2π) followed by golden-section refinement around
// the best grid point; returns the best evaluated (angle, value). Shared
// by the margin maximizer and the zero-forcing phase tuner.
std::pair<double, double> line_scan_max(const std::function<double(double)>& f, int grid_points,
                                        double tol);

}  // namespace slpris
