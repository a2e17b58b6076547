// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#pragma once

#include <array>
#include <vector>

#include "slpris/linalg.hpp"
#include "slpris/rng.hpp"
#include "slpris/sweep_config.hpp"

namespace slpris {

// Street scenario: base station at the origin, reflecting surface on a
// facade a few meters down the x axis, single-antenna users along the
// y axis.
struct ScenarioGeometry {
  std::array<double, 3> bs_position{};
  std::array<double, 3> ris_position{};
  std::vector<std::array<double, 3>> user_positions;
  double wavelength = 0.0;
  double element_spacing = 0.0;

  bool operator==(const ScenarioGeometry&) const = default;
};

// One realization of the three links for all users.
struct ChannelSet {
  CMat direct;    // K×M, BS → user k
  CMat bs_ris;    // N×M, BS → surface
  CMat ris_user;  // K×N, surface → user k

  bool operator==(const ChannelSet&) const = default;
};

// Per-element phase shifts of the reflecting surface. beta is the common
// reflection efficiency (1 unless the surface is disabled).
struct PhaseConfig {
  std::vector<double> theta;  // radians in [0, 2π)
  double beta = 1.0;

  bool operator==(const PhaseConfig&) const = default;
};

PhaseConfig identity_phases(int n);

// Distance-dependent gain in dB: −30 − 10·rho·log10(d). Throws
// InvalidArgument for d ≤ 0.
double path_loss_db(double d_m, double rho);

// Draws the random user placement for one realization.
ScenarioGeometry build_geometry(const SweepConfig& cfg, Rng& rng);

// Uniform linear array steering vector: entry n = exp(j·2π·s·n·sin(angle)).
std::vector<cplx> ula_response(double angle, int count, double spacing_over_wavelength);

// sqrt(eta/(1+eta))·los + sqrt(1/(1+eta))·W with unit-variance complex
// Gaussian W. eta is the linear Rician factor.
CMat draw_rician(int rows, int cols, double eta, const CMat& los, Rng& rng);

// All three links with their path-loss scaling and per-link steering.
ChannelSet draw_scene_channels(const ScenarioGeometry& geo, const SweepConfig& cfg, Rng& rng);

// Row k = direct_k + beta·Σ_n e^{jθ_n}·ris_user(k,n)·bs_ris(n,·).
CMat effective_channel(const ChannelSet& ch, const PhaseConfig& phase);

}  // namespace slpris
