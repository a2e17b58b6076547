// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#include "slpris/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slpris/errors.hpp"
#include "slpris/kernels.hpp"

namespace slpris {

namespace {

constexpr double kSpeedOfLight = 299792458.0;

double dist(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Angle seen by a linear array with the given axis towards a target point.
double array_angle(const std::array<double, 3>& axis, const std::array<double, 3>& from,
                   const std::array<double, 3>& to) {
  const double d = dist(from, to);
  const double proj =
      (axis[0] * (to[0] - from[0]) + axis[1] * (to[1] - from[1]) + axis[2] * (to[2] - from[2])) / d;
  return std::asin(std::clamp(proj, -1.0, 1.0));
}

double amplitude_gain(double d, double rho) {
  return std::pow(10.0, path_loss_db(d, rho) / 20.0);
}

}  // namespace

PhaseConfig identity_phases(int n) {
  PhaseConfig p;
  p.theta.assign(static_cast<std::size_t>(n), 0.0);
  p.beta = 1.0;
  return p;
}

double path_loss_db(double d_m, double rho) {
  if (!(d_m > 0.0)) throw InvalidArgument("path_loss_db: distance must be positive");
  return -30.0 - 10.0 * rho * std::log10(d_m);
}

ScenarioGeometry build_geometry(const SweepConfig& cfg, Rng& rng) {
  if (cfg.users < 1) throw InvalidArgument("build_geometry: users must be >= 1");
  ScenarioGeometry geo;
  geo.bs_position = {0.0, 0.0, cfg.bs_height_m};
  geo.ris_position = {cfg.ris_x_distance_m, 0.0, cfg.ris_height_m};
  geo.user_positions.reserve(static_cast<std::size_t>(cfg.users));
  for (int k = 0; k < cfg.users; ++k) {
    const double y = rng.uniform(cfg.user_y_min_m, cfg.user_y_max_m);
    geo.user_positions.push_back({0.0, y, cfg.user_height_m});
  }
  geo.wavelength = kSpeedOfLight / cfg.carrier_hz;
  geo.element_spacing = cfg.element_spacing_wavelengths * geo.wavelength;
  return geo;
}

std::vector<cplx> ula_response(double angle, int count, double spacing_over_wavelength) {
  std::vector<cplx> v(static_cast<std::size_t>(count));
  const double step = 2.0 * std::numbers::pi * spacing_over_wavelength * std::sin(angle);
  for (int n = 0; n < count; ++n) v[n] = std::polar(1.0, step * n);
  return v;
}

CMat draw_rician(int rows, int cols, double eta, const CMat& los, Rng& rng) {
  if (los.rows != rows || los.cols != cols)
    throw InvalidArgument("draw_rician: LOS shape mismatch");
  if (!(eta >= 0.0)) throw InvalidArgument("draw_rician: eta must be >= 0");
  const double a = std::sqrt(eta / (1.0 + eta));
  const double b = std::sqrt(1.0 / (1.0 + eta));
  CMat out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out(r, c) = a * los(r, c) + b * rng.cnormal();
  return out;
}

ChannelSet draw_scene_channels(const ScenarioGeometry& geo, const SweepConfig& cfg, Rng& rng) {
  const int m = cfg.bs_antennas, n = cfg.ris_elements;
  const int k_users = static_cast<int>(geo.user_positions.size());
  if (k_users != cfg.users)
    throw InvalidArgument("draw_scene_channels: geometry/user count mismatch");

  const double eta = std::pow(10.0, cfg.rician_db / 10.0);
  const double ratio = cfg.element_spacing_wavelengths;
  const std::array<double, 3> bs_axis = {1.0, 0.0, 0.0};   // along the street-crossing x axis
  const std::array<double, 3> ris_axis = {0.0, 1.0, 0.0};  // along the street

  ChannelSet ch;

  // BS → surface: rank-one steering product scaled by the short-link loss.
  {
    const double d = dist(geo.bs_position, geo.ris_position);
    const double amp = amplitude_gain(d, cfg.pathloss_exp_bs_ris);
    const auto at_bs = ula_response(array_angle(bs_axis, geo.bs_position, geo.ris_position), m, ratio);
    const auto at_ris = ula_response(array_angle(ris_axis, geo.ris_position, geo.bs_position), n, ratio);
    CMat los(n, m);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c) los(r, c) = at_ris[r] * at_bs[c];
    ch.bs_ris = draw_rician(n, m, eta, los, rng);
    for (auto& v : ch.bs_ris.a) v *= amp;
  }

  // BS → user k.
  ch.direct = CMat(k_users, m);
  for (int k = 0; k < k_users; ++k) {
    const double d = dist(geo.bs_position, geo.user_positions[k]);
    const double amp = amplitude_gain(d, cfg.pathloss_exp_bs_user);
    const auto steer = ula_response(array_angle(bs_axis, geo.bs_position, geo.user_positions[k]), m, ratio);
    CMat los(1, m);
    for (int c = 0; c < m; ++c) los(0, c) = steer[c];
    const CMat row = draw_rician(1, m, eta, los, rng);
    for (int c = 0; c < m; ++c) ch.direct(k, c) = amp * row(0, c);
  }

  // Surface → user k.
  ch.ris_user = CMat(k_users, n);
  for (int k = 0; k < k_users; ++k) {
    const double d = dist(geo.ris_position, geo.user_positions[k]);
    const double amp = amplitude_gain(d, cfg.pathloss_exp_ris_user);
    const auto steer = ula_response(array_angle(ris_axis, geo.ris_position, geo.user_positions[k]), n, ratio);
    CMat los(1, n);
    for (int c = 0; c < n; ++c) los(0, c) = steer[c];
    const CMat row = draw_rician(1, n, eta, los, rng);
    for (int c = 0; c < n; ++c) ch.ris_user(k, c) = amp * row(0, c);
  }

  return ch;
}

CMat effective_channel(const ChannelSet& ch, const PhaseConfig& phase) {
  const int k_users = ch.direct.rows, m = ch.direct.cols, n = ch.bs_ris.rows;
  if (static_cast<int>(phase.theta.size()) != n)
    throw InvalidArgument("effective_channel: phase length mismatch");
  if (ch.ris_user.rows != k_users || ch.ris_user.cols != n || (n > 0 && ch.bs_ris.cols != m))
    throw InvalidArgument("effective_channel: dimension mismatch");

  CMat heff = ch.direct;
  if (phase.beta == 0.0 || n == 0) return heff;

  std::vector<cplx> factor(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) factor[i] = std::polar(phase.beta, phase.theta[i]);

  const auto& kn = kern::active();
  for (int k = 0; k < k_users; ++k) {
    cplx* dst = heff.row(k);
    for (int i = 0; i < n; ++i) {
      const cplx alpha = factor[i] * ch.ris_user(k, i);
      kn.caxpy(alpha, ch.bs_ris.row(i), dst, static_cast<std::size_t>(m));
    }
  }
  return heff;
}

}  // namespace slpris
