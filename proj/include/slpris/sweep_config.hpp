// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace slpris {

enum class SweepAxis { kBlockLength, kRisElements, kUsers };

// The comparison schemes. Tags appear verbatim in CSV output.
enum class SchemeId {
  kProposed,              // joint precoder + phase design with rotation search
  kSlpFiniteNoRis,        // rotation search on the direct link only
  kSlpConventionalRis,    // alternation without rotation search
  kSlpConventionalNoRis,  // per-slot precoding on the direct link only
  kZfRis,                 // zero forcing with phase-tuned surface
  kZfNoRis,               // zero forcing on the direct link only
};

constexpr const char* scheme_tag(SchemeId id) {
  switch (id) {
    case SchemeId::kProposed: return "proposed";
    case SchemeId::kSlpFiniteNoRis: return "slp_finite_no_ris";
    case SchemeId::kSlpConventionalRis: return "slp_conventional_ris";
    case SchemeId::kSlpConventionalNoRis: return "slp_conventional_no_ris";
    case SchemeId::kZfRis: return "zf_ris";
    case SchemeId::kZfNoRis: return "zf_no_ris";
  }
  return "?";
}

constexpr std::optional<SchemeId> scheme_from_tag(std::string_view tag) {
  for (SchemeId id : {SchemeId::kProposed, SchemeId::kSlpFiniteNoRis,
                      SchemeId::kSlpConventionalRis, SchemeId::kSlpConventionalNoRis,
                      SchemeId::kZfRis, SchemeId::kZfNoRis})
    if (tag == scheme_tag(id)) return id;
  return std::nullopt;
}

constexpr const char* axis_tag(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kBlockLength: return "block_length";
    case SweepAxis::kRisElements: return "ris_elements";
    case SweepAxis::kUsers: return "users";
  }
  return "?";
}

constexpr std::optional<SweepAxis> axis_from_tag(std::string_view tag) {
  for (SweepAxis a : {SweepAxis::kBlockLength, SweepAxis::kRisElements, SweepAxis::kUsers})
    if (tag == axis_tag(a)) return a;
  return std::nullopt;
}

// Full experiment description. Defaults are the smart-city street scenario
// used throughout: 4×4 downlink with a 64-element surface at 2.4 GHz.
struct SweepConfig {
  int bs_antennas = 4;    // M
  int users = 4;          // K
  int ris_elements = 64;  // N
  int block_length = 8;   // L

  double carrier_hz = 2.4e9;
  double qos_scale = 1e-7;  // per-user noise-std × sqrt(target SINR)
  double rician_db = 10.0;

  double pathloss_exp_bs_ris = 2.3;
  double pathloss_exp_ris_user = 2.6;
  double pathloss_exp_bs_user = 2.6;

  double bs_height_m = 3.0;
  double user_height_m = 1.5;
  double ris_height_m = 3.0;
  double ris_x_distance_m = 3.0;
  double element_spacing_wavelengths = 0.5;
  double user_y_min_m = 20.0;
  double user_y_max_m = 40.0;

  int realizations = 100;
  int blocks_per_realization = 10;

  SweepAxis sweep_axis = SweepAxis::kBlockLength;
  std::vector<double> sweep_values = {8, 16, 32, 64};
  std::uint64_t seed = 1;
  std::vector<SchemeId> schemes = {
      SchemeId::kProposed,           SchemeId::kSlpFiniteNoRis,
      SchemeId::kSlpConventionalRis, SchemeId::kSlpConventionalNoRis,
      SchemeId::kZfRis,              SchemeId::kZfNoRis,
  };
  int threads = 0;  // 0 = all hardware threads

  bool operator==(const SweepConfig&) const = default;
};

// Copy of cfg with one axis value applied (L, N or K).
SweepConfig apply_axis(const SweepConfig& cfg, double value);

}  // namespace slpris
