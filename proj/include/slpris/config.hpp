// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "slpris/sweep_config.hpp"

namespace slpris {

// Parsed command-line invocation; overrides win over file values.
struct CliInvocation {
  std::string config_path;
  std::optional<SweepAxis> sweep_override;
  std::optional<std::uint64_t> seed_override;
  std::optional<int> realizations_override;
  std::optional<int> threads_override;
  std::string output_csv;
  std::optional<std::string> plot_svg;
  std::optional<std::string> raw_dump;
};

// Flat JSON document with one key per experiment parameter. Missing keys
// take the street-scenario defaults; unknown keys are rejected so typos
// surface immediately. Throws ConfigError naming the offending field.
SweepConfig config_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const SweepConfig& cfg);

// Reads and parses the file; throws ConfigError for a missing or invalid
// document.
SweepConfig load_config_file(const std::string& path);

// Structural validation (positivity, axis/value agreement, scheme-specific
// limits). Throws ConfigError naming the field.
void validate_config(const SweepConfig& cfg);

// Non-fatal findings, e.g. zero-forcing schemes requested with more users
// than antennas (those rows will fail per-trial).
std::vector<std::string> config_warnings(const SweepConfig& cfg);

SweepConfig apply_overrides(SweepConfig cfg, const CliInvocation& inv);

}  // namespace slpris
