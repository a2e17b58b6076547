// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#include "slpris/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "slpris/errors.hpp"

namespace slpris {

namespace {

using nlohmann::json;

void expect_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError(key, "expected a number");
}

double get_number(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  expect_number(j.at(key), key);
  return j.at(key).get<double>();
}

int get_int(const json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
  return v.get<int>();
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "bs_antennas", "users", "ris_elements", "block_length",
      "carrier_hz", "qos_scale", "rician_db",
      "pathloss_exp_bs_ris", "pathloss_exp_ris_user", "pathloss_exp_bs_user",
      "bs_height_m", "user_height_m", "ris_height_m", "ris_x_distance_m",
      "element_spacing_wavelengths", "user_y_min_m", "user_y_max_m",
      "realizations", "blocks_per_realization",
      "sweep_axis", "sweep_values", "seed", "schemes", "threads",
  };
  return keys;
}

bool uses_rotation_search(const SweepConfig& cfg) {
  for (SchemeId id : cfg.schemes)
    if (id == SchemeId::kProposed || id == SchemeId::kSlpFiniteNoRis) return true;
  return false;
}

bool uses_zero_forcing(const SweepConfig& cfg) {
  for (SchemeId id : cfg.schemes)
    if (id == SchemeId::kZfRis || id == SchemeId::kZfNoRis) return true;
  return false;
}

}  // namespace

SweepConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("(document)", "expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (!known_keys().contains(key)) throw ConfigError(key, "unknown field");

  SweepConfig cfg;
  cfg.bs_antennas = get_int(j, "bs_antennas", cfg.bs_antennas);
  cfg.users = get_int(j, "users", cfg.users);
  cfg.ris_elements = get_int(j, "ris_elements", cfg.ris_elements);
  cfg.block_length = get_int(j, "block_length", cfg.block_length);
  cfg.carrier_hz = get_number(j, "carrier_hz", cfg.carrier_hz);
  cfg.qos_scale = get_number(j, "qos_scale", cfg.qos_scale);
  cfg.rician_db = get_number(j, "rician_db", cfg.rician_db);
  cfg.pathloss_exp_bs_ris = get_number(j, "pathloss_exp_bs_ris", cfg.pathloss_exp_bs_ris);
  cfg.pathloss_exp_ris_user = get_number(j, "pathloss_exp_ris_user", cfg.pathloss_exp_ris_user);
  cfg.pathloss_exp_bs_user = get_number(j, "pathloss_exp_bs_user", cfg.pathloss_exp_bs_user);
  cfg.bs_height_m = get_number(j, "bs_height_m", cfg.bs_height_m);
  cfg.user_height_m = get_number(j, "user_height_m", cfg.user_height_m);
  cfg.ris_height_m = get_number(j, "ris_height_m", cfg.ris_height_m);
  cfg.ris_x_distance_m = get_number(j, "ris_x_distance_m", cfg.ris_x_distance_m);
  cfg.element_spacing_wavelengths =
      get_number(j, "element_spacing_wavelengths", cfg.element_spacing_wavelengths);
  cfg.user_y_min_m = get_number(j, "user_y_min_m", cfg.user_y_min_m);
  cfg.user_y_max_m = get_number(j, "user_y_max_m", cfg.user_y_max_m);
  cfg.realizations = get_int(j, "realizations", cfg.realizations);
  cfg.blocks_per_realization = get_int(j, "blocks_per_realization", cfg.blocks_per_realization);
  cfg.threads = get_int(j, "threads", cfg.threads);

  if (j.contains("seed")) {
    const json& v = j.at("seed");
    if (!v.is_number_unsigned() && !v.is_number_integer())
      throw ConfigError("seed", "expected a nonnegative integer");
    cfg.seed = v.get<std::uint64_t>();
  }
  if (j.contains("sweep_axis")) {
    const json& v = j.at("sweep_axis");
    if (!v.is_string()) throw ConfigError("sweep_axis", "expected a string");
    const auto axis = axis_from_tag(v.get<std::string>());
    if (!axis)
      throw ConfigError("sweep_axis", "must be one of block_length, ris_elements, users");
    cfg.sweep_axis = *axis;
  }
  if (j.contains("sweep_values")) {
    const json& v = j.at("sweep_values");
    if (!v.is_array()) throw ConfigError("sweep_values", "expected an array of numbers");
    cfg.sweep_values.clear();
    for (const json& e : v) {
      expect_number(e, "sweep_values");
      cfg.sweep_values.push_back(e.get<double>());
    }
  }
  if (j.contains("schemes")) {
    const json& v = j.at("schemes");
    if (!v.is_array()) throw ConfigError("schemes", "expected an array of scheme tags");
    cfg.schemes.clear();
    for (const json& e : v) {
      if (!e.is_string()) throw ConfigError("schemes", "expected a string tag");
      const auto id = scheme_from_tag(e.get<std::string>());
      if (!id) throw ConfigError("schemes", "unknown scheme tag: " + e.get<std::string>());
      cfg.schemes.push_back(*id);
    }
  }
  validate_config(cfg);
  return cfg;
}

json config_to_json(const SweepConfig& cfg) {
  json j;
  j["bs_antennas"] = cfg.bs_antennas;
  j["users"] = cfg.users;
  j["ris_elements"] = cfg.ris_elements;
  j["block_length"] = cfg.block_length;
  j["carrier_hz"] = cfg.carrier_hz;
  j["qos_scale"] = cfg.qos_scale;
  j["rician_db"] = cfg.rician_db;
  j["pathloss_exp_bs_ris"] = cfg.pathloss_exp_bs_ris;
  j["pathloss_exp_ris_user"] = cfg.pathloss_exp_ris_user;
  j["pathloss_exp_bs_user"] = cfg.pathloss_exp_bs_user;
  j["bs_height_m"] = cfg.bs_height_m;
  j["user_height_m"] = cfg.user_height_m;
  j["ris_height_m"] = cfg.ris_height_m;
  j["ris_x_distance_m"] = cfg.ris_x_distance_m;
  j["element_spacing_wavelengths"] = cfg.element_spacing_wavelengths;
  j["user_y_min_m"] = cfg.user_y_min_m;
  j["user_y_max_m"] = cfg.user_y_max_m;
  j["realizations"] = cfg.realizations;
  j["blocks_per_realization"] = cfg.blocks_per_realization;
  j["sweep_axis"] = axis_tag(cfg.sweep_axis);
  j["sweep_values"] = cfg.sweep_values;
  j["seed"] = cfg.seed;
  json tags = json::array();
  for (SchemeId id : cfg.schemes) tags.push_back(scheme_tag(id));
  j["schemes"] = tags;
  j["threads"] = cfg.threads;
  return j;
}

SweepConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("JSON parse error: ") + e.what());
  }
  return config_from_json(j);
}

void validate_config(const SweepConfig& cfg) {
  if (cfg.bs_antennas < 1) throw ConfigError("bs_antennas", "must be >= 1");
  if (cfg.users < 1) throw ConfigError("users", "must be >= 1");
  if (cfg.ris_elements < 0) throw ConfigError("ris_elements", "must be >= 0");
  if (cfg.block_length < 1) throw ConfigError("block_length", "must be >= 1");
  if (!(cfg.carrier_hz > 0.0)) throw ConfigError("carrier_hz", "must be positive");
  if (!(cfg.qos_scale > 0.0)) throw ConfigError("qos_scale", "must be positive");
  if (!std::isfinite(cfg.rician_db)) throw ConfigError("rician_db", "must be finite");
  if (!(cfg.pathloss_exp_bs_ris > 0.0)) throw ConfigError("pathloss_exp_bs_ris", "must be positive");
  if (!(cfg.pathloss_exp_ris_user > 0.0))
    throw ConfigError("pathloss_exp_ris_user", "must be positive");
  if (!(cfg.pathloss_exp_bs_user > 0.0))
    throw ConfigError("pathloss_exp_bs_user", "must be positive");
  if (!(cfg.element_spacing_wavelengths > 0.0))
    throw ConfigError("element_spacing_wavelengths", "must be positive");
  if (!(cfg.user_y_min_m > 0.0)) throw ConfigError("user_y_min_m", "must be positive");
  if (cfg.user_y_max_m < cfg.user_y_min_m)
    throw ConfigError("user_y_max_m", "must be >= user_y_min_m");
  if (cfg.realizations < 1) throw ConfigError("realizations", "must be >= 1");
  if (cfg.blocks_per_realization < 1)
    throw ConfigError("blocks_per_realization", "must be >= 1");
  if (cfg.threads < 0) throw ConfigError("threads", "must be >= 0");
  if (cfg.schemes.empty()) throw ConfigError("schemes", "must list at least one scheme");
  if (cfg.sweep_values.empty()) throw ConfigError("sweep_values", "must not be empty");

  const bool rotation = uses_rotation_search(cfg);
  if (rotation && cfg.users > 8)
    throw ConfigError("users", "rotation search budget is limited to 8 users (4^K combinations)");

  for (double v : cfg.sweep_values) {
    if (std::floor(v) != v) throw ConfigError("sweep_values", "values must be integers");
    switch (cfg.sweep_axis) {
      case SweepAxis::kBlockLength:
        if (v < 1) throw ConfigError("sweep_values", "block lengths must be >= 1");
        break;
      case SweepAxis::kRisElements:
        if (v < 0) throw ConfigError("sweep_values", "element counts must be >= 0");
        break;
      case SweepAxis::kUsers:
        if (v < 1) throw ConfigError("sweep_values", "user counts must be >= 1");
        if (rotation && v > 8)
          throw ConfigError("sweep_values",
                            "rotation search budget is limited to 8 users (4^K combinations)");
        break;
    }
  }
}

std::vector<std::string> config_warnings(const SweepConfig& cfg) {
  std::vector<std::string> warnings;
  if (!uses_zero_forcing(cfg)) return warnings;
  int max_users = cfg.users;
  if (cfg.sweep_axis == SweepAxis::kUsers)
    for (double v : cfg.sweep_values) max_users = std::max(max_users, static_cast<int>(v));
  if (max_users > cfg.bs_antennas)
    warnings.push_back(
        "zero-forcing schemes need users <= bs_antennas; affected trials will be "
        "recorded as failures");
  return warnings;
}

SweepConfig apply_overrides(SweepConfig cfg, const CliInvocation& inv) {
  if (inv.sweep_override) cfg.sweep_axis = *inv.sweep_override;
  if (inv.seed_override) cfg.seed = *inv.seed_override;
  if (inv.realizations_override) cfg.realizations = *inv.realizations_override;
  if (inv.threads_override) cfg.threads = *inv.threads_override;
  validate_config(cfg);
  return cfg;
}

}  // namespace slpris
