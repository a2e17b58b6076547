// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#pragma once

#include <cstdint>
#include <string>

#include "slpris/montecarlo.hpp"

namespace slpris {

// Aggregated CSV: header scheme,sweep_value,avg_power_dbm,trials,std_dev_db.
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Per-trial CSV: header seed,realization,block,scheme,power_linear.
std::string raw_csv(const std::vector<TrialRecord>& raw, std::uint64_t seed);

// Static line chart, one polyline per scheme.
std::string sweep_svg(const std::vector<SweepRow>& rows, const std::string& x_label);

// Throws IoError with the path on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace slpris
