// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#pragma once

#include <functional>
#include <map>

#include "slpris/benchmarks.hpp"

namespace slpris {

// One aggregated output row: a scheme at one sweep value.
struct SweepRow {
  SchemeId scheme;
  double sweep_value = 0.0;
  double avg_power_dbm = 0.0;  // linear average converted at the end
  long trials = 0;             // realizations × blocks_per_realization
  double std_dev_db = 0.0;     // sample std of the per-block dBm values

  bool operator==(const SweepRow&) const = default;
};

// One per-block measurement (raw dump record).
struct TrialRecord {
  double sweep_value = 0.0;
  int realization = 0;
  int block = 0;
  SchemeId scheme{};
  double power_linear = 0.0;  // NaN when the scheme failed on this trial
};

struct SweepOutput {
  std::vector<SweepRow> rows;
  std::vector<TrialRecord> raw;
};

double to_dbm(double power_watts);

// One (realization, block) evaluation: the channel draw is a function of
// (seed, realization) only — blocks of a realization share it — and the
// symbol block is a function of (seed, realization, block). Scheme
// failures are recorded as NaN, they do not abort the trial.
std::map<SchemeId, double> run_trial(const SweepConfig& cfg, int realization, int block);

// Full sweep: every (scheme, sweep value) row; linear powers are averaged
// and only the final average is converted to dBm. Output is independent of
// the worker count.
SweepOutput run_sweep(const SweepConfig& cfg);

// Deterministic task-parallel map: results keyed by task index.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace slpris
