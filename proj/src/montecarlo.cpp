// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#include "slpris/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "slpris/errors.hpp"
#include "slpris/rng.hpp"

namespace slpris {

namespace {

// Stream tags for child-seed derivation.
constexpr std::uint64_t kStreamChannel = 0xC4A17u;
constexpr std::uint64_t kStreamSymbols = 0x5B10Cu;

int effective_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

double to_dbm(double power_watts) { return 10.0 * std::log10(power_watts / 1e-3); }

SweepConfig apply_axis(const SweepConfig& cfg, double value) {
  SweepConfig out = cfg;
  switch (cfg.sweep_axis) {
    case SweepAxis::kBlockLength:
      out.block_length = static_cast<int>(value);
      break;
    case SweepAxis::kRisElements:
      out.ris_elements = static_cast<int>(value);
      break;
    case SweepAxis::kUsers:
      out.users = static_cast<int>(value);
      break;
  }
  return out;
}

std::map<SchemeId, double> run_trial(const SweepConfig& cfg, int realization, int block) {
  Rng ch_rng(derive_seed({cfg.seed, kStreamChannel, static_cast<std::uint64_t>(realization)}));
  const ScenarioGeometry geo = build_geometry(cfg, ch_rng);
  const ChannelSet channels = draw_scene_channels(geo, cfg, ch_rng);

  Rng sym_rng(derive_seed({cfg.seed, kStreamSymbols, static_cast<std::uint64_t>(realization),
                           static_cast<std::uint64_t>(block)}));
  const CMat data = draw_qpsk_block(cfg.block_length, cfg.users, sym_rng);

  QosTargets qos;
  qos.s.assign(static_cast<std::size_t>(cfg.users), cfg.qos_scale);

  std::map<SchemeId, double> powers;
  for (SchemeId id : cfg.schemes) {
    try {
      powers[id] = run_scheme(id, channels, data, qos);
    } catch (const Error&) {
      powers[id] = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return powers;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  const int w = std::min<std::size_t>(effective_workers(workers), std::max<std::size_t>(count, 1));
  if (w <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(w));
  for (int t = 0; t < w; ++t) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

SweepOutput run_sweep(const SweepConfig& cfg) {
  SweepOutput out;
  const std::size_t blocks = static_cast<std::size_t>(cfg.blocks_per_realization);
  const std::size_t tasks =
      static_cast<std::size_t>(cfg.realizations) * static_cast<std::size_t>(blocks);

  for (const double value : cfg.sweep_values) {
    const SweepConfig cfgv = apply_axis(cfg, value);
    std::vector<std::map<SchemeId, double>> results(tasks);
    parallel_for(tasks, cfg.threads, [&](std::size_t t) {
      results[t] = run_trial(cfgv, static_cast<int>(t / blocks), static_cast<int>(t % blocks));
    });

    // Raw dump in (realization, block, scheme) order.
    for (std::size_t t = 0; t < tasks; ++t)
      for (SchemeId id : cfg.schemes)
        out.raw.push_back({value, static_cast<int>(t / blocks), static_cast<int>(t % blocks), id,
                           results[t].at(id)});

    // Reduce on linear power; convert once at the end.
    for (SchemeId id : cfg.schemes) {
      double sum_linear = 0.0;
      std::vector<double> dbs;
      dbs.reserve(tasks);
      for (std::size_t t = 0; t < tasks; ++t) {
        const double p = results[t].at(id);
        if (std::isnan(p)) continue;
        sum_linear += p;
        dbs.push_back(to_dbm(p));
      }
      SweepRow row;
      row.scheme = id;
      row.sweep_value = value;
      row.trials = static_cast<long>(tasks);
      if (dbs.empty()) {
        row.avg_power_dbm = std::numeric_limits<double>::quiet_NaN();
        row.std_dev_db = std::numeric_limits<double>::quiet_NaN();
      } else {
        row.avg_power_dbm = to_dbm(sum_linear / static_cast<double>(dbs.size()));
        double mean_db = 0.0;
        for (double d : dbs) mean_db += d;
        mean_db /= static_cast<double>(dbs.size());
        double var = 0.0;
        for (double d : dbs) var += (d - mean_db) * (d - mean_db);
        row.std_dev_db = dbs.size() > 1
                             ? std::sqrt(var / static_cast<double>(dbs.size() - 1))
                             : 0.0;
      }
      out.rows.push_back(row);
    }
  }
  return out;
}

}  // namespace slpris
