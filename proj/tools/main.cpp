// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "slpris/config.hpp"
#include "slpris/errors.hpp"
#include "slpris/montecarlo.hpp"
#include "slpris/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

std::string axis_label(slpris::SweepAxis axis) {
  switch (axis) {
    case slpris::SweepAxis::kBlockLength: return "block length";
    case slpris::SweepAxis::kRisElements: return "number of surface elements";
    case slpris::SweepAxis::kUsers: return "number of users";
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transmit-power sweeps for symbol-level precoding with a reconfigurable surface"};

  slpris::CliInvocation inv;
  std::string sweep_flag;
  std::uint64_t seed_flag = 0;
  int realizations_flag = 0;
  int threads_flag = -1;

  app.add_option("--config", inv.config_path, "experiment configuration (JSON)")->required();
  app.add_option("--sweep", sweep_flag, "sweep axis override: block-length | ris-elements | users");
  auto* seed_opt = app.add_option("--seed", seed_flag, "master seed override");
  auto* real_opt = app.add_option("--realizations", realizations_flag, "channel realization count override");
  app.add_option("--out", inv.output_csv, "aggregated CSV output path")->required();
  std::string plot_path, raw_path;
  auto* plot_opt = app.add_option("--plot", plot_path, "SVG chart output path");
  auto* raw_opt = app.add_option("--raw", raw_path, "per-trial CSV dump path");
  auto* threads_opt = app.add_option("--threads", threads_flag, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (!sweep_flag.empty()) {
    if (sweep_flag == "block-length")
      inv.sweep_override = slpris::SweepAxis::kBlockLength;
    else if (sweep_flag == "ris-elements")
      inv.sweep_override = slpris::SweepAxis::kRisElements;
    else if (sweep_flag == "users")
      inv.sweep_override = slpris::SweepAxis::kUsers;
    else {
      std::fprintf(stderr, "error: --sweep: unknown axis '%s'\n", sweep_flag.c_str());
      return kExitConfig;
    }
  }
  if (*seed_opt) inv.seed_override = seed_flag;
  if (*real_opt) inv.realizations_override = realizations_flag;
  if (*threads_opt) inv.threads_override = threads_flag;
  if (*plot_opt) inv.plot_svg = plot_path;
  if (*raw_opt) inv.raw_dump = raw_path;

  slpris::SweepConfig cfg;
  try {
    cfg = slpris::load_config_file(inv.config_path);
    cfg = slpris::apply_overrides(cfg, inv);
  } catch (const slpris::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  }
  for (const std::string& w : slpris::config_warnings(cfg))
    std::fprintf(stderr, "warning: %s\n", w.c_str());

  try {
    const slpris::SweepOutput out = slpris::run_sweep(cfg);
    slpris::write_file(inv.output_csv, slpris::sweep_csv(out.rows));
    if (inv.raw_dump) slpris::write_file(*inv.raw_dump, slpris::raw_csv(out.raw, cfg.seed));
    if (inv.plot_svg)
      slpris::write_file(*inv.plot_svg, slpris::sweep_svg(out.rows, axis_label(cfg.sweep_axis)));

    std::printf("%-26s %12s %16s %8s %12s\n", "scheme", "sweep_value", "avg_power_dbm", "trials",
                "std_dev_db");
    for (const slpris::SweepRow& r : out.rows)
      std::printf("%-26s %12g %16.3f %8ld %12.3f\n", slpris::scheme_tag(r.scheme), r.sweep_value,
                  r.avg_power_dbm, r.trials, r.std_dev_db);
  } catch (const slpris::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitOk;
}
