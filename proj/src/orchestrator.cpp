// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#include "slpris/orchestrator.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "slpris/errors.hpp"

namespace slpris {

AlternationResult alternate_block(const ChannelSet& ch, const SymbolBlock& block,
                                  const PhaseConfig& theta0, const QosTargets& qos,
                                  const AlternateOpts& opts) {
  const int n_elems = ch.bs_ris.rows;
  if (static_cast<int>(theta0.theta.size()) != n_elems)
    throw InvalidArgument("alternate_block: initial phase length mismatch");

  const CMat targets = rotate_symbols(block);

  AlternationResult res;
  res.theta = theta0;
  res.x = solve_block(effective_channel(ch, theta0), targets, qos);
  res.power_trace.push_back(res.x.total_power);

  if (n_elems == 0 || theta0.beta == 0.0) {
    res.converged = true;
    return res;
  }

  while (res.iterations < opts.max_iter) {
    const PhaseConfig cand = optimize_phases(ch, res.x, targets, res.theta, opts.phase);
    PrecoderBlock x_cand = solve_block(effective_channel(ch, cand), targets, qos);
    ++res.iterations;

    if (x_cand.total_power <= res.x.total_power) {
      const double drop = res.x.total_power - x_cand.total_power;
      const double rel = drop / std::max(res.x.total_power, 1e-300);
      res.theta = cand;
      res.x = std::move(x_cand);
      res.power_trace.push_back(res.x.total_power);
      if (rel < opts.eps_conv) {
        res.converged = true;
        break;
      }
    } else {
      // Phase step is a surrogate ascent; a candidate that costs more is
      // discarded and the alternation stops at the incumbent.
      res.converged = true;
      break;
    }
  }
  return res;
}

RotationSearchResult rotation_search(const ChannelSet& ch, const CMat& data,
                                     const QosTargets& qos, const RotationOpts& opts) {
  const int k_users = data.cols;
  constexpr int kPsi = 4;
  constexpr int kMaxUsers = 8;
  if (k_users < 1) throw InvalidArgument("rotation_search: no users");
  if (k_users > kMaxUsers)
    throw BudgetExceeded("rotation_search: combination count 4^K exceeds budget, limit K <= " +
                         std::to_string(kMaxUsers));

  PhaseConfig theta0 = opts.theta0;
  if (theta0.theta.empty() && ch.bs_ris.rows > 0) {
    const double beta = theta0.beta;
    theta0 = identity_phases(ch.bs_ris.rows);
    theta0.beta = beta;
  }

  const long q = 1L << (2 * k_users);  // 4^K
  RotationSearchResult out;
  out.per_combo_power.reserve(static_cast<std::size_t>(q));

  SymbolBlock block;
  block.data = data;
  block.psi = kPsi;
  block.rotations.assign(static_cast<std::size_t>(k_users), 0.0);

  constexpr double kStep = 2.0 * std::numbers::pi / kPsi;
  double best_power = std::numeric_limits<double>::infinity();

  for (long combo = 0; combo < q; ++combo) {
    for (int u = 0; u < k_users; ++u) {
      const long digit = (combo >> (2 * (k_users - 1 - u))) & 3;
      block.rotations[u] = kStep * static_cast<double>(digit);
    }
    AlternationResult res;
    try {
      res = alternate_block(ch, block, theta0, qos, opts.alt);
    } catch (const InfeasibleSystem& e) {
      throw InfeasibleSystem(std::string(e.what()) + " (rotation combination " +
                                 std::to_string(combo) + ")",
                             e.violated_rows);
    }
    const double p = res.x.total_power;
    out.per_combo_power.push_back(p);
    if (p < best_power) {
      best_power = p;
      out.best_combo = static_cast<int>(combo);
      out.best_phi = block.rotations;
      out.best = std::move(res);
    }
  }
  return out;
}

}  // namespace slpris
