// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#include "slpris/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slpris/errors.hpp"
#include "slpris/kernels.hpp"

namespace slpris {

namespace {

// ‖W·(s ⊙ d)‖² summed over slots for a precomputed pseudo-inverse.
double zf_power_given_w(const CMat& w, const CMat& data, const QosTargets& qos) {
  const int m = w.rows, k = w.cols, l = data.rows;
  double total = 0.0;
  for (int s = 0; s < l; ++s) {
    for (int j = 0; j < m; ++j) {
      cplx acc{};
      for (int u = 0; u < k; ++u) acc += w(j, u) * (qos.s[u] * data(s, u));
      total += std::norm(acc);
    }
  }
  return total;
}

PhaseConfig default_theta(const PhaseConfig& given, int n_elems) {
  if (!given.theta.empty() || n_elems == 0) return given;
  PhaseConfig t = identity_phases(n_elems);
  t.beta = given.beta;
  return t;
}

}  // namespace

std::pair<std::vector<cplx>, double> zf_block(const CMat& heff, const std::vector<cplx>& targets,
                                              const QosTargets& qos) {
  const int k = heff.rows, m = heff.cols;
  if (static_cast<int>(targets.size()) != k || static_cast<int>(qos.s.size()) != k)
    throw InvalidArgument("zf_block: dimension mismatch");
  const CMat w = right_pseudo_inverse(heff);
  std::vector<cplx> x(static_cast<std::size_t>(m));
  double power = 0.0;
  for (int j = 0; j < m; ++j) {
    cplx acc{};
    for (int u = 0; u < k; ++u) acc += w(j, u) * (qos.s[u] * targets[u]);
    x[j] = acc;
    power += std::norm(acc);
  }
  return {std::move(x), power};
}

double zf_block_power(const CMat& heff, const CMat& data, const QosTargets& qos) {
  if (data.cols != heff.rows || static_cast<int>(qos.s.size()) != heff.rows)
    throw InvalidArgument("zf_block_power: dimension mismatch");
  const CMat w = right_pseudo_inverse(heff);
  return zf_power_given_w(w, data, qos);
}

double zf_with_ris(const ChannelSet& ch, const CMat& data, const QosTargets& qos,
                   const PhaseConfig& theta0, const SchemeOpts& opts) {
  const int k_users = ch.direct.rows, m = ch.direct.cols, n_elems = ch.bs_ris.rows;
  const PhaseConfig init = default_theta(theta0, n_elems);
  if (static_cast<int>(init.theta.size()) != n_elems)
    throw InvalidArgument("zf_with_ris: phase length mismatch");

  CMat heff = effective_channel(ch, init);
  double power = zf_block_power(heff, data, qos);
  if (n_elems == 0 || init.beta == 0.0) return power;

  const auto& kn = kern::active();
  PhaseConfig theta = init;
  std::vector<cplx> p(static_cast<std::size_t>(n_elems));
  for (int i = 0; i < n_elems; ++i) p[i] = std::polar(1.0, theta.theta[i]);

  CMat base(k_users, m), cand(k_users, m);
  for (int pass = 0; pass < opts.zf_max_passes; ++pass) {
    const double pass_start = power;
    for (int i = 0; i < n_elems; ++i) {
      // heff = base + e^{jθ_i}·(β·ris_user(·,i) ⊗ bs_ris(i,·))
      for (int u = 0; u < k_users; ++u) {
        const cplx scale = theta.beta * ch.ris_user(u, i);
        for (int j = 0; j < m; ++j) {
          const cplx r = scale * ch.bs_ris(i, j);
          base(u, j) = heff(u, j) - p[i] * r;
          cand(u, j) = r;
        }
      }
      auto eval = [&](double t) {
        const cplx f = std::polar(1.0, t);
        CMat h = base;
        for (int u = 0; u < k_users; ++u)
          kn.caxpy(f, cand.row(u), h.row(u), static_cast<std::size_t>(m));
        return -zf_block_power(h, data, qos);
      };
      const auto [t_best, neg_best] = line_scan_max(eval, opts.zf_grid_points, opts.zf_golden_tol);
      const double cand_power = -neg_best;
      if (cand_power < power - 1e-10 * (1.0 + power)) {
        const double t_new = std::fmod(t_best + 4.0 * std::numbers::pi, 2.0 * std::numbers::pi);
        p[i] = std::polar(1.0, t_new);
        theta.theta[i] = t_new;
        for (int u = 0; u < k_users; ++u)
          for (int j = 0; j < m; ++j) heff(u, j) = base(u, j) + p[i] * cand(u, j);
        power = cand_power;
      }
    }
    if (pass_start - power < opts.zf_rel_tol * std::max(power, 1e-300)) break;
  }
  return power;
}

double run_scheme(SchemeId id, const ChannelSet& ch, const CMat& data, const QosTargets& qos,
                  const SchemeOpts& opts) {
  const int n_elems = ch.bs_ris.rows;
  const PhaseConfig theta0 = default_theta(opts.theta0, n_elems);
  PhaseConfig theta_off = theta0;
  theta_off.beta = 0.0;

  switch (id) {
    case SchemeId::kProposed: {
      RotationOpts ropts{opts.alt, theta0};
      return rotation_search(ch, data, qos, ropts).best.x.total_power;
    }
    case SchemeId::kSlpFiniteNoRis: {
      RotationOpts ropts{opts.alt, theta_off};
      return rotation_search(ch, data, qos, ropts).best.x.total_power;
    }
    case SchemeId::kSlpConventionalRis: {
      SymbolBlock block{data, std::vector<double>(data.cols, 0.0), 4};
      return alternate_block(ch, block, theta0, qos, opts.alt).x.total_power;
    }
    case SchemeId::kSlpConventionalNoRis: {
      SymbolBlock block{data, std::vector<double>(data.cols, 0.0), 4};
      return alternate_block(ch, block, theta_off, qos, opts.alt).x.total_power;
    }
    case SchemeId::kZfRis:
      return zf_with_ris(ch, data, qos, theta0, opts);
    case SchemeId::kZfNoRis:
      return zf_block_power(ch.direct, data, qos);
  }
  throw InvalidArgument("run_scheme: unknown scheme");
}

}  // namespace slpris
