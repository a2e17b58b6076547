// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#include "slpris/slp.hpp"

#include <cmath>
#include <numbers>

#include "slpris/errors.hpp"

namespace slpris {

CMat rotate_symbols(const SymbolBlock& block) {
  const int l = block.data.rows, k = block.data.cols;
  if (static_cast<int>(block.rotations.size()) != k)
    throw InvalidArgument("rotate_symbols: rotation count mismatch");
  CMat out(l, k);
  std::vector<cplx> rot(static_cast<std::size_t>(k));
  for (int u = 0; u < k; ++u) rot[u] = std::polar(1.0, -block.rotations[u]);
  for (int r = 0; r < l; ++r)
    for (int u = 0; u < k; ++u) out(r, u) = rot[u] * block.data(r, u);
  return out;
}

RealSystem ci_system(const CMat& heff, const std::vector<cplx>& targets, const QosTargets& qos) {
  const int k_users = heff.rows, m = heff.cols;
  if (static_cast<int>(targets.size()) != k_users ||
      static_cast<int>(qos.s.size()) != k_users)
    throw InvalidArgument("ci_system: dimension mismatch");

  RealSystem sys;
  sys.g = Mat(2 * k_users, 2 * m);
  sys.c.assign(static_cast<std::size_t>(2 * k_users), 0.0);

  for (int k = 0; k < k_users; ++k) {
    if (!(qos.s[k] > 0.0)) throw InvalidArgument("ci_system: qos scale must be positive");
    const cplx d = targets[k];
    const double re = d.real(), im = d.imag();
    if (std::fabs(re) <= 1e-12 * std::abs(d) || std::fabs(im) <= 1e-12 * std::abs(d))
      throw UnsupportedConstellation("ci_system: axis-aligned symbol target");
    const double sr = re > 0.0 ? 1.0 : -1.0;
    const double si = im > 0.0 ? 1.0 : -1.0;

    // Row 2k:   sr·Re(h x) ≥ s·|Re d̃|, with Re(h x) = Re(h)·xr − Im(h)·xi.
    // Row 2k+1: si·Im(h x) ≥ s·|Im d̃|, with Im(h x) = Im(h)·xr + Re(h)·xi.
    for (int j = 0; j < m; ++j) {
      const cplx h = heff(k, j);
      sys.g(2 * k, j) = sr * h.real();
      sys.g(2 * k, m + j) = -sr * h.imag();
      sys.g(2 * k + 1, j) = si * h.imag();
      sys.g(2 * k + 1, m + j) = si * h.real();
    }
    sys.c[2 * k] = qos.s[k] * std::fabs(re);
    sys.c[2 * k + 1] = qos.s[k] * std::fabs(im);
  }
  return sys;
}

std::pair<std::vector<cplx>, double> solve_symbol_precoder(const CMat& heff,
                                                           const std::vector<cplx>& targets,
                                                           const QosTargets& qos) {
  const RealSystem sys = ci_system(heff, targets, qos);
  const QpSolution sol = solve_min_norm_qp(sys);
  const int m = heff.cols;
  std::vector<cplx> x(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) x[j] = cplx{sol.x[j], sol.x[m + j]};
  return {std::move(x), sol.power};
}

PrecoderBlock solve_block(const CMat& heff, const CMat& targets, const QosTargets& qos) {
  const int l = targets.rows, k = targets.cols, m = heff.cols;
  if (heff.rows != k) throw InvalidArgument("solve_block: channel/target mismatch");
  PrecoderBlock out;
  out.x = CMat(m, l);
  std::vector<cplx> slot(static_cast<std::size_t>(k));
  for (int s = 0; s < l; ++s) {
    for (int u = 0; u < k; ++u) slot[u] = targets(s, u);
    auto [x, p] = solve_symbol_precoder(heff, slot, qos);
    (void)p;
    for (int j = 0; j < m; ++j) out.x(j, s) = x[j];
  }
  out.total_power = block_power(out);
  return out;
}

double block_power(const PrecoderBlock& block) { return norm2_sq(block.x.a); }

CMat draw_qpsk_block(int l, int k, Rng& rng) {
  CMat out(l, k);
  constexpr double kQuarter = std::numbers::pi / 4.0;
  for (int r = 0; r < l; ++r)
    for (int u = 0; u < k; ++u) {
      const auto idx = rng.below(4);
      out(r, u) = std::polar(1.0, kQuarter + static_cast<double>(idx) * 2.0 * kQuarter);
    }
  return out;
}

}  // namespace slpris
