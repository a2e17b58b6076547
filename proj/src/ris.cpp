// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#include "slpris/ris.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "slpris/errors.hpp"
#include "slpris/kernels.hpp"

namespace slpris {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Acceptance guard: a candidate must beat the incumbent by more than the
// accumulated rounding slack of the objective evaluation, so the tracked
// Σz sequence is non-decreasing exactly and ties keep the incumbent.
double accept_guard(double incumbent) { return 1e-10 * (1.0 + std::fabs(incumbent)); }

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

struct TargetScales {
  std::vector<double> sr, si, inv_ar, inv_ai;  // flattened k·L + ℓ
};

TargetScales make_scales(const CMat& targets) {
  const int l = targets.rows, k = targets.cols;
  TargetScales ts;
  const std::size_t total = static_cast<std::size_t>(l) * k;
  ts.sr.resize(total);
  ts.si.resize(total);
  ts.inv_ar.resize(total);
  ts.inv_ai.resize(total);
  for (int u = 0; u < k; ++u)
    for (int s = 0; s < l; ++s) {
      const cplx d = targets(s, u);
      const double re = d.real(), im = d.imag();
      if (std::fabs(re) <= 1e-12 * std::abs(d) || std::fabs(im) <= 1e-12 * std::abs(d))
        throw UnsupportedConstellation("phase design: axis-aligned symbol target");
      const std::size_t e = static_cast<std::size_t>(u) * l + s;
      ts.sr[e] = re > 0.0 ? 1.0 : -1.0;
      ts.si[e] = im > 0.0 ? 1.0 : -1.0;
      ts.inv_ar[e] = 1.0 / std::fabs(re);
      ts.inv_ai[e] = 1.0 / std::fabs(im);
    }
  return ts;
}

}  // namespace

MarginTable margins(const ChannelSet& ch, const PhaseConfig& phase, const PrecoderBlock& x,
                    const CMat& targets) {
  const int k_users = ch.direct.rows, m = ch.direct.cols;
  const int l = x.x.cols;
  if (x.x.rows != m || targets.rows != l || targets.cols != k_users)
    throw InvalidArgument("margins: dimension mismatch");

  const CMat heff = effective_channel(ch, phase);
  MarginTable out;
  out.z = Mat(l, k_users);
  for (int s = 0; s < l; ++s)
    for (int u = 0; u < k_users; ++u) {
      cplx t{};
      for (int j = 0; j < m; ++j) t += heff(u, j) * x.x(j, s);
      const cplx d = targets(s, u);
      const double re = d.real(), im = d.imag();
      const double mu = (re > 0.0 ? t.real() : -t.real()) / std::fabs(re);
      const double mv = (im > 0.0 ? t.imag() : -t.imag()) / std::fabs(im);
      out.z(s, u) = std::min(mu, mv);
    }
  return out;
}

double sum_margins(const MarginTable& table) {
  double acc = 0.0;
  for (double v : table.z.a) acc += v;
  return acc;
}

std::pair<cplx, cplx> phase_profile(const ChannelSet& ch, const PhaseConfig& phase,
                                    const PrecoderBlock& x, int k, int l, int n) {
  const int k_users = ch.direct.rows, m = ch.direct.cols, n_elems = ch.bs_ris.rows;
  if (k < 0 || k >= k_users || l < 0 || l >= x.x.cols || n < 0 || n >= n_elems)
    throw InvalidArgument("phase_profile: index out of range");

  const auto& kn = kern::active();
  std::vector<cplx> slot(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) slot[j] = x.x(j, l);

  cplx a = kn.cdotu(ch.direct.row(k), slot.data(), static_cast<std::size_t>(m));
  cplx b{};
  for (int i = 0; i < n_elems; ++i) {
    const cplx contrib =
        phase.beta * ch.ris_user(k, i) * kn.cdotu(ch.bs_ris.row(i), slot.data(), static_cast<std::size_t>(m));
    if (i == n)
      b = contrib;
    else
      a += std::polar(1.0, phase.theta[i]) * contrib;
  }
  return {a, b};
}

std::pair<double, double> line_scan_max(const std::function<double(double)>& f, int grid_points,
                                        double tol) {
  double best_t = 0.0;
  double best_f = -std::numeric_limits<double>::infinity();
  const double step = kTwoPi / grid_points;
  for (int g = 0; g < grid_points; ++g) {
    const double t = g * step;
    const double v = f(t);
    if (v > best_f) {
      best_f = v;
      best_t = t;
    }
  }

  // Golden-section refinement on the bracket around the best grid point.
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = best_t - step, hi = best_t + step;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  auto track = [&](double t, double v) {
    if (v > best_f) {
      best_f = v;
      best_t = t;
    }
  };
  track(x1, f1);
  track(x2, f2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
      track(x2, f2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
      track(x1, f1);
    }
  }
  return {best_t, best_f};
}

PhaseConfig optimize_phases(const ChannelSet& ch, const PrecoderBlock& x, const CMat& targets,
                            const PhaseConfig& theta_init, const PhaseOpts& opts) {
  const int k_users = ch.direct.rows, m = ch.direct.cols, n_elems = ch.bs_ris.rows;
  const int l = x.x.cols;
  if (static_cast<int>(theta_init.theta.size()) != n_elems)
    throw InvalidArgument("optimize_phases: phase length mismatch");
  if (x.x.rows != m || targets.rows != l || targets.cols != k_users)
    throw InvalidArgument("optimize_phases: dimension mismatch");

  PhaseConfig theta = theta_init;
  if (n_elems == 0 || theta.beta == 0.0 || l == 0 || k_users == 0) return theta;

  const auto& kn = kern::active();
  const std::size_t entries = static_cast<std::size_t>(k_users) * l;
  const TargetScales ts = make_scales(targets);

  // hx(n, ℓ) = Σ_j bs_ris(n,j)·x(j,ℓ), fixed for the whole call.
  CMat hx(n_elems, l);
  {
    std::vector<cplx> slot(static_cast<std::size_t>(m));
    for (int s = 0; s < l; ++s) {
      for (int j = 0; j < m; ++j) slot[j] = x.x(j, s);
      for (int i = 0; i < n_elems; ++i)
        hx(i, s) = kn.cdotu(ch.bs_ris.row(i), slot.data(), static_cast<std::size_t>(m));
    }
  }

  // contrib[n][e]: the element-n term of the received sample for entry
  // e = k·L + ℓ (β folded in); received(e) = direct(e) + Σ_n p_n·contrib[n][e].
  std::vector<std::vector<cplx>> contrib(static_cast<std::size_t>(n_elems),
                                         std::vector<cplx>(entries));
  for (int i = 0; i < n_elems; ++i)
    for (int u = 0; u < k_users; ++u) {
      const cplx scale = theta.beta * ch.ris_user(u, i);
      for (int s = 0; s < l; ++s)
        contrib[i][static_cast<std::size_t>(u) * l + s] = scale * hx(i, s);
    }

  std::vector<cplx> received(entries);
  std::vector<cplx> p(static_cast<std::size_t>(n_elems));
  for (int i = 0; i < n_elems; ++i) p[i] = std::polar(1.0, theta.theta[i]);
  {
    std::vector<cplx> slot(static_cast<std::size_t>(m));
    for (int u = 0; u < k_users; ++u)
      for (int s = 0; s < l; ++s) {
        for (int j = 0; j < m; ++j) slot[j] = x.x(j, s);
        cplx t = kn.cdotu(ch.direct.row(u), slot.data(), static_cast<std::size_t>(m));
        const std::size_t e = static_cast<std::size_t>(u) * l + s;
        for (int i = 0; i < n_elems; ++i) t += p[i] * contrib[i][e];
        received[e] = t;
      }
  }

  auto objective_now = [&] {
    double acc = 0.0;
    for (std::size_t e = 0; e < entries; ++e) {
      const double mu = ts.sr[e] * received[e].real() * ts.inv_ar[e];
      const double mv = ts.si[e] * received[e].imag() * ts.inv_ai[e];
      acc += std::min(mu, mv);
    }
    return acc;
  };

  std::vector<double> u0(entries), uc(entries), us(entries), v0(entries), vc(entries),
      vs(entries);
  std::vector<double> trace;
  double obj = objective_now();

  for (int pass = 0; pass < opts.max_passes; ++pass) {
    const double pass_start = obj;
    for (int i = 0; i < n_elems; ++i) {
      const auto& ci = contrib[i];
      for (std::size_t e = 0; e < entries; ++e) {
        const cplx a = received[e] - p[i] * ci[e];
        const cplx b = ci[e];
        u0[e] = ts.sr[e] * a.real() * ts.inv_ar[e];
        uc[e] = ts.sr[e] * b.real() * ts.inv_ar[e];
        us[e] = -ts.sr[e] * b.imag() * ts.inv_ar[e];
        v0[e] = ts.si[e] * a.imag() * ts.inv_ai[e];
        vc[e] = ts.si[e] * b.imag() * ts.inv_ai[e];
        vs[e] = ts.si[e] * b.real() * ts.inv_ai[e];
      }
      auto eval = [&](double t) {
        return kn.sum_min_sinusoid(u0.data(), uc.data(), us.data(), v0.data(), vc.data(),
                                   vs.data(), entries, std::cos(t), std::sin(t));
      };
      const double f_inc = eval(theta.theta[i]);
      const auto [t_best, f_best] = line_scan_max(eval, opts.grid_points, opts.golden_tol);
      if (f_best > f_inc + accept_guard(f_inc)) {
        const double t_new = wrap_angle(t_best);
        const cplx p_new = std::polar(1.0, t_new);
        const cplx dp = p_new - p[i];
        for (std::size_t e = 0; e < entries; ++e) received[e] += dp * ci[e];
        p[i] = p_new;
        theta.theta[i] = t_new;
        obj = f_best;
      }
      trace.push_back(obj);
    }
    if (obj - pass_start < opts.rel_tol * std::max(std::fabs(obj), 1e-300)) break;
  }

  if (opts.trace_sink) opts.trace_sink->push_back(std::move(trace));
  return theta;
}

}  // namespace slpris
