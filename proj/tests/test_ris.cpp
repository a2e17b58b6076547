// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "slpris/errors.hpp"
#include "slpris/ris.hpp"
#include "support/oracles.hpp"

using namespace slpris;

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

// N=1 toy: zero direct link, scalar cascade, so the received sample is
// x·e^{jθ} and the margin is √2·min(cosθ, sinθ) for the first-quadrant
// symbol.
struct Toy {
  ChannelSet ch;
  PrecoderBlock x;
  CMat targets;
};

Toy make_toy() {
  Toy t;
  t.ch.direct = CMat(1, 1);
  t.ch.bs_ris = CMat(1, 1);
  t.ch.bs_ris(0, 0) = 1.0;
  t.ch.ris_user = CMat(1, 1);
  t.ch.ris_user(0, 0) = 1.0;
  t.x.x = CMat(1, 1);
  t.x.x(0, 0) = 1.0;
  t.x.total_power = 1.0;
  t.targets = CMat(1, 1);
  t.targets(0, 0) = cplx{kInvSqrt2, kInvSqrt2};
  return t;
}

// Random instance with O(1) channels and QPSK targets; precoder entries
// random (margins may be negative, which the optimizer must handle).
struct Instance {
  ChannelSet ch;
  PrecoderBlock x;
  CMat targets;
};

Instance random_instance(int k, int m, int n, int l, Rng& rng) {
  Instance ins;
  ins.ch = test::random_channelset(k, m, n, rng);
  ins.x.x = test::random_cmat(m, l, rng);
  ins.x.total_power = norm2_sq(ins.x.x.a);
  ins.targets = CMat(l, k);
  for (auto& v : ins.targets.a) v = test::random_qpsk(rng);
  return ins;
}

double objective_at(const Instance& ins, const PhaseConfig& phase) {
  return sum_margins(margins(ins.ch, phase, ins.x, ins.targets));
}

}  // namespace

TEST_CASE("margins: closed form on the N=1 toy") {
  const Toy t = make_toy();
  for (double theta : {0.2, std::numbers::pi / 4.0, 1.2, 4.0}) {
    const MarginTable table = margins(t.ch, {{theta}, 1.0}, t.x, t.targets);
    const double want = std::sqrt(2.0) * std::min(std::cos(theta), std::sin(theta));
    CHECK(table.z(0, 0) == doctest::Approx(want).epsilon(1e-12));
  }
  const MarginTable at_peak = margins(t.ch, {{std::numbers::pi / 4.0}, 1.0}, t.x, t.targets);
  CHECK(at_peak.z(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("margins scale linearly with the precoder") {
  Rng rng(31);
  Instance ins = random_instance(2, 3, 4, 3, rng);
  PhaseConfig phase = identity_phases(4);
  const MarginTable base = margins(ins.ch, phase, ins.x, ins.targets);
  for (auto& v : ins.x.x.a) v *= 2.0;
  const MarginTable doubled = margins(ins.ch, phase, ins.x, ins.targets);
  for (int i = 0; i < base.z.rows; ++i)
    for (int j = 0; j < base.z.cols; ++j)
      CHECK(doubled.z(i, j) == doctest::Approx(2.0 * base.z(i, j)).epsilon(1e-12));
}

TEST_CASE("margins of a solved precoder clear the thresholds") {
  Rng rng(32);
  const int k = 2, m = 3, l = 4, n = 5;
  const auto ch = test::random_channelset(k, m, n, rng);
  PhaseConfig phase = identity_phases(n);
  CMat targets(l, k);
  for (auto& v : targets.a) v = test::random_qpsk(rng);
  QosTargets qos{std::vector<double>(k, 1.3)};
  const PrecoderBlock x = solve_block(effective_channel(ch, phase), targets, qos);
  const MarginTable table = margins(ch, phase, x, targets);
  for (int s = 0; s < l; ++s)
    for (int u = 0; u < k; ++u) CHECK(table.z(s, u) >= 1.3 - 1e-8);
}

TEST_CASE("phase_profile: N=1 decomposition and zero-coupling") {
  const Toy t = make_toy();
  const auto [a, b] = phase_profile(t.ch, {{0.7}, 1.0}, t.x, 0, 0, 0);
  CHECK(std::abs(a) <= 1e-15);           // zero direct link
  CHECK(std::abs(b - cplx{1.0, 0.0}) <= 1e-15);

  Toy t2 = make_toy();
  t2.ch.ris_user(0, 0) = 0.0;
  const auto [a2, b2] = phase_profile(t2.ch, {{0.7}, 1.0}, t2.x, 0, 0, 0);
  CHECK(std::abs(b2) == 0.0);
}

TEST_CASE("phase_profile reconstructs the received sample exactly") {
  Rng rng(33);
  const Instance ins = random_instance(2, 3, 5, 2, rng);
  PhaseConfig phase = identity_phases(5);
  for (auto& v : phase.theta) v = rng.uniform(0.0, 2.0 * std::numbers::pi);

  const CMat heff = effective_channel(ins.ch, phase);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = static_cast<int>(rng.below(2));
    const int l = static_cast<int>(rng.below(2));
    const int n = static_cast<int>(rng.below(5));
    const auto [a, b] = phase_profile(ins.ch, phase, ins.x, k, l, n);
    cplx direct{};
    for (int j = 0; j < 3; ++j) direct += heff(k, j) * ins.x.x(j, l);
    const cplx via_profile = a + b * std::polar(1.0, phase.theta[n]);
    CHECK(std::abs(via_profile - direct) <= 1e-12 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("phase_profile rejects out-of-range indices") {
  const Toy t = make_toy();
  CHECK_THROWS_AS(phase_profile(t.ch, {{0.0}, 1.0}, t.x, 0, 0, 1), InvalidArgument);
}

TEST_CASE("optimizer finds the symmetric peak of the N=1 toy") {
  const Toy t = make_toy();
  const PhaseConfig out = optimize_phases(t.ch, t.x, t.targets, identity_phases(1));
  CHECK(out.theta[0] == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-3));
  const double obj = sum_margins(margins(t.ch, out, t.x, t.targets));
  CHECK(obj == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("optimizer leaves zero-coupling instances untouched") {
  Rng rng(34);
  Instance ins = random_instance(2, 3, 4, 2, rng);
  for (auto& v : ins.ch.ris_user.a) v = 0.0;
  PhaseConfig init = identity_phases(4);
  init.theta = {0.3, 1.1, 2.2, 5.0};
  const PhaseConfig out = optimize_phases(ins.ch, ins.x, ins.targets, init);
  CHECK(out.theta == init.theta);
}

TEST_CASE("optimizer matches a dense 1-D grid oracle") {
  Rng rng(35);
  for (int rep = 0; rep < 20; ++rep) {
    const Instance ins = random_instance(1 + static_cast<int>(rng.below(2)), 2, 1,
                                         1 + static_cast<int>(rng.below(2)), rng);
    const PhaseConfig out = optimize_phases(ins.ch, ins.x, ins.targets, identity_phases(1));
    const double got = objective_at(ins, out);
    double best = -1e300;
    for (int g = 0; g < 720; ++g) {
      const double t = 2.0 * std::numbers::pi * g / 720.0;
      best = std::max(best, objective_at(ins, {{t}, 1.0}));
    }
    CHECK(got >= best - 1e-3);
  }
}

TEST_CASE("optimizer matches a dense 2-D grid oracle") {
  Rng rng(36);
  for (int rep = 0; rep < 3; ++rep) {
    const Instance ins = random_instance(1, 2, 2, 1, rng);
    const PhaseConfig out = optimize_phases(ins.ch, ins.x, ins.targets, identity_phases(2));
    const double got = objective_at(ins, out);
    double best = -1e300;
    for (int g1 = 0; g1 < 720; ++g1)
      for (int g2 = 0; g2 < 720; ++g2) {
        const double t1 = 2.0 * std::numbers::pi * g1 / 720.0;
        const double t2 = 2.0 * std::numbers::pi * g2 / 720.0;
        best = std::max(best, objective_at(ins, {{t1, t2}, 1.0}));
      }
    CHECK(got >= best - 1e-3);
  }
}

TEST_CASE("coordinate updates never decrease the tracked objective") {
  Rng rng(37);
  for (int rep = 0; rep < 20; ++rep) {
    const Instance ins = random_instance(2, 3, 6, 3, rng);
    std::vector<std::vector<double>> traces;
    PhaseOpts opts;
    opts.trace_sink = &traces;
    PhaseConfig init = identity_phases(6);
    for (auto& v : init.theta) v = rng.uniform(0.0, 2.0 * std::numbers::pi);
    optimize_phases(ins.ch, ins.x, ins.targets, init, opts);
    REQUIRE(traces.size() == 1);
    for (std::size_t i = 1; i < traces[0].size(); ++i)
      CHECK(traces[0][i] >= traces[0][i - 1]);  // exact
  }
}

TEST_CASE("optimizer never returns less than the initial objective") {
  Rng rng(38);
  for (int rep = 0; rep < 20; ++rep) {
    const Instance ins = random_instance(2, 2, 5, 2, rng);
    PhaseConfig init = identity_phases(5);
    for (auto& v : init.theta) v = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double before = objective_at(ins, init);
    const PhaseConfig out = optimize_phases(ins.ch, ins.x, ins.targets, init);
    const double after = objective_at(ins, out);
    CHECK(after >= before - 1e-9 * (1.0 + std::fabs(before)));
  }
}

TEST_CASE("tracked objective agrees with a margins recomputation") {
  Rng rng(39);
  const Instance ins = random_instance(2, 3, 8, 4, rng);
  std::vector<std::vector<double>> traces;
  PhaseOpts opts;
  opts.trace_sink = &traces;
  const PhaseConfig out = optimize_phases(ins.ch, ins.x, ins.targets, identity_phases(8), opts);
  REQUIRE(traces.size() == 1);
  REQUIRE(!traces[0].empty());
  const double tracked = traces[0].back();
  const double recomputed = objective_at(ins, out);
  CHECK(recomputed == doctest::Approx(tracked).epsilon(1e-9));
}

TEST_CASE("objective is 2pi periodic in the initial point") {
  Rng rng(40);
  const Instance ins = random_instance(2, 2, 4, 2, rng);
  PhaseConfig init = identity_phases(4);
  for (auto& v : init.theta) v = rng.uniform(0.0, 2.0 * std::numbers::pi);
  PhaseConfig shifted = init;
  for (auto& v : shifted.theta) {
    v = std::fmod(v + 2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
  }
  const double o1 = objective_at(ins, optimize_phases(ins.ch, ins.x, ins.targets, init));
  const double o2 = objective_at(ins, optimize_phases(ins.ch, ins.x, ins.targets, shifted));
  CHECK(o1 == doctest::Approx(o2).epsilon(1e-9));
}

TEST_CASE("empty surface is a no-op") {
  Rng rng(41);
  const Instance ins = random_instance(2, 3, 0, 2, rng);
  const PhaseConfig out = optimize_phases(ins.ch, ins.x, ins.targets, identity_phases(0));
  CHECK(out.theta.empty());
}
