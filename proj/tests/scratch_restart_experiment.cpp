// Scratch experiment (not part of the suite): miss rate of coordinate
// ascent vs dense 2-D grid, for different restart strategies.
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "slpris/ris.hpp"
#include "support/oracles.hpp"

using namespace slpris;

namespace {
struct Instance {
  ChannelSet ch;
  PrecoderBlock x;
  CMat targets;
};

Instance random_instance(int k, int m, int n, int l, bool solved, Rng& rng) {
  Instance ins;
  ins.ch = test::random_channelset(k, m, n, rng);
  ins.targets = CMat(l, k);
  for (auto& v : ins.targets.a) v = test::random_qpsk(rng);
  if (solved) {
    QosTargets qos{std::vector<double>(k, 1.0)};
    ins.x = solve_block(effective_channel(ins.ch, identity_phases(n)), ins.targets, qos);
  } else {
    ins.x.x = test::random_cmat(m, l, rng);
    ins.x.total_power = norm2_sq(ins.x.x.a);
  }
  return ins;
}

double objective_at(const Instance& ins, const PhaseConfig& phase) {
  return sum_margins(margins(ins.ch, phase, ins.x, ins.targets));
}
}  // namespace

int main() {
  const int trials = 400;
  for (bool solved : {false, true}) {
    for (int max_starts : {1, 2, 3, 4, 6, 8}) {
      int miss = 0;
      double worst_gap = 0.0;
      Rng rng(777);
      for (int t = 0; t < trials; ++t) {
        const int k = 1 + static_cast<int>(rng.below(2));
        const int m = k + static_cast<int>(rng.below(2));
        const int l = 1 + static_cast<int>(rng.below(2));
        Instance ins = random_instance(k, m, 2, l, solved, rng);

        double got = -1e300;
        for (int s = 0; s < max_starts; ++s) {
          PhaseConfig init = identity_phases(2);
          for (auto& v : init.theta)
            v = std::fmod(v + s * 2.0 * std::numbers::pi / max_starts, 2.0 * std::numbers::pi);
          // alternate: stagger the second coordinate to break symmetry
          if (!init.theta.empty())
            init.theta.back() = std::fmod(init.theta.back() + s * std::numbers::pi / 2.0,
                                          2.0 * std::numbers::pi);
          const PhaseConfig out = optimize_phases(ins.ch, ins.x, ins.targets, init);
          got = std::max(got, objective_at(ins, out));
        }

        double best = -1e300;
        for (int g1 = 0; g1 < 360; ++g1)
          for (int g2 = 0; g2 < 360; ++g2) {
            const double t1 = 2.0 * std::numbers::pi * g1 / 360.0;
            const double t2 = 2.0 * std::numbers::pi * g2 / 360.0;
            best = std::max(best, objective_at(ins, {{t1, t2}, 1.0}));
          }
        if (got < best - 1e-3) {
          ++miss;
          worst_gap = std::max(worst_gap, best - got);
        }
      }
      std::printf("solved=%d starts=%d miss=%d/%d worst_gap=%.4f\n", solved ? 1 : 0, max_starts,
                  miss, trials, worst_gap);
    }
  }
  return 0;
}
