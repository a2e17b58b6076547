// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>

namespace slpris {

// splitmix64 step; used only for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based child-seed derivation: every (realization, block, stream)
// lane gets an independent seed from the master seed, so trials can run in
// any order on any number of workers without changing the streams.
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> lane) {
  std::uint64_t h = 0x8BADF00D5EEDC0DEULL;
  for (std::uint64_t v : lane) {
    h ^= splitmix64(v);
    h = splitmix64(h);
  }
  return h;
}

// Deterministic generator. The engine (mt19937_64) is fully specified by
// the standard; uniform and Gaussian variates are produced with explicit
// arithmetic rather than std distributions so that streams are identical
// across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection-free modulo is fine here: n is tiny (constellation sizes).
    return eng_() % n;
  }

  // Standard normal via Box–Muller (one variate per pair, no cache).
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Circularly-symmetric complex Gaussian with unit variance, E|z|² = 1.
  std::complex<double> cnormal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace slpris
