// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "slpris/kernels.hpp"
#include "slpris/linalg.hpp"
#include "slpris/rng.hpp"

using namespace slpris;

namespace {

std::vector<double> random_vec(std::size_t n, Rng& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-2.0, 2.0);
  return v;
}

std::vector<cplx> random_cvec(std::size_t n, Rng& rng) {
  std::vector<cplx> v(n);
  for (auto& x : v) x = cplx{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
  return v;
}

bool close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * (1.0 + std::fabs(a) + std::fabs(b));
}

bool close(cplx a, cplx b, double tol) {
  return close(a.real(), b.real(), tol) && close(a.imag(), b.imag(), tol);
}

}  // namespace

TEST_CASE("active kernel table resolves") {
  const auto& k = kern::active();
  CHECK(k.dot != nullptr);
  CHECK(k.sum_min_sinusoid != nullptr);
  MESSAGE("active kernels: ", k.name);
}

TEST_CASE("scalar and AVX2 tables agree on random inputs") {
  const kern::Kernels* simd = kern::avx2();
  if (simd == nullptr) {
    MESSAGE("AVX2 not available; scalar-only build/CPU");
    return;
  }
  const auto& ref = kern::scalar();
  Rng rng(7);
  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{2}, std::size_t{3},
                        std::size_t{4}, std::size_t{5}, std::size_t{7}, std::size_t{8},
                        std::size_t{15}, std::size_t{33}, std::size_t{64}, std::size_t{129}}) {
    for (int rep = 0; rep < 8; ++rep) {
      const auto x = random_vec(n, rng);
      const auto y = random_vec(n, rng);
      CHECK(close(ref.dot(x.data(), y.data(), n), simd->dot(x.data(), y.data(), n), 1e-13));

      const auto a = random_cvec(n, rng);
      const auto b = random_cvec(n, rng);
      CHECK(close(ref.cdotu(a.data(), b.data(), n), simd->cdotu(a.data(), b.data(), n), 1e-13));
      CHECK(close(ref.cdotc(a.data(), b.data(), n), simd->cdotc(a.data(), b.data(), n), 1e-13));

      const cplx alpha{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      auto y1 = random_cvec(n, rng);
      auto y2 = y1;
      ref.caxpy(alpha, a.data(), y1.data(), n);
      simd->caxpy(alpha, a.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(close(y1[i], y2[i], 1e-13));

      const auto u0 = random_vec(n, rng), uc = random_vec(n, rng), us = random_vec(n, rng);
      const auto v0 = random_vec(n, rng), vc = random_vec(n, rng), vs = random_vec(n, rng);
      const double t = rng.uniform(0.0, 6.28);
      const double r1 = ref.sum_min_sinusoid(u0.data(), uc.data(), us.data(), v0.data(),
                                             vc.data(), vs.data(), n, std::cos(t), std::sin(t));
      const double r2 = simd->sum_min_sinusoid(u0.data(), uc.data(), us.data(), v0.data(),
                                               vc.data(), vs.data(), n, std::cos(t), std::sin(t));
      CHECK(close(r1, r2, 1e-13));
    }
  }
}

TEST_CASE("force() overrides the active table") {
  kern::force(&kern::scalar());
  CHECK(std::strcmp(kern::active().name, "scalar") == 0);
  kern::force(nullptr);
}

TEST_CASE("sum_min_sinusoid picks the smaller branch per entry") {
  const double u0[] = {1.0, -3.0};
  const double uc[] = {0.0, 0.0};
  const double us[] = {0.0, 0.0};
  const double v0[] = {2.0, -4.0};
  const double vc[] = {0.0, 0.0};
  const double vs[] = {0.0, 0.0};
  const double r = kern::active().sum_min_sinusoid(u0, uc, us, v0, vc, vs, 2, 1.0, 0.0);
  CHECK(r == doctest::Approx(1.0 - 4.0));
}
