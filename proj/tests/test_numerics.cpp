// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "slpris/errors.hpp"
#include "slpris/numerics.hpp"
#include "slpris/rng.hpp"
#include "support/oracles.hpp"

using namespace slpris;

namespace {

Mat mat(int r, int c, std::initializer_list<double> vals) {
  Mat m(r, c);
  int i = 0;
  for (double v : vals) m.a[i++] = v;
  return m;
}

// Random system guaranteed feasible: c = G x0 − slack with slack ≥ 0.
RealSystem random_feasible_system(int m, int n, Rng& rng) {
  RealSystem sys;
  sys.g = Mat(m, n);
  for (auto& v : sys.g.a) v = rng.uniform(-1.0, 1.0);
  std::vector<double> x0(n);
  for (auto& v : x0) v = rng.uniform(-1.0, 1.0);
  sys.c = matvec(sys.g, x0);
  for (auto& v : sys.c) v -= rng.uniform(0.0, 0.5);
  return sys;
}

}  // namespace

TEST_CASE("nnls clamps the negative component") {
  const Mat a = mat(2, 2, {1, 0, 0, 1});
  const auto x = nnls(a, {3.0, -2.0});
  CHECK(x[0] == doctest::Approx(3.0));
  CHECK(x[1] == doctest::Approx(0.0));
}

TEST_CASE("nnls single-column mean") {
  const Mat a = mat(2, 1, {1, 1});
  const auto x = nnls(a, {1.0, 3.0});
  CHECK(x[0] == doctest::Approx(2.0));
}

TEST_CASE("nnls interior solution matches the normal equations and a grid") {
  const Mat a = mat(2, 2, {2, 1, 1, 2});
  const std::vector<double> b = {1.0, 1.0};
  const auto x = nnls(a, b);
  CHECK(x[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(x[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  const auto g = test::nnls_grid_2var(a, b, 1.0, 1e-3);
  CHECK(std::fabs(x[0] - g[0]) <= 2e-3);
  CHECK(std::fabs(x[1] - g[1]) <= 2e-3);
}

TEST_CASE("nnls rejects non-finite input") {
  Mat a = mat(1, 1, {1});
  a(0, 0) = std::nan("");
  CHECK_THROWS_AS(nnls(a, {1.0}), InvalidArgument);
}

TEST_CASE("nnls gradient conditions hold on random instances") {
  Rng rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const int m = 1 + static_cast<int>(rng.below(6));
    const int n = 1 + static_cast<int>(rng.below(6));
    Mat a(m, n);
    for (auto& v : a.a) v = rng.uniform(-1.0, 1.0);
    std::vector<double> b(m);
    for (auto& v : b) v = rng.uniform(-1.0, 1.0);
    const auto x = nnls(a, b);
    // w = Aᵀ(b − Ax): zero on the support, ≤ 0 elsewhere.
    std::vector<double> resid(m);
    for (int r = 0; r < m; ++r) {
      double s = -b[r];
      for (int c = 0; c < n; ++c) s += a(r, c) * x[c];
      resid[r] = s;
    }
    for (int c = 0; c < n; ++c) {
      CHECK(x[c] >= 0.0);
      double w = 0.0;
      for (int r = 0; r < m; ++r) w += a(r, c) * resid[r];
      if (x[c] > 0.0)
        CHECK(std::fabs(w) <= 1e-8);
      else
        CHECK(w >= -1e-8);
    }
  }
}

TEST_CASE("nnls equals 2-variable brute-force grid") {
  Rng rng(12);
  for (int rep = 0; rep < 25; ++rep) {
    const int m = 2 + static_cast<int>(rng.below(3));
    Mat a(m, 2);
    for (auto& v : a.a) v = rng.uniform(-1.0, 1.0);
    std::vector<double> b(m);
    for (auto& v : b) v = rng.uniform(-1.0, 1.0);
    const auto x = nnls(a, b);
    const double hi = 2.0 * (std::fabs(x[0]) + std::fabs(x[1]) + 1.0);
    const double res = 1e-2;
    const auto g = test::nnls_grid_2var(a, b, hi, res);
    CHECK(std::fabs(x[0] - g[0]) <= 2.0 * res);
    CHECK(std::fabs(x[1] - g[1]) <= 2.0 * res);
  }
}

TEST_CASE("min-norm qp: single active constraint") {
  RealSystem sys{mat(1, 1, {1}), {2.0}};
  const auto sol = solve_min_norm_qp(sys);
  CHECK(sol.x[0] == doctest::Approx(2.0));
  CHECK(sol.power == doctest::Approx(4.0));
  CHECK(sol.kkt_residual <= 1e-9);
}

TEST_CASE("min-norm qp: inactive constraints give the origin") {
  RealSystem sys{mat(2, 2, {1, 0, 0, 1}), {-1.0, -1.0}};
  const auto sol = solve_min_norm_qp(sys);
  CHECK(sol.x[0] == 0.0);
  CHECK(sol.x[1] == 0.0);
  CHECK(sol.power == 0.0);
}

TEST_CASE("min-norm qp: projection onto a half-space") {
  RealSystem sys{mat(1, 2, {1, 1}), {2.0}};
  const auto sol = solve_min_norm_qp(sys);
  CHECK(sol.x[0] == doctest::Approx(1.0));
  CHECK(sol.x[1] == doctest::Approx(1.0));
  CHECK(sol.power == doctest::Approx(2.0));
}

TEST_CASE("min-norm qp: duplicated inconsistent rows still solve") {
  // Same normal twice with different offsets: feasible, tightest wins.
  RealSystem sys{mat(2, 1, {1, 1}), {1.0, 2.0}};
  const auto sol = solve_min_norm_qp(sys);
  CHECK(sol.x[0] == doctest::Approx(2.0));
}

TEST_CASE("min-norm qp: infeasible zero-row system is detected") {
  // 0·x ≥ 1 cannot hold.
  RealSystem sys{mat(2, 2, {1, 0, 0, 0}), {1.0, 1.0}};
  CHECK_THROWS_AS(solve_min_norm_qp(sys), InfeasibleSystem);
  try {
    solve_min_norm_qp(sys);
  } catch (const InfeasibleSystem& e) {
    REQUIRE(e.violated_rows.size() >= 1);
    CHECK(e.violated_rows[0] == 1);
  }
}

TEST_CASE("min-norm qp: opposing constraints are infeasible") {
  // x ≥ 1 and −x ≥ 0.
  RealSystem sys{mat(2, 1, {1, -1}), {1.0, 0.0}};
  CHECK_THROWS_AS(solve_min_norm_qp(sys), InfeasibleSystem);
}

TEST_CASE("kkt certificate is zero for an exact optimum and positive off it") {
  RealSystem sys{mat(1, 1, {1}), {2.0}};
  QpSolution exact{{2.0}, {2.0}, 4.0, 0.0};
  CHECK(kkt_certificate(sys, exact) == 0.0);
  QpSolution off{{1.9}, {1.9}, 3.61, 0.0};
  CHECK(kkt_certificate(sys, off) >= 0.1 - 1e-12);
}

TEST_CASE("kkt certificate rejects mismatched dimensions") {
  RealSystem sys{mat(1, 1, {1}), {1.0}};
  QpSolution bad{{1.0, 2.0}, {1.0}, 0.0, 0.0};
  CHECK_THROWS_AS(kkt_certificate(sys, bad), InvalidArgument);
}

TEST_CASE("qp matches active-set enumeration on random feasible systems") {
  Rng rng(21);
  double worst_rel = 0.0, worst_kkt = 0.0;
  for (int rep = 0; rep < 300; ++rep) {
    const int m = 1 + static_cast<int>(rng.below(8));
    const int n = 1 + static_cast<int>(rng.below(8));
    const RealSystem sys = random_feasible_system(m, n, rng);
    const auto sol = solve_min_norm_qp(sys);
    const auto oracle = test::min_norm_qp_enumerate(sys.g, sys.c);
    REQUIRE(oracle.has_value());
    const double rel =
        std::fabs(sol.power - oracle->power) / std::max(1e-12, oracle->power);
    worst_rel = std::max(worst_rel, rel);
    worst_kkt = std::max(worst_kkt, sol.kkt_residual);
    CHECK(rel <= 1e-6);
    CHECK(sol.kkt_residual <= 1e-6);
  }
  MESSAGE("worst rel power err: ", worst_rel, ", worst kkt: ", worst_kkt);
}

TEST_CASE("qp solution beats every sampled feasible point") {
  Rng rng(22);
  const RealSystem sys = random_feasible_system(6, 5, rng);
  const auto sol = solve_min_norm_qp(sys);
  int feasible_seen = 0;
  for (int s = 0; s < 1000; ++s) {
    std::vector<double> x(5);
    for (auto& v : x) v = rng.uniform(-2.0, 2.0);
    const auto gx = matvec(sys.g, x);
    bool ok = true;
    for (int i = 0; i < 6; ++i)
      if (gx[i] < sys.c[i]) ok = false;
    if (!ok) continue;
    ++feasible_seen;
    CHECK(sol.power <= norm2_sq(x) + 1e-9);
  }
  MESSAGE("feasible samples: ", feasible_seen);
  CHECK(feasible_seen > 0);
}

TEST_CASE("scaling (G,c) -> (aG,ac) leaves the optimizer unchanged") {
  Rng rng(23);
  for (int rep = 0; rep < 50; ++rep) {
    const RealSystem sys = random_feasible_system(5, 4, rng);
    const double alpha = rng.uniform(0.1, 10.0);
    RealSystem scaled = sys;
    for (auto& v : scaled.g.a) v *= alpha;
    for (auto& v : scaled.c) v *= alpha;
    const auto s1 = solve_min_norm_qp(sys);
    const auto s2 = solve_min_norm_qp(scaled);
    for (int j = 0; j < 4; ++j) CHECK(s1.x[j] == doctest::Approx(s2.x[j]).epsilon(1e-9));
  }
}

TEST_CASE("kkt stays certified on larger random systems") {
  Rng rng(24);
  for (int rep = 0; rep < 100; ++rep) {
    const int m = 1 + static_cast<int>(rng.below(16));
    const int n = 1 + static_cast<int>(rng.below(16));
    const RealSystem sys = random_feasible_system(m, n, rng);
    const auto sol = solve_min_norm_qp(sys);
    CHECK(sol.kkt_residual <= 1e-6);
    const auto gx = matvec(sys.g, sol.x);
    for (int i = 0; i < m; ++i) CHECK(gx[i] >= sys.c[i] - 1e-8);
  }
}

TEST_CASE("right pseudo-inverse identities") {
  CMat eye(2, 2);
  eye(0, 0) = 1.0;
  eye(1, 1) = 1.0;
  const CMat w = right_pseudo_inverse(eye);
  CHECK(std::abs(w(0, 0) - cplx{1.0, 0.0}) <= 1e-12);
  CHECK(std::abs(w(1, 0)) <= 1e-12);

  CMat row(1, 2);
  row(0, 0) = 1.0;
  row(0, 1) = 1.0;
  const CMat w2 = right_pseudo_inverse(row);
  CHECK(std::abs(w2(0, 0) - cplx{0.5, 0.0}) <= 1e-12);
  CHECK(std::abs(w2(1, 0) - cplx{0.5, 0.0}) <= 1e-12);
}

TEST_CASE("right pseudo-inverse residual on random channels") {
  Rng rng(25);
  for (int rep = 0; rep < 50; ++rep) {
    const CMat h = test::random_cmat(2, 4, rng);
    const CMat w = right_pseudo_inverse(h);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        cplx acc{};
        for (int r = 0; r < 4; ++r) acc += h(i, r) * w(r, j);
        const cplx want = i == j ? cplx{1.0, 0.0} : cplx{};
        CHECK(std::abs(acc - want) <= 1e-9);
      }
  }
}

TEST_CASE("right pseudo-inverse rejects rank-deficient channels") {
  CMat h(2, 2);
  h(0, 0) = 1.0;
  h(0, 1) = 1.0;
  h(1, 0) = 1.0;
  h(1, 1) = 1.0;
  CHECK_THROWS_AS(right_pseudo_inverse(h), SingularChannel);
}
