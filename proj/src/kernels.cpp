// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#include "slpris/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace slpris::kern {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

cplx cdotu_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

cplx cdotc_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].imag() * b[i].real() - a[i].real() * b[i].imag();
  }
  return {re, im};
}

void caxpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cplx{ar * xr - ai * xi, ar * xi + ai * xr};
  }
}

double sum_min_sinusoid_scalar(const double* u0, const double* uc, const double* us,
                               const double* v0, const double* vc, const double* vs,
                               std::size_t n, double c, double s) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double mu = u0[i] + uc[i] * c + us[i] * s;
    const double mv = v0[i] + vc[i] * c + vs[i] * s;
    acc += mu < mv ? mu : mv;
  }
  return acc;
}

const Kernels kScalar = {
    dot_scalar, cdotu_scalar, cdotc_scalar, caxpy_scalar, sum_min_sinusoid_scalar,
    "scalar",
};

std::atomic<const Kernels*> g_forced{nullptr};

const Kernels* resolve() {
  if (const char* env = std::getenv("SLPRIS_KERNELS")) {
    std::string_view want(env);
    if (want == "scalar") return &kScalar;
    if (want == "avx2" && avx2() != nullptr) return avx2();
  }
  if (const Kernels* k = avx2()) return k;
  return &kScalar;
}

}  // namespace

const Kernels& scalar() { return kScalar; }

const Kernels& active() {
  if (const Kernels* f = g_forced.load(std::memory_order_relaxed)) return *f;
  static const Kernels* chosen = resolve();
  return *chosen;
}

void force(const Kernels* k) { g_forced.store(k, std::memory_order_relaxed); }

}  // namespace slpris::kern
