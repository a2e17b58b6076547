// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#pragma once

#include <complex>
#include <cstddef>

namespace slpris::kern {

using cplx = std::complex<double>;

// Function table for the arithmetic inner loops. There is one scalar
// reference implementation and an AVX2+FMA variant; the active table is
// selected once at runtime from CPU capabilities (override with the
// SLPRIS_KERNELS environment variable: "scalar" or "avx2").
struct Kernels {
  // sum_i x[i]*y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // sum_i a[i]*b[i] (unconjugated)
  cplx (*cdotu)(const cplx* a, const cplx* b, std::size_t n);
  // sum_i a[i]*conj(b[i])
  cplx (*cdotc)(const cplx* a, const cplx* b, std::size_t n);
  // y[i] += alpha*x[i]
  void (*caxpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  // sum_i min(u0[i] + uc[i]*c + us[i]*s, v0[i] + vc[i]*c + vs[i]*s)
  //
  // This is the per-coordinate objective of the phase line search: each
  // entry is the smaller of two sinusoids in the candidate phase angle,
  // evaluated at cos/sin values c and s.
  double (*sum_min_sinusoid)(const double* u0, const double* uc, const double* us,
                             const double* v0, const double* vc, const double* vs,
                             std::size_t n, double c, double s);
  const char* name;
};

const Kernels& scalar();

// AVX2+FMA table, or nullptr when the build or the CPU does not support it.
const Kernels* avx2();

// Table used by the library; resolved once, stable for the process lifetime.
const Kernels& active();

// Test hook: force a specific table (nullptr restores automatic selection).
void force(const Kernels* k);

}  // namespace slpris::kern
