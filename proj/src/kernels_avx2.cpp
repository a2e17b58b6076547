// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#include "slpris/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace slpris::kern {

namespace {

#define SLPRIS_AVX2 __attribute__((target("avx2,fma")))

SLPRIS_AVX2 inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

SLPRIS_AVX2 double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i] * y[i];
  return r;
}

// Two interleaved complex doubles per __m256d: (re0, im0, re1, im1).
SLPRIS_AVX2 inline __m256d cmul(__m256d a, __m256d b) {
  __m256d are = _mm256_movedup_pd(a);                 // (ar0, ar0, ar1, ar1)
  __m256d aim = _mm256_permute_pd(a, 0b1111);         // (ai0, ai0, ai1, ai1)
  __m256d bsw = _mm256_permute_pd(b, 0b0101);         // (bi0, br0, bi1, br1)
  return _mm256_fmaddsub_pd(are, b, _mm256_mul_pd(aim, bsw));
}

SLPRIS_AVX2 cplx cdotu_avx2(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = _mm256_add_pd(acc, cmul(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i)));
  double re = acc[0] + acc[2];
  double im = acc[1] + acc[3];
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

SLPRIS_AVX2 cplx cdotc_avx2(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  const __m256d conj_mask = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d bc = _mm256_xor_pd(_mm256_loadu_pd(pb + 2 * i), conj_mask);
    acc = _mm256_add_pd(acc, cmul(_mm256_loadu_pd(pa + 2 * i), bc));
  }
  double re = acc[0] + acc[2];
  double im = acc[1] + acc[3];
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].imag() * b[i].real() - a[i].real() * b[i].imag();
  }
  return {re, im};
}

SLPRIS_AVX2 void caxpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(px + 2 * i);
    __m256d xsw = _mm256_permute_pd(xv, 0b0101);
    __m256d prod = _mm256_fmaddsub_pd(are, xv, _mm256_mul_pd(aim, xsw));
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(_mm256_loadu_pd(py + 2 * i), prod));
  }
  const double ar = alpha.real(), ai = alpha.imag();
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cplx{ar * xr - ai * xi, ar * xi + ai * xr};
  }
}

SLPRIS_AVX2 double sum_min_sinusoid_avx2(const double* u0, const double* uc, const double* us,
                                         const double* v0, const double* vc, const double* vs,
                                         std::size_t n, double c, double s) {
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d sv = _mm256_set1_pd(s);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d mu = _mm256_loadu_pd(u0 + i);
    mu = _mm256_fmadd_pd(_mm256_loadu_pd(uc + i), cv, mu);
    mu = _mm256_fmadd_pd(_mm256_loadu_pd(us + i), sv, mu);
    __m256d mv = _mm256_loadu_pd(v0 + i);
    mv = _mm256_fmadd_pd(_mm256_loadu_pd(vc + i), cv, mv);
    mv = _mm256_fmadd_pd(_mm256_loadu_pd(vs + i), sv, mv);
    acc = _mm256_add_pd(acc, _mm256_min_pd(mu, mv));
  }
  double r = hsum(acc);
  for (; i < n; ++i) {
    const double mu = u0[i] + uc[i] * c + us[i] * s;
    const double mv = v0[i] + vc[i] * c + vs[i] * s;
    r += mu < mv ? mu : mv;
  }
  return r;
}

#undef SLPRIS_AVX2

const Kernels kAvx2 = {
    dot_avx2, cdotu_avx2, cdotc_avx2, caxpy_avx2, sum_min_sinusoid_avx2,
    "avx2",
};

}  // namespace

const Kernels* avx2() {
  static const Kernels* table = []() -> const Kernels* {
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &kAvx2;
    return nullptr;
  }();
  return table;
}

}  // namespace slpris::kern

#else  // non-x86 builds fall back to the scalar table

namespace slpris::kern {
const Kernels* avx2() { return nullptr; }
}  // namespace slpris::kern

#endif
