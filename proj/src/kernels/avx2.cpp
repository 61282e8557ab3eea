// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

// Built with -mavx2 -mfma. Nothing here may run before the dispatcher has
// confirmed CPU support.

#include "ndspec/kernels.hpp"

#ifdef NDSPEC_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cstddef>

namespace ndspec::kernels::avx2 {

namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d load2(const cd* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cd* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

}  // namespace

void axpy(cd a, std::span<const cd> x, std::span<cd> y) {
  const std::size_t n = x.size();
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = load2(&x[k]);
    const __m256d xs = _mm256_permute_pd(xv, 0b0101);  // [im, re, im, re]
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    const __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs));
    store2(&y[k], _mm256_add_pd(load2(&y[k]), prod));
  }
  if (k < n) {
    scalar::axpy(a, x.subspan(k), y.subspan(k));
  }
}

cd dotc(std::span<const cd> x, std::span<const cd> y) {
  const std::size_t n = x.size();
  __m256d same = _mm256_setzero_pd();   // [xr*yr, xi*yi, ...]
  __m256d cross = _mm256_setzero_pd();  // [xr*yi, xi*yr, ...]
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = load2(&x[k]);
    const __m256d yv = load2(&y[k]);
    same = _mm256_fmadd_pd(xv, yv, same);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  alignas(32) double s[4];
  alignas(32) double c[4];
  _mm256_store_pd(s, same);
  _mm256_store_pd(c, cross);
  double re = (s[0] + s[1]) + (s[2] + s[3]);
  double im = (c[1] - c[0]) + (c[3] - c[2]);
  if (k < n) {
    const cd tail = scalar::dotc(x.subspan(k), y.subspan(k));
    re += tail.real();
    im += tail.imag();
  }
  return {re, im};
}

}  // namespace ndspec::kernels::avx2

#endif  // NDSPEC_HAVE_AVX2_KERNELS
