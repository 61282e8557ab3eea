// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstddef>

#include "ndspec/kernels.hpp"

namespace ndspec::kernels::scalar {

void axpy(cd a, std::span<const cd> x, std::span<cd> y) {
  const double ar = a.real();
  const double ai = a.imag();
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double xr = x[k].real();
    const double xi = x[k].imag();
    y[k] = cd(y[k].real() + (ar * xr - ai * xi), y[k].imag() + (ar * xi + ai * xr));
  }
}

cd dotc(std::span<const cd> x, std::span<const cd> y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double xr = x[k].real();
    const double xi = x[k].imag();
    const double yr = y[k].real();
    const double yi = y[k].imag();
    re += xr * yr + xi * yi;
    im += xi * yr - xr * yi;
  }
  return {re, im};
}

}  // namespace ndspec::kernels::scalar
