// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// library's factorization or estimator code paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "ndspec/correlation.hpp"
#include "ndspec/index.hpp"
#include "ndspec/linalg.hpp"

namespace ndspec::testing {

using Rng = std::mt19937_64;

inline cd random_complex(Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  return {n(rng), n(rng)};
}

inline ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (cd& v : m.data()) v = random_complex(rng);
  return m;
}

/// B B^H + n I: well conditioned Hermitian positive definite.
inline HermitianMatrix random_pd(Rng& rng, std::size_t n) {
  const ComplexMatrix b = random_matrix(rng, n, n);
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cd s{};
      for (std::size_t k = 0; k < n; ++k) s += b(i, k) * std::conj(b(j, k));
      h(i, j) = s + (i == j ? cd(static_cast<double>(n)) : cd{});
    }
  return HermitianMatrix::symmetrize(h);
}

/// Gauss-Jordan inverse with partial pivoting.
inline ComplexMatrix brute_inverse(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  ComplexMatrix w = a;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(w(r, c)) > std::abs(w(piv, c))) piv = r;
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(w(c, k), w(piv, k));
      std::swap(inv(c, k), inv(piv, k));
    }
    const cd d = w(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      w(c, k) /= d;
      inv(c, k) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const cd f = w(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        w(r, k) -= f * w(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

/// Determinant by Gaussian elimination with partial pivoting.
inline cd brute_det(ComplexMatrix a) {
  const std::size_t n = a.rows();
  cd det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(c, k), a(piv, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const cd f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

inline ComplexMatrix brute_multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cd s{};
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

/// Random lines plus a white floor; always positive definite.
inline SpectralComposition random_composition(Rng& rng, std::size_t d, std::size_t peaks,
                                              double noise_lo = 0.05) {
  std::uniform_real_distribution<double> f(0.0, 1.0);
  std::uniform_real_distribution<double> p(0.2, 2.0);
  std::uniform_real_distribution<double> noise(noise_lo, 0.5);
  SpectralComposition comp;
  for (std::size_t k = 0; k < peaks; ++k) {
    SpectralPeak pk;
    for (std::size_t i = 0; i < d; ++i) pk.f.push_back(f(rng));
    pk.power = p(rng);
    comp.peaks.push_back(pk);
  }
  comp.noise_var = noise(rng);
  return comp;
}

/// 1D correlation with random lines and noise.
inline CorrelationSignal random_correlation_1d(Rng& rng, std::size_t gamma) {
  std::uniform_int_distribution<std::size_t> n(1, 4);
  return synth_correlation(random_composition(rng, 1, n(rng)), DimSpec({gamma}));
}

/// c(t) = prod_i c_i(t_i).
inline CorrelationSignal separable(const std::vector<CorrelationSignal>& factors) {
  std::vector<std::size_t> gamma;
  for (const auto& f : factors) gamma.push_back(f.spec().order(0));
  CorrelationSignal c{DimSpec(gamma)};
  for (std::size_t pos = 0; pos < c.lag_count(); ++pos) {
    const Lag t = c.lag_at(pos);
    cd v = 1.0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const long lag[1] = {t[i]};
      v *= factors[i].at(lag);
    }
    c.set_at(pos, v);
  }
  return c;
}

/// Direct 1D AR spectrum rho / |sum p_k e^{j w k}|^2 with p solved by brute
/// force from R p = rho e_0.
inline std::vector<double> brute_ar_spectrum(const CorrelationSignal& c, std::size_t count) {
  const std::size_t g = c.spec().order(0);
  ComplexMatrix r(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      const long lag[1] = {static_cast<long>(i) - static_cast<long>(j)};
      r(i, j) = c.at(lag);
    }
  const ComplexMatrix inv = brute_inverse(r);
  // R^{-1} e_0 = p / rho, with p_0 = 1.
  const double rho = 1.0 / inv(0, 0).real();
  std::vector<double> s(count);
  for (std::size_t m = 0; m < count; ++m) {
    const double w = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(count);
    cd poly{};
    for (std::size_t k = 0; k < g; ++k) poly += inv(k, 0) * rho * std::polar(1.0, w * static_cast<double>(k));
    s[m] = rho / std::norm(poly);
  }
  return s;
}

inline std::vector<Nesting> all_nestings(std::size_t d) {
  std::vector<std::size_t> omega(d);
  std::iota(omega.begin(), omega.end(), std::size_t{0});
  std::vector<Nesting> out;
  do {
    out.emplace_back(omega);
  } while (std::next_permutation(omega.begin(), omega.end()));
  return out;
}

inline std::vector<DimSpec> small_specs() {
  std::vector<DimSpec> out;
  for (std::size_t a = 1; a <= 3; ++a) {
    out.emplace_back(std::vector<std::size_t>{a});
    for (std::size_t b = 1; b <= 3; ++b) {
      out.emplace_back(std::vector<std::size_t>{a, b});
      for (std::size_t c = 1; c <= 3; ++c) out.emplace_back(std::vector<std::size_t>{a, b, c});
    }
  }
  return out;
}

// Matrix with the (gamma, slot, nesting) character: each entry depends only on
// the other-slot coordinates of row and column and on the slot difference.
inline ComplexMatrix random_character_matrix(Rng& rng, const DimSpec& spec, std::size_t slot,
                                      const Nesting& nesting) {
  const Strides s = strides(spec, nesting);
  const std::size_t q = spec.size();
  const std::size_t step = s.step[slot];
  const std::size_t ext = s.extent[slot];
  // Key: (row with slot zeroed, column with slot zeroed, signed difference).
  std::vector<cd> table(q * q * (2 * ext - 1));
  for (cd& v : table) v = random_complex(rng);
  ComplexMatrix m(q, q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      const std::size_t iu = (i / step) % ext;
      const std::size_t ju = (j / step) % ext;
      const std::size_t ri = i - iu * step;
      const std::size_t rj = j - ju * step;
      const std::size_t diff = iu + ext - 1 - ju;
      m(i, j) = table[(ri * q + rj) * (2 * ext - 1) + diff];
    }
  return m;
}

}  // namespace ndspec::testing
