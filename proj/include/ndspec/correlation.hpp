// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ndspec/index.hpp"
#include "ndspec/linalg.hpp"

namespace ndspec {

using Lag = std::vector<long>;

/// Samples x(n) on the box prod [0, n_i), dimension 0 fastest.
class SignalTensor {
 public:
  SignalTensor(std::vector<std::size_t> dims, std::vector<cd> samples);

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::span<const cd> samples() const noexcept { return samples_; }
  const cd& at(std::span<const std::size_t> n) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<cd> samples_;
};

/// Correlation lags c(t) for t in prod [-(gamma_i - 1), gamma_i - 1].
///
/// Storage is kept exactly Hermitian: every write to c(t) also writes
/// conj(value) to c(-t), and c(0) has zero imaginary part. Lags are stored
/// dimension 0 fastest, so c(-t) sits at the mirrored storage position.
class CorrelationSignal {
 public:
  /// All lags zero.
  explicit CorrelationSignal(DimSpec spec);

  const DimSpec& spec() const noexcept { return spec_; }
  std::size_t dims() const noexcept { return spec_.dims(); }
  /// Lag box extents 2 gamma_i - 1.
  const std::vector<std::size_t>& lag_extent() const noexcept { return extent_; }
  std::size_t lag_count() const noexcept { return values_.size(); }

  cd at(std::span<const long> lag) const;
  /// Sets c(t) and its Hermitian mirror c(-t) = conj(value).
  void set(std::span<const long> lag, cd value);

  /// Storage position of a lag (dimension 0 fastest).
  std::size_t position(std::span<const long> lag) const;
  Lag lag_at(std::size_t position) const;
  std::span<const cd> values() const noexcept { return values_; }
  /// Sets by storage position, with the same mirroring as set().
  void set_at(std::size_t position, cd value);

  cd zero_lag() const { return values_[values_.size() / 2]; }

  /// Multiplies every lag by a real factor.
  CorrelationSignal scaled(double alpha) const;
  /// Diagonal loading: c(0) += eps * c(0).
  CorrelationSignal with_ridge(double eps) const;

  friend CorrelationSignal operator+(const CorrelationSignal& a, const CorrelationSignal& b);

 private:
  DimSpec spec_;
  std::vector<std::size_t> extent_;
  std::vector<cd> values_;
};

/// Spectral line at frequency f (cycles/sample per dimension).
struct SpectralPeak {
  std::vector<double> f;
  double power = 1.0;
};

/// Uniform unit-density plane: fixed frequency along one axis, flat along all
/// others.
struct SpectralPlane {
  std::size_t axis = 0;
  double f = 0.0;
  double power = 1.0;
};

struct SpectralComposition {
  std::vector<SpectralPeak> peaks;
  std::vector<SpectralPlane> planes;
  double noise_var = 0.0;

  void validate(std::size_t d) const;
};

/// Adds the mirror peak/plane at -f (mod 1) for every component, giving a
/// real-valued correlation.
SpectralComposition symmetrized(const SpectralComposition& comp);

/// Biased empirical correlation, normalized by the total sample count.
CorrelationSignal estimate_correlation(const SignalTensor& x, const DimSpec& gamma);

/// Closed-form correlation of a spectral composition. A component at
/// frequency f contributes power * exp(-j 2 pi f . t), so that the estimators'
/// spectra place it at grid index f * C.
CorrelationSignal synth_correlation(const SpectralComposition& comp, const DimSpec& gamma);

/// R(c) under a nesting: entries[i][j] = c(m(i) - m(j)), differences taken
/// per dimension label.
struct BlockToeplitzMatrix {
  DimSpec spec;
  Nesting nesting;
  HermitianMatrix entries;
};

BlockToeplitzMatrix assemble(const CorrelationSignal& c, const Nesting& nesting);
inline BlockToeplitzMatrix assemble(const CorrelationSignal& c) {
  return assemble(c, Nesting::identity(c.dims()));
}

bool check_positive_definite(const BlockToeplitzMatrix& r);
bool check_positive_definite(const HermitianMatrix& h);

}  // namespace ndspec
