// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ndspec {

/// Uniform spectral grid. Point m_i along dimension i sits at f_i = m_i / C_i
/// cycles/sample (angular 2 pi f_i), covering [0, 1).
class SpectralGridSpec {
 public:
  explicit SpectralGridSpec(std::vector<std::size_t> counts);

  std::size_t dims() const noexcept { return counts_.size(); }
  std::size_t count(std::size_t dim) const { return counts_.at(dim); }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }
  /// Total number of grid points.
  std::size_t size() const noexcept { return size_; }

  double frequency(std::size_t dim, std::size_t m) const;
  double angular(std::size_t dim, std::size_t m) const;

  /// Grid points are stored dimension 0 fastest.
  std::size_t flat(std::span<const std::size_t> m) const;
  std::vector<std::size_t> multi(std::size_t flat) const;

  friend bool operator==(const SpectralGridSpec&, const SpectralGridSpec&) = default;

 private:
  std::vector<std::size_t> counts_;
  std::size_t size_ = 1;
};

/// Strictly positive power values on a full grid.
struct SpectrumEstimate {
  SpectralGridSpec grid;
  std::vector<double> power;

  double at(std::span<const std::size_t> m) const { return power.at(grid.flat(m)); }
  /// Throws NumericalError unless every value is finite and > 0.
  void validate() const;
};

}  // namespace ndspec
