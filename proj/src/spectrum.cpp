// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#include "ndspec/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ndspec/error.hpp"

namespace ndspec {

SpectralGridSpec::SpectralGridSpec(std::vector<std::size_t> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw DimensionMismatch("grid needs at least one dimension");
  for (std::size_t c : counts_) {
    if (c == 0) throw DimensionMismatch("grid counts must be >= 1");
    size_ *= c;
  }
}

double SpectralGridSpec::frequency(std::size_t dim, std::size_t m) const {
  return static_cast<double>(m) / static_cast<double>(count(dim));
}

double SpectralGridSpec::angular(std::size_t dim, std::size_t m) const {
  return 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(count(dim));
}

std::size_t SpectralGridSpec::flat(std::span<const std::size_t> m) const {
  if (m.size() != dims()) throw DimensionMismatch("grid index has wrong dimension count");
  std::size_t f = 0;
  for (std::size_t i = dims(); i-- > 0;) {
    if (m[i] >= counts_[i]) throw IndexOutOfRange("grid index out of range");
    f = f * counts_[i] + m[i];
  }
  return f;
}

std::vector<std::size_t> SpectralGridSpec::multi(std::size_t flat) const {
  if (flat >= size_) throw IndexOutOfRange("grid flat index out of range");
  std::vector<std::size_t> m(dims());
  for (std::size_t i = 0; i < dims(); ++i) {
    m[i] = flat % counts_[i];
    flat /= counts_[i];
  }
  return m;
}

void SpectrumEstimate::validate() const {
  if (power.size() != grid.size()) throw SizeMismatch("spectrum size does not match its grid");
  for (std::size_t k = 0; k < power.size(); ++k) {
    if (!std::isfinite(power[k]) || !(power[k] > 0.0)) {
      throw NumericalError("spectrum value at grid point " + std::to_string(k) +
                           " is not positive and finite");
    }
  }
}

}  // namespace ndspec
