// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#include "ndspec/index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ndspec/error.hpp"

namespace ndspec {

DimSpec::DimSpec(std::vector<std::size_t> gamma) : gamma_(std::move(gamma)) {
  if (gamma_.empty()) throw DimensionMismatch("dimension count must be >= 1");
  for (std::size_t g : gamma_) {
    if (g == 0) throw DimensionMismatch("every order gamma_i must be >= 1");
    size_ *= g;
  }
}

Nesting::Nesting(std::vector<std::size_t> omega) : omega_(std::move(omega)) {
  const std::size_t d = omega_.size();
  inverse_.assign(d, d);
  for (std::size_t slot = 0; slot < d; ++slot) {
    const std::size_t dim = omega_[slot];
    if (dim >= d || inverse_[dim] != d) {
      throw InvalidNesting("nesting is not a permutation of 0.." + std::to_string(d - 1));
    }
    inverse_[dim] = slot;
  }
}

Nesting Nesting::identity(std::size_t d) {
  std::vector<std::size_t> omega(d);
  std::iota(omega.begin(), omega.end(), std::size_t{0});
  return Nesting(std::move(omega));
}

IndexPermutation::IndexPermutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t v : map_) {
    if (v >= map_.size() || seen[v]) throw IndexOutOfRange("index map is not a bijection");
    seen[v] = true;
  }
}

IndexPermutation IndexPermutation::identity(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  return IndexPermutation(std::move(map));
}

IndexPermutation IndexPermutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return IndexPermutation(std::move(inv));
}

IndexPermutation IndexPermutation::after(const IndexPermutation& other) const {
  if (other.size() != size()) throw SizeMismatch("permutation sizes differ");
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = map_[other.map_[i]];
  return IndexPermutation(std::move(out));
}

bool IndexPermutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != i) return false;
  return true;
}

Strides strides(const DimSpec& spec, const Nesting& nesting) {
  if (nesting.dims() != spec.dims()) {
    throw InvalidNesting("nesting has " + std::to_string(nesting.dims()) + " slots for " +
                         std::to_string(spec.dims()) + " dimensions");
  }
  Strides s;
  s.step.resize(spec.dims());
  s.extent.resize(spec.dims());
  std::size_t q = 1;
  for (std::size_t l = 0; l < spec.dims(); ++l) {
    s.step[l] = q;
    s.extent[l] = spec.order(nesting[l]);
    q *= s.extent[l];
  }
  return s;
}

std::size_t flat_of_multi(std::span<const std::size_t> multi, const Strides& strides) {
  if (multi.size() != strides.dims()) throw IndexOutOfRange("multi-index has wrong length");
  std::size_t flat = 0;
  for (std::size_t l = 0; l < multi.size(); ++l) {
    if (multi[l] >= strides.extent[l]) {
      throw IndexOutOfRange("component " + std::to_string(l) + " = " + std::to_string(multi[l]) +
                            " exceeds extent " + std::to_string(strides.extent[l]));
    }
    flat += multi[l] * strides.step[l];
  }
  return flat;
}

MultiIndex multi_of_flat(std::size_t flat, const Strides& strides) {
  if (flat >= strides.total()) throw IndexOutOfRange("flat index " + std::to_string(flat) + " out of range");
  MultiIndex m(strides.dims());
  for (std::size_t l = 0; l < m.size(); ++l) {
    m[l] = flat % strides.extent[l];
    flat /= strides.extent[l];
  }
  return m;
}

IndexPermutation walking_map(const DimSpec& spec, const Nesting& from, const Nesting& to) {
  const Strides src = strides(spec, from);
  const Strides dst = strides(spec, to);
  const std::size_t d = spec.dims();
  // Coefficient of slot k moves to the slot that holds the same dimension in `to`.
  std::vector<std::size_t> target_step(d);
  for (std::size_t k = 0; k < d; ++k) target_step[k] = dst.step[to.slot_of(from[k])];

  std::vector<std::size_t> map;
  map.reserve(spec.size());
  for_each_multi(src.extent, [&](const MultiIndex& m) {
    std::size_t x = 0;
    for (std::size_t k = 0; k < d; ++k) x += m[k] * target_step[k];
    map.push_back(x);
  });
  return IndexPermutation(std::move(map));
}

ComplexMatrix apply_walking(const ComplexMatrix& m, const IndexPermutation& perm) {
  if (!m.square() || m.rows() != perm.size()) {
    throw SizeMismatch("apply_walking: matrix is " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", permutation has " +
                       std::to_string(perm.size()) + " entries");
  }
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(perm[i], perm[j]) = m(i, j);
  return out;
}

bool has_character(const ComplexMatrix& m, const DimSpec& spec, std::size_t slot,
                   const Nesting& nesting, CharacterTolerance tol) {
  if (!m.square() || m.rows() != spec.size()) throw SizeMismatch("has_character: matrix size must equal q");
  if (slot >= spec.dims()) throw IndexOutOfRange("has_character: slot out of range");
  const Strides s = strides(spec, nesting);
  const std::size_t n = m.rows();
  const std::size_t step = s.step[slot];
  const std::size_t extent = s.extent[slot];
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t iu = (i / step) % extent;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ju = (j / step) % extent;
      std::size_t ri = i - iu * step;
      std::size_t rj = j - ju * step;
      if (iu >= ju) {
        ri += (iu - ju) * step;
      } else {
        rj += (ju - iu) * step;
      }
      const cd a = m(i, j);
      const cd b = m(ri, rj);
      const double scale = std::max(std::abs(a), std::abs(b));
      if (std::abs(a - b) > std::max(tol.absolute, tol.relative * scale)) return false;
    }
  }
  return true;
}

}  // namespace ndspec
