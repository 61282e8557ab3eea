// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Multi-index arithmetic for gamma-block matrices.
//
// A gamma-block matrix of size q = prod(gamma) is indexed by d-tuples. A
// nesting assigns each dimension label to a slot; slot 0 varies fastest in the
// flat index. Multi-indices handed to flat_of_multi / returned by
// multi_of_flat are in slot order: component l belongs to dimension
// nesting[l] and is bounded by gamma[nesting[l]].

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ndspec/linalg.hpp"

namespace ndspec {

using MultiIndex = std::vector<std::size_t>;

/// Per-dimension orders gamma_0 ... gamma_{d-1}.
class DimSpec {
 public:
  explicit DimSpec(std::vector<std::size_t> gamma);

  std::size_t dims() const noexcept { return gamma_.size(); }
  std::size_t order(std::size_t dim) const { return gamma_.at(dim); }
  const std::vector<std::size_t>& gamma() const noexcept { return gamma_; }
  /// q = prod gamma_i.
  std::size_t size() const noexcept { return size_; }

  friend bool operator==(const DimSpec&, const DimSpec&) = default;

 private:
  std::vector<std::size_t> gamma_;
  std::size_t size_ = 1;
};

/// Dimension nesting: a bijection from slots to dimension labels.
class Nesting {
 public:
  explicit Nesting(std::vector<std::size_t> omega);
  static Nesting identity(std::size_t d);

  std::size_t dims() const noexcept { return omega_.size(); }
  /// Dimension label stored in `slot`.
  std::size_t operator[](std::size_t slot) const { return omega_.at(slot); }
  /// Inverse map: slot holding dimension `dim`.
  std::size_t slot_of(std::size_t dim) const { return inverse_.at(dim); }
  const std::vector<std::size_t>& labels() const noexcept { return omega_; }

  friend bool operator==(const Nesting& a, const Nesting& b) { return a.omega_ == b.omega_; }

 private:
  std::vector<std::size_t> omega_;
  std::vector<std::size_t> inverse_;
};

/// Slot strides q_l and slot extents gamma_{Omega_l}.
struct Strides {
  std::vector<std::size_t> step;
  std::vector<std::size_t> extent;

  std::size_t dims() const noexcept { return step.size(); }
  std::size_t total() const noexcept {
    return step.empty() ? 1 : step.back() * extent.back();
  }
};

/// Flat-index permutation of {0, ..., q-1}.
class IndexPermutation {
 public:
  explicit IndexPermutation(std::vector<std::size_t> map);
  static IndexPermutation identity(std::size_t n);

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t operator[](std::size_t i) const { return map_.at(i); }
  const std::vector<std::size_t>& map() const noexcept { return map_; }

  IndexPermutation inverse() const;
  /// (this after other)(i) = this[other[i]].
  IndexPermutation after(const IndexPermutation& other) const;
  bool is_identity() const noexcept;

  friend bool operator==(const IndexPermutation&, const IndexPermutation&) = default;

 private:
  std::vector<std::size_t> map_;
};

Strides strides(const DimSpec& spec, const Nesting& nesting);

std::size_t flat_of_multi(std::span<const std::size_t> multi, const Strides& strides);
MultiIndex multi_of_flat(std::size_t flat, const Strides& strides);

/// Walking operator index map X^{from->to}.
IndexPermutation walking_map(const DimSpec& spec, const Nesting& from, const Nesting& to);

/// Scatter form of the walking operator: N[perm(i)][perm(j)] = M[i][j].
ComplexMatrix apply_walking(const ComplexMatrix& m, const IndexPermutation& perm);

/// Entry comparison used by has_character.
struct CharacterTolerance {
  double relative = 1e-10;
  double absolute = 1e-12;
};

/// True iff `m` has the (gamma, slot, nesting) Toeplitz character: entries
/// whose slot-`slot` coordinates differ by the same amount (other block
/// coordinates fixed) agree within tolerance.
bool has_character(const ComplexMatrix& m, const DimSpec& spec, std::size_t slot,
                   const Nesting& nesting, CharacterTolerance tol = {});

/// Visits every multi-index of the box in increasing flat order (slot 0
/// fastest). The callback receives the current tuple.
template <typename Fn>
void for_each_multi(std::span<const std::size_t> extent, Fn&& fn) {
  MultiIndex idx(extent.size(), 0);
  for (std::size_t e : extent)
    if (e == 0) return;
  while (true) {
    fn(static_cast<const MultiIndex&>(idx));
    std::size_t l = 0;
    for (; l < idx.size(); ++l) {
      if (++idx[l] < extent[l]) break;
      idx[l] = 0;
    }
    if (l == idx.size()) return;
  }
}

}  // namespace ndspec
