// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ndspec {

using cd = std::complex<double>;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  cd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cd& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<cd> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const cd> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::span<cd> data() noexcept { return data_; }
  std::span<const cd> data() const noexcept { return data_; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cd> data_;
};

/// Square matrix that is exactly Hermitian: (i,j) == conj((j,i)) bitwise and
/// the diagonal is real.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  /// Projects onto the Hermitian part, (A + A^H) / 2.
  static HermitianMatrix symmetrize(const ComplexMatrix& a);
  static HermitianMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return m_.rows(); }
  const cd& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

 private:
  ComplexMatrix m_;
};

ComplexMatrix adjoint(const ComplexMatrix& a);
/// A * B
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
/// A * B^H
ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& a);
/// max |A(i,j) - conj(A(j,i))|
double hermitian_defect(const ComplexMatrix& a);
/// max |A(i,j) - B(i,j)|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Pivot floor used by cholesky: relative * (largest diagonal entry).
inline constexpr double kPivotRelativeFloor = 1e-12;

/// Lower Cholesky factor L with L L^H = H and positive real diagonal.
/// Throws NotPositiveDefinite naming the first pivot that is <= the floor.
ComplexMatrix cholesky(const HermitianMatrix& h, double relative_floor = kPivotRelativeFloor);

/// Inverse of a positive definite matrix via Cholesky and triangular inversion.
HermitianMatrix invert_pd(const HermitianMatrix& h);
/// Same, reusing an existing lower Cholesky factor.
HermitianMatrix invert_from_cholesky(const ComplexMatrix& l);

/// M * H^{-1} * M^H before symmetrization; exposed so the rounding asymmetry
/// can be measured.
ComplexMatrix congruence(const ComplexMatrix& m, const HermitianMatrix& hinv);

/// M * Hinv * M^H, symmetrized.
HermitianMatrix sandwich(const ComplexMatrix& m, const HermitianMatrix& hinv);

}  // namespace ndspec
