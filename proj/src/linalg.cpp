// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#include "ndspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ndspec/error.hpp"
#include "ndspec/kernels.hpp"

namespace ndspec {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

HermitianMatrix HermitianMatrix::symmetrize(const ComplexMatrix& a) {
  if (!a.square()) {
    throw SizeMismatch("Hermitian matrix must be square, got " + std::to_string(a.rows()) +
                       "x" + std::to_string(a.cols()));
  }
  const std::size_t n = a.rows();
  HermitianMatrix h;
  h.m_ = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h.m_(i, i) = cd(a(i, i).real(), 0.0);
    for (std::size_t j = 0; j < i; ++j) {
      const cd v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      h.m_(i, j) = v;
      h.m_(j, i) = std::conj(v);
    }
  }
  return h;
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
  return symmetrize(ComplexMatrix::identity(n));
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw SizeMismatch("multiply: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cd aik = a(i, k);
      if (aik != cd{}) kernels::axpy(aik, b.row(k), out);
    }
  }
  return c;
}

ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.cols()) throw SizeMismatch("multiply_adjoint: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) c(i, j) = kernels::dotc(a.row(i), b.row(j));
  return c;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const cd& v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double hermitian_defect(const ComplexMatrix& a) {
  if (!a.square()) throw SizeMismatch("hermitian_defect: matrix must be square");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw SizeMismatch("max_abs_diff: shapes differ");
  double m = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t k = 0; k < da.size(); ++k) m = std::max(m, std::abs(da[k] - db[k]));
  return m;
}

ComplexMatrix cholesky(const HermitianMatrix& h, double relative_floor) {
  const std::size_t n = h.size();
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, h(i, i).real());
  const double floor = relative_floor * max_diag;

  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto lj = l.row(j).first(j);
    const double pivot = h(j, j).real() - kernels::dotc(lj, lj).real();
    if (!(pivot > floor) || max_diag <= 0.0) throw NotPositiveDefinite(j);
    const double djj = std::sqrt(pivot);
    l(j, j) = djj;
    for (std::size_t i = j + 1; i < n; ++i) {
      const cd s = h(i, j) - kernels::dotc(l.row(i).first(j), lj);
      l(i, j) = s / djj;
    }
  }
  return l;
}

namespace {

// Inverse of a lower-triangular matrix with nonzero real diagonal, row by row:
// X_i = (e_i - sum_{k<i} L_ik X_k) / L_ii.
ComplexMatrix invert_lower(const ComplexMatrix& l) {
  const std::size_t n = l.rows();
  ComplexMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto xi = x.row(i);
    for (std::size_t k = 0; k < i; ++k) kernels::axpy(-l(i, k), x.row(k).first(i), xi.first(i));
    xi[i] = 1.0;
    const double inv = 1.0 / l(i, i).real();
    for (std::size_t k = 0; k <= i; ++k) xi[k] *= inv;
  }
  return x;
}

}  // namespace

HermitianMatrix invert_pd(const HermitianMatrix& h) { return invert_from_cholesky(cholesky(h)); }

HermitianMatrix invert_from_cholesky(const ComplexMatrix& l) {
  if (!l.square()) throw SizeMismatch("Cholesky factor must be square");
  const ComplexMatrix linv = invert_lower(l);
  // H^{-1} = L^{-H} L^{-1}; with T = (L^{-1})^T, entry (i,j) = sum_k T_jk conj(T_ik).
  ComplexMatrix t(linv.cols(), linv.rows());
  for (std::size_t i = 0; i < linv.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j) t(j, i) = linv(i, j);
  const std::size_t n = l.rows();
  ComplexMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      // Only rows k >= max(i, j) = i of L^{-1} are nonzero in both columns.
      const std::size_t lo = i;
      const cd v = kernels::dotc(t.row(j).subspan(lo), t.row(i).subspan(lo));
      inv(i, j) = v;
      inv(j, i) = std::conj(v);
    }
  }
  return HermitianMatrix::symmetrize(inv);
}

ComplexMatrix congruence(const ComplexMatrix& m, const HermitianMatrix& hinv) {
  if (m.cols() != hinv.size()) throw SizeMismatch("sandwich: M columns must match Hinv size");
  return multiply_adjoint(multiply(m, hinv.matrix()), m);
}

HermitianMatrix sandwich(const ComplexMatrix& m, const HermitianMatrix& hinv) {
  return HermitianMatrix::symmetrize(congruence(m, hinv));
}

}  // namespace ndspec
