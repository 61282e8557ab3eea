// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ndspec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidNesting : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure other than a failed factorization (e.g. a non-positive
/// final spectral value).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A Cholesky pivot fell at or below the positive-definiteness floor.
///
/// `pivot` is the failing row. When raised inside the sequential estimator,
/// `stage` is the 1-based stage index and `frequency` holds the grid indices
/// of the already-processed dimensions, ordered from dimension d-1 downward.
class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(std::size_t pivot);
  NotPositiveDefinite(std::size_t pivot, std::size_t stage,
                      std::vector<std::size_t> frequency);

  std::size_t pivot() const noexcept { return pivot_; }
  std::size_t stage() const noexcept { return stage_; }
  const std::vector<std::size_t>& frequency() const noexcept { return frequency_; }

 private:
  std::size_t pivot_;
  std::size_t stage_ = 0;
  std::vector<std::size_t> frequency_;
};

}  // namespace ndspec
