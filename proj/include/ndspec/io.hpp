// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Text formats: the `ndcorr 1` correlation file and the CSV reports.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ndspec/baselines.hpp"
#include "ndspec/correlation.hpp"
#include "ndspec/spectrum.hpp"

namespace ndspec::io {

/// Shortest round-trip decimal; integral values keep a trailing ".0" and
/// negative zero prints as "0.0".
std::string format_double(double v);
std::string format_count(long double v);

/// Relative tolerance of the Hermitian check applied when loading.
inline constexpr double kHermitianLoadTolerance = 1e-9;

void write_correlation(std::ostream& out, const CorrelationSignal& c);
CorrelationSignal read_correlation(std::istream& in);
CorrelationSignal load_correlation(const std::filesystem::path& path);

/// Header f_0,...,f_{d-1},power; one row per grid point in flat order.
void write_spectrum_csv(std::ostream& out, const SpectrumEstimate& s);
/// Recovers the grid from the distinct frequencies of each column.
SpectrumEstimate read_spectrum_csv(std::istream& in);
SpectrumEstimate load_spectrum_csv(const std::filesystem::path& path);

void write_match_csv(std::ostream& out, const MatchReport& report, std::size_t dims);

struct CostRow {
  std::size_t c = 0;
  long double sequential = 0;
  long double capon = 0;
};
void write_cost_csv(std::ostream& out, const std::vector<CostRow>& rows);

/// 2D cut of a spectrum with every other axis pinned.
struct SpectrumSlice {
  std::size_t row_axis = 0;
  std::size_t col_axis = 1;
  std::vector<double> row_f;
  std::vector<double> col_f;
  /// Row-major, row_f.size() x col_f.size().
  std::vector<double> values;

  double at(std::size_t r, std::size_t c) const { return values.at(r * col_f.size() + c); }
};

/// `fixed` pins (axis, grid index) pairs. Exactly two axes must stay free;
/// otherwise DimensionMismatch. Out-of-range axes or indices raise
/// IndexOutOfRange.
SpectrumSlice extract_slice(const SpectrumEstimate& s,
                            const std::vector<std::pair<std::size_t, std::size_t>>& fixed);
void write_slice_csv(std::ostream& out, const SpectrumSlice& slice);

}  // namespace ndspec::io
