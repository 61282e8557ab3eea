// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Sequential multidimensional spectral estimation.
//
// Starting from R^{-1} under identity nesting (dimension d-1 slowest), each
// stage x = 1..d turns dimension d-x from block structure into an explicit
// frequency axis:
//
//   M(w)  = sum_k G(k) e^{j k w}
//   G'(w) = M(w) G(0)^{-1} M(w)^H
//
// and the next stage's G(k) are the blocks of the first block column of G'
// along the next-slower dimension. After stage d the blocks are 1x1 and the
// power estimate is 1 / G'.

#include <cstddef>
#include <functional>
#include <vector>

#include "ndspec/correlation.hpp"
#include "ndspec/index.hpp"
#include "ndspec/linalg.hpp"
#include "ndspec/spectrum.hpp"

namespace ndspec {

/// Levinson solution R(c) p = rho e_0 with p_0 = 1.
struct LevinsonResult {
  std::vector<cd> p;
  double rho = 0.0;
  /// Reflection coefficients of orders 1 .. gamma-1.
  std::vector<cd> sigmas;
};

LevinsonResult levinson_1d(const CorrelationSignal& c);

/// rho / |sum_k p_k e^{j w k}|^2 on a 1D grid.
SpectrumEstimate ar_spectrum_1d(const LevinsonResult& res, const SpectralGridSpec& grid);

/// Per-stage state. `blocks` holds, for every already-processed frequency
/// tuple, `order` consecutive h x h matrices G(0) .. G(order-1).
///
/// Processed tuples are enumerated with the most recently processed dimension
/// fastest; once all dimensions are processed this is the grid's flat order.
struct StageField {
  DimSpec spec;
  /// 1-based stage index; spec.dims() + 1 marks the terminal field.
  std::size_t stage = 1;
  /// Block size h.
  std::size_t block = 1;
  /// Number of blocks per point, gamma_{d-stage} (1 for the terminal field).
  std::size_t order = 1;
  /// Processed dimension labels, d-1 downward.
  std::vector<std::size_t> processed{};
  std::size_t points = 1;
  std::vector<ComplexMatrix> blocks{};

  bool terminal() const noexcept { return stage > spec.dims(); }
  const ComplexMatrix& at(std::size_t point, std::size_t k) const {
    return blocks.at(point * order + k);
  }
};

/// Diagnostics reported once per processed point of every stage.
struct StageDiagnostics {
  std::size_t stage = 0;
  std::size_t point = 0;
  /// Smallest squared Cholesky pivot of G(0) divided by its largest diagonal.
  double min_pivot_ratio = 0.0;
  /// Largest Hermitian defect of the unsymmetrized G' over the new frequency
  /// axis, relative to max |G'|.
  double max_hermitian_defect = 0.0;
};

using StageObserver = std::function<void(const StageDiagnostics&)>;

StageField init_stage(const HermitianMatrix& r_inv, const DimSpec& spec);

/// M(w_m) = sum_k G(k) e^{j k 2 pi m / count}, one matrix per processed point.
std::vector<ComplexMatrix> fourier_block_sum(const StageField& field, std::size_t m,
                                             std::size_t count);

/// Runs one stage. The new axis is dimension d - field.stage, sampled with
/// grid.count(d - field.stage) points.
StageField stage_update(const StageField& field, const SpectralGridSpec& grid,
                        const StageObserver& observer = {});

/// 1 / G' of a terminal field.
SpectrumEstimate spectrum_from_field(const StageField& field, const SpectralGridSpec& grid);

SpectrumEstimate sequential_spectrum(const CorrelationSignal& c, const SpectralGridSpec& grid,
                                     const StageObserver& observer = {});

}  // namespace ndspec
