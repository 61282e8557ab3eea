// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ndspec/correlation.hpp"
#include "ndspec/index.hpp"
#include "ndspec/linalg.hpp"
#include "ndspec/spectrum.hpp"

namespace ndspec {

/// Minimum-variance estimate 1 / (a^H R^{-1} a), a(w)[i] = e^{-j w . m(i)}
/// with m(i) the identity-nesting multi-index of flat row i.
SpectrumEstimate capon_spectrum(const HermitianMatrix& r_inv, const DimSpec& spec,
                                const SpectralGridSpec& grid);

struct StageCost {
  std::size_t t = 0;
  long double operations = 0;
};

/// Operation counts of the sequential algorithm (stages t = d .. 1) and of
/// the Capon estimator over the same grid. Counts are the symbolic flop model,
/// with q_t = prod_{i<t} gamma_i.
struct CostReport {
  std::vector<std::size_t> gamma;
  std::vector<std::size_t> counts;
  std::vector<StageCost> per_stage;
  long double sequential_total = 0;
  long double capon_total = 0;
};

/// Fills per_stage and sequential_total (capon_total left 0).
CostReport sequential_cost(const DimSpec& spec, const SpectralGridSpec& grid);
/// (q_d)^2 * prod C.
long double capon_cost(const DimSpec& spec, const SpectralGridSpec& grid);
CostReport cost_report(const DimSpec& spec, const SpectralGridSpec& grid);

enum class ErrorMode { Relative, Absolute };

struct LagMatch {
  Lag lag;
  cd original;
  cd reconstructed;
  double error = 0.0;
  ErrorMode mode = ErrorMode::Relative;
};

struct MatchReport {
  std::vector<LagMatch> per_lag;
  std::vector<std::string> warnings;

  double max_error() const;
};

/// Below this |r| the absolute error is reported instead of the relative one.
inline constexpr double kMatchAbsoluteThreshold = 1e-12;

/// Compares c against r_hat(t) = (1 / prod C) sum_m S(w_m) e^{-j w_m . t}.
MatchReport correlation_match(const SpectrumEstimate& s, const CorrelationSignal& c);

}  // namespace ndspec
