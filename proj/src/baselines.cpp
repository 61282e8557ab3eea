// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#include "ndspec/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ndspec/error.hpp"
#include "ndspec/kernels.hpp"

namespace ndspec {

namespace {

// Fractional cycles of sum_i m_i t_i / C_i, reduced per term.
double grid_cycles(const SpectralGridSpec& grid, std::span<const std::size_t> m,
                   std::span<const long> t) {
  double cycles = 0.0;
  for (std::size_t i = 0; i < grid.dims(); ++i) {
    const long c = static_cast<long>(grid.count(i));
    const long r = ((static_cast<long>(m[i]) * t[i]) % c + c) % c;
    cycles += static_cast<double>(r) / static_cast<double>(c);
  }
  return cycles - std::floor(cycles);
}

}  // namespace

SpectrumEstimate capon_spectrum(const HermitianMatrix& r_inv, const DimSpec& spec,
                                const SpectralGridSpec& grid) {
  if (grid.dims() != spec.dims()) throw DimensionMismatch("grid and order list differ in dimension count");
  if (r_inv.size() != spec.size()) throw SizeMismatch("inverse size does not equal q");

  const std::size_t q = spec.size();
  const Strides s = strides(spec, Nesting::identity(spec.dims()));
  std::vector<Lag> rows(q);
  for (std::size_t i = 0; i < q; ++i) {
    const MultiIndex mi = multi_of_flat(i, s);
    rows[i].assign(mi.begin(), mi.end());
  }

  SpectrumEstimate out{grid, std::vector<double>(grid.size())};
  std::vector<cd> a(q), b(q), y(q);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const std::vector<std::size_t> m = grid.multi(g);
    for (std::size_t i = 0; i < q; ++i) {
      b[i] = std::polar(1.0, 2.0 * std::numbers::pi * grid_cycles(grid, m, rows[i]));
      a[i] = std::conj(b[i]);
    }
    // y = R^{-1} a; a^H y
    for (std::size_t i = 0; i < q; ++i) y[i] = kernels::dotc(r_inv.matrix().row(i), b);
    out.power[g] = 1.0 / kernels::dotc(y, a).real();
  }
  out.validate();
  return out;
}

CostReport sequential_cost(const DimSpec& spec, const SpectralGridSpec& grid) {
  if (grid.dims() != spec.dims()) throw DimensionMismatch("grid and order list differ in dimension count");
  const std::size_t d = spec.dims();
  std::vector<long double> q(d + 1, 1.0L);
  for (std::size_t t = 1; t <= d; ++t) q[t] = q[t - 1] * static_cast<long double>(spec.order(t - 1));

  CostReport r;
  r.gamma = spec.gamma();
  r.counts = grid.counts();
  for (std::size_t t = d; t >= 1; --t) {
    long double points = 1.0L;
    for (std::size_t i = t - 1; i < d; ++i) points *= static_cast<long double>(grid.count(i));
    const long double bracket = 1.5L * q[t - 1] * q[t - 1] * q[t - 1] + q[t - 1] * q[t];
    r.per_stage.push_back({t, bracket * points});
    r.sequential_total += bracket * points;
  }
  return r;
}

long double capon_cost(const DimSpec& spec, const SpectralGridSpec& grid) {
  if (grid.dims() != spec.dims()) throw DimensionMismatch("grid and order list differ in dimension count");
  const long double q = static_cast<long double>(spec.size());
  long double points = 1.0L;
  for (std::size_t c : grid.counts()) points *= static_cast<long double>(c);
  return q * q * points;
}

CostReport cost_report(const DimSpec& spec, const SpectralGridSpec& grid) {
  CostReport r = sequential_cost(spec, grid);
  r.capon_total = capon_cost(spec, grid);
  return r;
}

double MatchReport::max_error() const {
  double m = 0.0;
  for (const auto& l : per_lag) m = std::max(m, l.error);
  return m;
}

MatchReport correlation_match(const SpectrumEstimate& s, const CorrelationSignal& c) {
  const SpectralGridSpec& grid = s.grid;
  if (grid.dims() != c.dims()) throw DimensionMismatch("spectrum and correlation differ in dimension count");
  if (s.power.size() != grid.size()) throw SizeMismatch("spectrum size does not match its grid");

  MatchReport report;
  for (std::size_t i = 0; i < grid.dims(); ++i) {
    const std::size_t need = 2 * c.spec().order(i) - 1;
    if (grid.count(i) < need) {
      report.warnings.push_back("grid count " + std::to_string(grid.count(i)) + " along dimension " +
                                std::to_string(i) + " is below " + std::to_string(need) +
                                "; reconstructed lags alias");
    }
  }

  std::vector<std::vector<std::size_t>> points(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) points[g] = grid.multi(g);
  const double norm = 1.0 / static_cast<double>(grid.size());

  for (std::size_t pos = 0; pos < c.lag_count(); ++pos) {
    LagMatch lm;
    lm.lag = c.lag_at(pos);
    lm.original = c.values()[pos];
    cd sum{};
    for (std::size_t g = 0; g < grid.size(); ++g) {
      sum += s.power[g] * std::polar(1.0, -2.0 * std::numbers::pi * grid_cycles(grid, points[g], lm.lag));
    }
    lm.reconstructed = sum * norm;
    const double diff = std::abs(lm.reconstructed - lm.original);
    const double mag = std::abs(lm.original);
    if (mag < kMatchAbsoluteThreshold) {
      lm.mode = ErrorMode::Absolute;
      lm.error = diff;
    } else {
      lm.mode = ErrorMode::Relative;
      lm.error = diff / mag;
    }
    report.per_lag.push_back(std::move(lm));
  }
  return report;
}

}  // namespace ndspec
