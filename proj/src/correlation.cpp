// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#include "ndspec/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ndspec/error.hpp"

namespace ndspec {

SignalTensor::SignalTensor(std::vector<std::size_t> dims, std::vector<cd> samples)
    : dims_(std::move(dims)), samples_(std::move(samples)) {
  if (dims_.empty()) throw DimensionMismatch("signal needs at least one dimension");
  std::size_t n = 1;
  for (std::size_t v : dims_) {
    if (v == 0) throw DimensionMismatch("signal extents must be >= 1");
    n *= v;
  }
  if (samples_.size() != n) {
    throw SizeMismatch("signal has " + std::to_string(samples_.size()) + " samples, box holds " +
                       std::to_string(n));
  }
}

const cd& SignalTensor::at(std::span<const std::size_t> n) const {
  std::size_t flat = 0;
  for (std::size_t i = dims_.size(); i-- > 0;) flat = flat * dims_[i] + n[i];
  return samples_.at(flat);
}

CorrelationSignal::CorrelationSignal(DimSpec spec) : spec_(std::move(spec)) {
  extent_.resize(spec_.dims());
  std::size_t total = 1;
  for (std::size_t i = 0; i < spec_.dims(); ++i) {
    extent_[i] = 2 * spec_.order(i) - 1;
    total *= extent_[i];
  }
  values_.assign(total, cd{});
}

std::size_t CorrelationSignal::position(std::span<const long> lag) const {
  if (lag.size() != dims()) throw DimensionMismatch("lag has wrong dimension count");
  std::size_t pos = 0;
  for (std::size_t i = dims(); i-- > 0;) {
    const long reach = static_cast<long>(spec_.order(i)) - 1;
    if (lag[i] < -reach || lag[i] > reach) {
      throw IndexOutOfRange("lag component " + std::to_string(lag[i]) + " outside +-" +
                            std::to_string(reach));
    }
    pos = pos * extent_[i] + static_cast<std::size_t>(lag[i] + reach);
  }
  return pos;
}

Lag CorrelationSignal::lag_at(std::size_t position) const {
  if (position >= values_.size()) throw IndexOutOfRange("lag position out of range");
  Lag t(dims());
  for (std::size_t i = 0; i < dims(); ++i) {
    t[i] = static_cast<long>(position % extent_[i]) - (static_cast<long>(spec_.order(i)) - 1);
    position /= extent_[i];
  }
  return t;
}

cd CorrelationSignal::at(std::span<const long> lag) const { return values_[position(lag)]; }

void CorrelationSignal::set(std::span<const long> lag, cd value) { set_at(position(lag), value); }

void CorrelationSignal::set_at(std::size_t position, cd value) {
  if (position >= values_.size()) throw IndexOutOfRange("lag position out of range");
  const std::size_t mirror = values_.size() - 1 - position;
  if (mirror == position) {
    values_[position] = cd(value.real(), 0.0);
  } else {
    values_[position] = value;
    values_[mirror] = std::conj(value);
  }
}

CorrelationSignal CorrelationSignal::scaled(double alpha) const {
  CorrelationSignal out = *this;
  for (cd& v : out.values_) v *= alpha;
  return out;
}

CorrelationSignal CorrelationSignal::with_ridge(double eps) const {
  CorrelationSignal out = *this;
  const std::size_t zero = values_.size() / 2;
  out.values_[zero] = cd(values_[zero].real() * (1.0 + eps), 0.0);
  return out;
}

CorrelationSignal operator+(const CorrelationSignal& a, const CorrelationSignal& b) {
  if (!(a.spec_ == b.spec_)) throw DimensionMismatch("correlation orders differ");
  CorrelationSignal out = a;
  for (std::size_t k = 0; k < out.values_.size(); ++k) out.values_[k] += b.values_[k];
  return out;
}

void SpectralComposition::validate(std::size_t d) const {
  auto check_f = [](double f) {
    if (!(f >= 0.0 && f < 1.0)) throw DimensionMismatch("frequencies must lie in [0, 1)");
  };
  for (const auto& p : peaks) {
    if (p.f.size() != d) throw DimensionMismatch("peak frequency tuple has wrong length");
    for (double f : p.f) check_f(f);
    if (!(p.power > 0.0)) throw DimensionMismatch("peak power must be > 0");
  }
  for (const auto& p : planes) {
    if (p.axis >= d) throw DimensionMismatch("plane axis out of range");
    check_f(p.f);
    if (!(p.power > 0.0)) throw DimensionMismatch("plane power must be > 0");
  }
  if (!(noise_var >= 0.0)) throw DimensionMismatch("noise variance must be >= 0");
}

namespace {

double mirror_frequency(double f) { return f == 0.0 ? 0.0 : 1.0 - f; }

// exp(-j 2 pi x) with x reduced to [-1/2, 1/2] first.
cd unit_phase(double cycles) {
  const double r = cycles - std::round(cycles);
  return std::polar(1.0, -2.0 * std::numbers::pi * r);
}

}  // namespace

SpectralComposition symmetrized(const SpectralComposition& comp) {
  SpectralComposition out = comp;
  for (const auto& p : comp.peaks) {
    SpectralPeak m = p;
    for (double& f : m.f) f = mirror_frequency(f);
    out.peaks.push_back(std::move(m));
  }
  for (const auto& p : comp.planes) {
    out.planes.push_back({p.axis, mirror_frequency(p.f), p.power});
  }
  return out;
}

CorrelationSignal estimate_correlation(const SignalTensor& x, const DimSpec& gamma) {
  const std::size_t d = gamma.dims();
  if (x.dims().size() != d) throw DimensionMismatch("signal and order list differ in dimension count");
  for (std::size_t i = 0; i < d; ++i) {
    if (gamma.order(i) > x.dims()[i]) {
      throw InsufficientData("order " + std::to_string(gamma.order(i)) + " exceeds " +
                             std::to_string(x.dims()[i]) + " samples along dimension " +
                             std::to_string(i));
    }
  }
  const double total = static_cast<double>(x.samples().size());
  CorrelationSignal c(gamma);
  std::vector<std::size_t> lo(d), extent(d), n(d), shifted(d);
  // Lags with position <= center cover one of each +-t pair; set_at mirrors.
  for (std::size_t pos = 0; pos <= c.lag_count() / 2; ++pos) {
    const Lag t = c.lag_at(pos);
    for (std::size_t i = 0; i < d; ++i) {
      const long len = static_cast<long>(x.dims()[i]);
      const long start = std::max(0L, -t[i]);
      const long stop = std::min(len, len - t[i]);
      lo[i] = static_cast<std::size_t>(start);
      extent[i] = static_cast<std::size_t>(stop - start);
    }
    cd sum{};
    for_each_multi(extent, [&](const MultiIndex& k) {
      for (std::size_t i = 0; i < d; ++i) {
        n[i] = lo[i] + k[i];
        shifted[i] = static_cast<std::size_t>(static_cast<long>(n[i]) + t[i]);
      }
      sum += x.at(shifted) * std::conj(x.at(n));
    });
    c.set_at(pos, sum / total);
  }
  return c;
}

CorrelationSignal synth_correlation(const SpectralComposition& comp, const DimSpec& gamma) {
  const std::size_t d = gamma.dims();
  comp.validate(d);
  CorrelationSignal c(gamma);
  const std::size_t center = c.lag_count() / 2;
  for (std::size_t pos = 0; pos <= center; ++pos) {
    const Lag t = c.lag_at(pos);
    cd v{};
    for (const auto& p : comp.peaks) {
      double cycles = 0.0;
      for (std::size_t i = 0; i < d; ++i) cycles += p.f[i] * static_cast<double>(t[i]);
      v += p.power * unit_phase(cycles);
    }
    for (const auto& p : comp.planes) {
      bool on_axis = true;
      for (std::size_t i = 0; i < d; ++i)
        if (i != p.axis && t[i] != 0) on_axis = false;
      if (on_axis) v += p.power * unit_phase(p.f * static_cast<double>(t[p.axis]));
    }
    if (pos == center) v += comp.noise_var;
    c.set_at(pos, v);
  }
  return c;
}

BlockToeplitzMatrix assemble(const CorrelationSignal& c, const Nesting& nesting) {
  const DimSpec& spec = c.spec();
  const Strides s = strides(spec, nesting);
  const std::size_t q = spec.size();
  const std::size_t d = spec.dims();

  // Per-row index along each original dimension label.
  std::vector<long> coord(q * d);
  for (std::size_t i = 0; i < q; ++i) {
    const MultiIndex m = multi_of_flat(i, s);
    for (std::size_t l = 0; l < d; ++l) coord[i * d + nesting[l]] = static_cast<long>(m[l]);
  }

  ComplexMatrix r(q, q);
  Lag t(d);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t k = 0; k < d; ++k) t[k] = coord[i * d + k] - coord[j * d + k];
      r(i, j) = c.at(t);
    }
  }
  return {spec, nesting, HermitianMatrix::symmetrize(r)};
}

bool check_positive_definite(const HermitianMatrix& h) {
  try {
    (void)cholesky(h);
    return true;
  } catch (const NotPositiveDefinite&) {
    return false;
  }
}

bool check_positive_definite(const BlockToeplitzMatrix& r) { return check_positive_definite(r.entries); }

}  // namespace ndspec
