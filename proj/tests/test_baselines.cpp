// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "ndspec/baselines.hpp"
#include "ndspec/error.hpp"
#include "ndspec/sequential.hpp"
#include "support.hpp"

using namespace ndspec;
using ndspec::testing::Rng;

namespace {

CorrelationSignal white(std::vector<std::size_t> gamma, double var) {
  SpectralComposition comp;
  comp.noise_var = var;
  return synth_correlation(comp, DimSpec(std::move(gamma)));
}

CorrelationSignal corr_1d(std::vector<cd> half) {
  CorrelationSignal c{DimSpec({half.size()})};
  for (std::size_t k = 0; k < half.size(); ++k) {
    const long lag[1] = {static_cast<long>(k)};
    c.set(lag, half[k]);
  }
  return c;
}

SpectralComposition section_six() {
  SpectralComposition comp;
  comp.peaks.push_back({{0.1, 0.3, 0.7}, 1.0});
  comp.peaks.push_back({{0.1, 0.6, 0.2}, 1.0});
  comp.planes.push_back({0, 0.6, 1.0});
  comp.noise_var = 0.1;
  return comp;
}

// Hand evaluation of the per-stage bracket for uniform gamma and grid.
long double uniform_sequential(long double gamma, std::size_t d, long double c) {
  long double total = 0;
  for (std::size_t t = 1; t <= d; ++t) {
    const long double q_prev = std::pow(gamma, static_cast<long double>(t - 1));
    const long double q_t = q_prev * gamma;
    total += (1.5L * q_prev * q_prev * q_prev + q_prev * q_t) * std::pow(c, static_cast<long double>(d - t + 1));
  }
  return total;
}

}  // namespace

TEST_CASE("capon examples") {
  const auto w = white({2, 3}, 0.3);
  const auto s = capon_spectrum(invert_pd(assemble(w).entries), w.spec(), SpectralGridSpec({5, 4}));
  for (double v : s.power) CHECK(v == doctest::Approx(0.3 / 6.0));

  const auto one = white({1}, 2.5);
  const auto s1 = capon_spectrum(invert_pd(assemble(one).entries), one.spec(), SpectralGridSpec({7}));
  for (double v : s1.power) CHECK(v == doctest::Approx(2.5));

  CHECK_THROWS_AS(capon_spectrum(invert_pd(assemble(w).entries), w.spec(), SpectralGridSpec({5})), DimensionMismatch);
  CHECK_THROWS_AS(capon_spectrum(HermitianMatrix::identity(5), w.spec(), SpectralGridSpec({5, 4})), SizeMismatch);
}

TEST_CASE("capon agrees with a brute-force steering-vector evaluation") {
  Rng rng(1);
  const DimSpec spec({3, 2});
  const auto c = synth_correlation(ndspec::testing::random_composition(rng, 2, 3), spec);
  const ComplexMatrix inv = ndspec::testing::brute_inverse(assemble(c).entries.matrix());
  const SpectralGridSpec grid({6, 5});
  const auto s = capon_spectrum(invert_pd(assemble(c).entries), spec, grid);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const auto m = grid.multi(g);
    std::vector<cd> a(6);
    for (std::size_t i1 = 0; i1 < 2; ++i1)
      for (std::size_t i0 = 0; i0 < 3; ++i0)
        a[i0 + 3 * i1] = std::polar(1.0, -(grid.angular(0, m[0]) * static_cast<double>(i0) +
                                           grid.angular(1, m[1]) * static_cast<double>(i1)));
    cd quad{};
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) quad += std::conj(a[i]) * inv(i, j) * a[j];
    CHECK(ndspec::testing::rel_diff(s.power[g], 1.0 / quad.real()) < 1e-10);
  }
}

TEST_CASE("capon finds the planted 3D lines") {
  const auto c = synth_correlation(section_six(), DimSpec({3, 3, 3}));
  const SpectralGridSpec grid({10, 10, 10});
  const auto s = capon_spectrum(invert_pd(assemble(c).entries), c.spec(), grid);
  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return s.power[a] > s.power[b]; });
  const std::vector<std::size_t> top(order.begin(), order.begin() + 2);
  CHECK(std::count(top.begin(), top.end(), grid.flat(std::vector<std::size_t>{1, 3, 7})) == 1);
  CHECK(std::count(top.begin(), top.end(), grid.flat(std::vector<std::size_t>{1, 6, 2})) == 1);
  for (double v : s.power) CHECK(v > 0.0);
}

TEST_CASE("capon is positive on random positive definite inputs") {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = synth_correlation(ndspec::testing::random_composition(rng, 3, 4), DimSpec({2, 3, 2}));
    const auto s = capon_spectrum(invert_pd(assemble(c).entries), c.spec(), SpectralGridSpec({4, 5, 6}));
    for (double v : s.power) CHECK((std::isfinite(v) && v > 0.0));
  }
}

TEST_CASE("sequential cost examples") {
  const auto one = sequential_cost(DimSpec({2}), SpectralGridSpec({4}));
  REQUIRE(one.per_stage.size() == 1);
  CHECK(one.per_stage[0].t == 1);
  CHECK(one.sequential_total == 14.0L);

  const auto two = sequential_cost(DimSpec({2, 2}), SpectralGridSpec({4, 4}));
  REQUIRE(two.per_stage.size() == 2);
  CHECK(two.per_stage[0].t == 2);
  CHECK(two.per_stage[0].operations == 80.0L);
  CHECK(two.per_stage[1].t == 1);
  CHECK(two.per_stage[1].operations == 56.0L);
  CHECK(two.sequential_total == 136.0L);

  CHECK(capon_cost(DimSpec({2}), SpectralGridSpec({4})) == 16.0L);
  CHECK(capon_cost(DimSpec({2, 2}), SpectralGridSpec({4, 4})) == 256.0L);

  // Non-uniform orders and grid: stage t charges C_{t-1} ... C_{d-1}.
  const auto mixed = sequential_cost(DimSpec({2, 3, 4}), SpectralGridSpec({5, 6, 7}));
  CHECK(mixed.per_stage[0].operations == (1.5L * 216 + 6 * 24) * 7);
  CHECK(mixed.per_stage[1].operations == (1.5L * 8 + 2 * 6) * 42);
  CHECK(mixed.per_stage[2].operations == (1.5L + 2) * 210);
}

TEST_CASE("cost model in the five-dimensional regime") {
  const DimSpec spec(std::vector<std::size_t>(5, 10));
  for (std::size_t c = 2; c <= 64; c += 2) {
    const SpectralGridSpec grid(std::vector<std::size_t>(5, c));
    const auto r = cost_report(spec, grid);
    const long double hand = uniform_sequential(10, 5, static_cast<long double>(c));
    CHECK(std::fabs(r.sequential_total - hand) <= 1e-15L * hand);
    CHECK(r.capon_total == 1e10L * std::pow(static_cast<long double>(c), 5.0L));
    CHECK(std::floor(r.sequential_total) == r.sequential_total);
    long double sum = 0;
    for (const auto& st : r.per_stage) sum += st.operations;
    CHECK(sum == r.sequential_total);
    if (c >= 4) {
      CHECK(r.sequential_total < r.capon_total);
    } else {
      // At C = 2 the stage-one inversion (1.5e12 per point) outweighs Capon's 3.2e11.
      CHECK(r.sequential_total > r.capon_total);
    }
  }
}

TEST_CASE("cost totals grow with the grid") {
  const DimSpec spec(std::vector<std::size_t>(5, 10));
  long double prev_seq = 0, prev_capon = 0;
  for (std::size_t c = 2; c <= 64; c += 2) {
    const auto r = cost_report(spec, SpectralGridSpec(std::vector<std::size_t>(5, c)));
    CHECK(r.sequential_total > prev_seq);
    CHECK(r.capon_total > prev_capon);
    prev_seq = r.sequential_total;
    prev_capon = r.capon_total;
  }
}

TEST_CASE("correlation_match examples") {
  const auto w = white({3}, 0.2);
  const SpectralGridSpec g16({16});
  const auto flat = correlation_match(SpectrumEstimate{g16, std::vector<double>(16, 0.2)}, w);
  REQUIRE(flat.per_lag.size() == 5);
  for (const auto& l : flat.per_lag) {
    CHECK(l.error < 1e-15);
    CHECK(l.mode == (l.lag[0] == 0 ? ErrorMode::Relative : ErrorMode::Absolute));
  }

  const auto ar = corr_1d({1.0, 0.5});
  const auto s = sequential_spectrum(ar, SpectralGridSpec({256}));
  CHECK(correlation_match(s, ar).max_error() < 1e-3);
}

TEST_CASE("a delta spectrum reconstructs the synthesized line exactly") {
  SpectralComposition line;
  line.peaks.push_back({{0.3, 0.25}, 1.0});
  const auto c = synth_correlation(line, DimSpec({3, 2}));
  const SpectralGridSpec grid({10, 8});
  SpectrumEstimate delta{grid, std::vector<double>(grid.size(), 0.0)};
  delta.power[grid.flat(std::vector<std::size_t>{3, 2})] = static_cast<double>(grid.size());
  CHECK(correlation_match(delta, c).max_error() < 1e-14);
}

TEST_CASE("one-dimensional estimates match their correlations") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = ndspec::testing::random_correlation_1d(rng, 2 + static_cast<std::size_t>(trial % 6));
    const auto s = sequential_spectrum(c, SpectralGridSpec({4096}));
    const auto r = correlation_match(s, c);
    for (const auto& l : r.per_lag) CHECK(std::abs(l.reconstructed - l.original) < 1e-6 * c.zero_lag().real());
  }
}

TEST_CASE("matching error shrinks as the grid is refined") {
  const auto c = corr_1d({1.0, 0.9});
  double prev = INFINITY;
  for (std::size_t n : {64u, 128u, 256u, 512u}) {
    const double e = correlation_match(sequential_spectrum(c, SpectralGridSpec({n})), c).max_error();
    CHECK(e <= 1.1 * prev);
    prev = e;
  }
}

TEST_CASE("aliasing warning") {
  const auto c = white({3, 2}, 1.0);
  const SpectralGridSpec grid({4, 3});
  const auto r = correlation_match(SpectrumEstimate{grid, std::vector<double>(grid.size(), 1.0)}, c);
  CHECK(r.warnings.size() == 1);
  CHECK_THROWS_AS(correlation_match(SpectrumEstimate{SpectralGridSpec({4}), std::vector<double>(4, 1.0)}, c),
                  DimensionMismatch);
}
