// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#include "ndspec/sequential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ndspec/error.hpp"
#include "ndspec/kernels.hpp"

namespace ndspec {

namespace {

// e^{j 2 pi (k m mod C) / C}
cd grid_phase(std::size_t k, std::size_t m, std::size_t count) {
  const double frac = static_cast<double>((k * m) % count) / static_cast<double>(count);
  return std::polar(1.0, 2.0 * std::numbers::pi * frac);
}

// Grid indices of the processed dimensions for a point, ordered like
// `processed` (dimension d-1 first).
std::vector<std::size_t> decode_point(std::size_t point, const std::vector<std::size_t>& processed,
                                      const SpectralGridSpec& grid) {
  std::vector<std::size_t> idx(processed.size());
  for (std::size_t k = processed.size(); k-- > 0;) {
    const std::size_t c = grid.count(processed[k]);
    idx[k] = point % c;
    point /= c;
  }
  return idx;
}

// First block column of `g` along stride `block`: `order` matrices of size block.
void extract_column(const ComplexMatrix& g, std::size_t block, std::size_t order,
                    std::vector<ComplexMatrix>& out) {
  for (std::size_t k = 0; k < order; ++k) {
    ComplexMatrix b(block, block);
    for (std::size_t r = 0; r < block; ++r) {
      const auto src = g.row(k * block + r).first(block);
      std::copy(src.begin(), src.end(), b.row(r).begin());
    }
    out.push_back(std::move(b));
  }
}

}  // namespace

LevinsonResult levinson_1d(const CorrelationSignal& c) {
  if (c.dims() != 1) throw DimensionMismatch("levinson_1d needs a 1D correlation");
  const std::size_t gamma = c.spec().order(0);
  const double c0 = c.zero_lag().real();
  if (!(c0 > 0.0)) throw NotPositiveDefinite(0);

  LevinsonResult res;
  res.p.assign(1, cd(1.0, 0.0));
  res.rho = c0;
  for (std::size_t m = 1; m < gamma; ++m) {
    cd delta{};
    for (std::size_t k = 0; k < m; ++k) {
      const long lag[1] = {static_cast<long>(m - k)};
      delta += res.p[k] * c.at(lag);
    }
    const cd sigma = -delta / res.rho;
    if (!(std::norm(sigma) < 1.0)) throw NotPositiveDefinite(m);
    // p' = [p; 0] + sigma [0; reversed conj(p)]
    std::vector<cd> next(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
      const cd fwd = k < m ? res.p[k] : cd{};
      const cd bwd = k > 0 ? std::conj(res.p[m - k]) : cd{};
      next[k] = fwd + sigma * bwd;
    }
    res.p = std::move(next);
    res.rho *= 1.0 - std::norm(sigma);
    res.sigmas.push_back(sigma);
  }
  return res;
}

SpectrumEstimate ar_spectrum_1d(const LevinsonResult& res, const SpectralGridSpec& grid) {
  if (grid.dims() != 1) throw DimensionMismatch("ar_spectrum_1d needs a 1D grid");
  const std::size_t count = grid.count(0);
  SpectrumEstimate s{grid, std::vector<double>(count)};
  for (std::size_t m = 0; m < count; ++m) {
    cd poly{};
    for (std::size_t k = 0; k < res.p.size(); ++k) poly += res.p[k] * grid_phase(k, m, count);
    s.power[m] = res.rho / std::norm(poly);
  }
  s.validate();
  return s;
}

StageField init_stage(const HermitianMatrix& r_inv, const DimSpec& spec) {
  if (r_inv.size() != spec.size()) {
    throw SizeMismatch("inverse has size " + std::to_string(r_inv.size()) + ", expected q = " +
                       std::to_string(spec.size()));
  }
  const std::size_t d = spec.dims();
  StageField field{spec};
  field.stage = 1;
  field.order = spec.order(d - 1);
  field.block = spec.size() / field.order;
  field.points = 1;
  field.blocks.reserve(field.order);
  extract_column(r_inv.matrix(), field.block, field.order, field.blocks);
  return field;
}

std::vector<ComplexMatrix> fourier_block_sum(const StageField& field, std::size_t m,
                                             std::size_t count) {
  if (m >= count) throw IndexOutOfRange("frequency index out of range");
  std::vector<ComplexMatrix> out;
  out.reserve(field.points);
  for (std::size_t p = 0; p < field.points; ++p) {
    ComplexMatrix acc(field.block, field.block);
    for (std::size_t k = 0; k < field.order; ++k) {
      kernels::axpy(grid_phase(k, m, count), field.at(p, k).data(), acc.data());
    }
    out.push_back(std::move(acc));
  }
  return out;
}

StageField stage_update(const StageField& field, const SpectralGridSpec& grid,
                        const StageObserver& observer) {
  const std::size_t d = field.spec.dims();
  if (field.terminal()) throw DimensionMismatch("stage_update called on a terminal field");
  if (grid.dims() != d) throw DimensionMismatch("grid and correlation differ in dimension count");

  const std::size_t x = field.stage;
  const std::size_t dim = d - x;
  const std::size_t count = grid.count(dim);
  const bool last = x == d;

  StageField next{field.spec};
  next.stage = x + 1;
  next.processed = field.processed;
  next.processed.push_back(dim);
  next.points = field.points * count;
  if (last) {
    next.block = 1;
    next.order = 1;
  } else {
    next.order = field.spec.order(dim - 1);
    next.block = field.block / next.order;
  }
  next.blocks.reserve(next.points * next.order);

  // M(w) per point and new frequency, computed as one block sum per m.
  std::vector<std::vector<ComplexMatrix>> sums(count);
  for (std::size_t m = 0; m < count; ++m) sums[m] = fourier_block_sum(field, m, count);

  for (std::size_t p = 0; p < field.points; ++p) {
    const HermitianMatrix g0 = HermitianMatrix::symmetrize(field.at(p, 0));
    ComplexMatrix chol;
    try {
      chol = cholesky(g0);
    } catch (const NotPositiveDefinite& e) {
      throw NotPositiveDefinite(e.pivot(), x, decode_point(p, field.processed, grid));
    }
    const HermitianMatrix g0_inv = invert_from_cholesky(chol);

    StageDiagnostics diag;
    diag.stage = x;
    diag.point = p;
    if (observer) {
      double max_diag = 0.0;
      double min_pivot = INFINITY;
      for (std::size_t i = 0; i < g0.size(); ++i) {
        max_diag = std::max(max_diag, g0(i, i).real());
        min_pivot = std::min(min_pivot, std::norm(chol(i, i)));
      }
      diag.min_pivot_ratio = min_pivot / max_diag;
    }

    for (std::size_t m = 0; m < count; ++m) {
      const ComplexMatrix raw = congruence(sums[m][p], g0_inv);
      const double scale = max_abs(raw);
      const double defect = hermitian_defect(raw);
      if (scale > 0.0) diag.max_hermitian_defect = std::max(diag.max_hermitian_defect, defect / scale);
      const HermitianMatrix g_new = HermitianMatrix::symmetrize(raw);
      if (last) {
        const cd v = raw(0, 0);
        if (std::abs(v.imag()) > 1e-10 * std::abs(v.real())) {
          throw NumericalError("final spectral inverse is not real at grid point " +
                               std::to_string(p * count + m));
        }
        next.blocks.push_back(g_new.matrix());
      } else {
        extract_column(g_new.matrix(), next.block, next.order, next.blocks);
      }
    }
    if (observer) observer(diag);
  }
  return next;
}

SpectrumEstimate spectrum_from_field(const StageField& field, const SpectralGridSpec& grid) {
  if (!field.terminal()) throw DimensionMismatch("field has unprocessed dimensions");
  if (field.points != grid.size()) throw SizeMismatch("field does not cover the grid");
  SpectrumEstimate s{grid, std::vector<double>(grid.size())};
  for (std::size_t p = 0; p < field.points; ++p) s.power[p] = 1.0 / field.at(p, 0)(0, 0).real();
  s.validate();
  return s;
}

SpectrumEstimate sequential_spectrum(const CorrelationSignal& c, const SpectralGridSpec& grid,
                                     const StageObserver& observer) {
  if (grid.dims() != c.dims()) {
    throw DimensionMismatch("grid has " + std::to_string(grid.dims()) +
                            " dimensions, correlation has " + std::to_string(c.dims()));
  }
  const BlockToeplitzMatrix r = assemble(c);
  StageField field = init_stage(invert_pd(r.entries), c.spec());
  while (!field.terminal()) field = stage_update(field, grid, observer);
  return spectrum_from_field(field, grid);
}

}  // namespace ndspec
