// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#include "ndspec/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "ndspec/error.hpp"

namespace ndspec::io {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(sep, start);
    out.push_back(line.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

double parse_double(std::string_view tok, std::size_t line_no) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || tok.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": invalid number '" + std::string(tok) + "'");
  }
  return v;
}

long parse_long(std::string_view tok, std::size_t line_no) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": invalid integer '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) return "0.0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, ptr);
  if (s.find_first_of(".eEni") == std::string::npos) s += ".0";
  return s;
}

std::string format_count(long double v) {
  if (std::floor(v) == v && std::fabs(v) < 1e30L) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.0Lf", v);
    return buf;
  }
  return format_double(static_cast<double>(v));
}

void write_correlation(std::ostream& out, const CorrelationSignal& c) {
  out << "ndcorr 1\n";
  out << "gamma:";
  for (std::size_t g : c.spec().gamma()) out << ' ' << g;
  out << '\n';
  for (std::size_t pos = 0; pos < c.lag_count(); ++pos) {
    const Lag t = c.lag_at(pos);
    for (long v : t) out << v << ' ';
    const cd v = c.values()[pos];
    out << format_double(v.real()) << ' ' << format_double(v.imag()) << '\n';
  }
}

CorrelationSignal read_correlation(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || trim(line) != "ndcorr 1") {
    throw ParseError("line 1: expected 'ndcorr 1' header");
  }
  ++line_no;
  if (!std::getline(in, line)) throw ParseError("line 2: missing gamma line");
  std::string_view gl = trim(line);
  if (gl.substr(0, 6) != "gamma:") throw ParseError("line 2: expected 'gamma:'");
  std::vector<std::size_t> gamma;
  for (auto tok : split_ws(gl.substr(6))) {
    const long g = parse_long(tok, line_no);
    if (g < 1) throw ParseError("line 2: orders must be >= 1");
    gamma.push_back(static_cast<std::size_t>(g));
  }
  if (gamma.empty()) throw ParseError("line 2: no orders given");

  CorrelationSignal c{DimSpec(gamma)};
  const std::size_t d = gamma.size();
  std::vector<cd> raw(c.lag_count());
  std::vector<bool> seen(c.lag_count(), false);
  Lag t(d);
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const auto tok = split_ws(body);
    if (tok.size() != d + 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(d + 2) + " fields");
    }
    for (std::size_t i = 0; i < d; ++i) t[i] = parse_long(tok[i], line_no);
    std::size_t pos = 0;
    try {
      pos = c.position(t);
    } catch (const IndexOutOfRange&) {
      throw ParseError("line " + std::to_string(line_no) + ": lag outside the order box");
    }
    if (seen[pos]) throw ParseError("line " + std::to_string(line_no) + ": duplicate lag");
    seen[pos] = true;
    raw[pos] = cd(parse_double(tok[d], line_no), parse_double(tok[d + 1], line_no));
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw ParseError("correlation file does not list every lag of the order box");
  }

  double scale = 0.0;
  for (const cd& v : raw) scale = std::max(scale, std::abs(v));
  const double tol = kHermitianLoadTolerance * scale;
  const std::size_t center = raw.size() / 2;
  for (std::size_t pos = 0; pos <= center; ++pos) {
    const cd a = raw[pos];
    const cd b = std::conj(raw[raw.size() - 1 - pos]);
    if (std::abs(a - b) > tol) {
      const Lag lag = c.lag_at(pos);
      std::string s;
      for (long v : lag) s += (s.empty() ? "" : ",") + std::to_string(v);
      throw ParseError("correlation is not Hermitian at lag (" + s + ")");
    }
    c.set_at(pos, 0.5 * (a + b));
  }
  if (c.zero_lag().real() < -tol) throw ParseError("zero-lag correlation is negative");
  return c;
}

CorrelationSignal load_correlation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_correlation(in);
}

void write_spectrum_csv(std::ostream& out, const SpectrumEstimate& s) {
  const SpectralGridSpec& grid = s.grid;
  for (std::size_t i = 0; i < grid.dims(); ++i) out << "f_" << i << ',';
  out << "power\n";
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const auto m = grid.multi(g);
    for (std::size_t i = 0; i < grid.dims(); ++i) out << format_double(grid.frequency(i, m[i])) << ',';
    out << format_double(s.power[g]) << '\n';
  }
}

SpectrumEstimate read_spectrum_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty spectrum file");
  const auto header = split(trim(line), ',');
  if (header.size() < 2 || header.back() != "power") throw ParseError("line 1: expected f_0,...,power header");
  const std::size_t d = header.size() - 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (header[i] != "f_" + std::to_string(i)) throw ParseError("line 1: unexpected column '" + std::string(header[i]) + "'");
  }

  std::vector<std::vector<double>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const auto tok = split(body, ',');
    if (tok.size() != d + 1) throw ParseError("line " + std::to_string(line_no) + ": wrong column count");
    std::vector<double> row(d + 1);
    for (std::size_t i = 0; i <= d; ++i) row[i] = parse_double(trim(tok[i]), line_no);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("spectrum file has no rows");

  std::vector<std::size_t> counts(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::set<double> distinct;
    for (const auto& r : rows) distinct.insert(r[i]);
    counts[i] = distinct.size();
  }
  SpectralGridSpec grid(counts);
  if (rows.size() != grid.size()) throw ParseError("spectrum rows do not form a full grid");

  SpectrumEstimate s{grid, std::vector<double>(grid.size(), 0.0)};
  std::vector<bool> seen(grid.size(), false);
  std::vector<std::size_t> m(d);
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < d; ++i) {
      const double scaled = r[i] * static_cast<double>(counts[i]);
      const double idx = std::round(scaled);
      if (idx < 0 || idx >= static_cast<double>(counts[i]) || std::abs(scaled - idx) > 1e-6) {
        throw ParseError("frequency " + format_double(r[i]) + " is not on a uniform grid");
      }
      m[i] = static_cast<std::size_t>(idx);
    }
    const std::size_t g = grid.flat(m);
    if (seen[g]) throw ParseError("duplicate grid point in spectrum file");
    seen[g] = true;
    s.power[g] = r[d];
  }
  return s;
}

SpectrumEstimate load_spectrum_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_spectrum_csv(in);
}

void write_match_csv(std::ostream& out, const MatchReport& report, std::size_t dims) {
  for (std::size_t i = 0; i < dims; ++i) out << "t_" << i << ',';
  out << "r_re,r_im,rhat_re,rhat_im,rel_err,mode\n";
  for (const auto& l : report.per_lag) {
    for (long v : l.lag) out << v << ',';
    out << format_double(l.original.real()) << ',' << format_double(l.original.imag()) << ','
        << format_double(l.reconstructed.real()) << ',' << format_double(l.reconstructed.imag()) << ','
        << format_double(l.error) << ',' << (l.mode == ErrorMode::Relative ? "rel" : "abs") << '\n';
  }
}

void write_cost_csv(std::ostream& out, const std::vector<CostRow>& rows) {
  out << "C,sequential_ops,capon_ops\n";
  for (const auto& r : rows) {
    out << r.c << ',' << format_count(r.sequential) << ',' << format_count(r.capon) << '\n';
  }
}

SpectrumSlice extract_slice(const SpectrumEstimate& s,
                            const std::vector<std::pair<std::size_t, std::size_t>>& fixed) {
  const SpectralGridSpec& grid = s.grid;
  const std::size_t d = grid.dims();
  std::vector<std::size_t> m(d, 0);
  std::vector<bool> pinned(d, false);
  for (const auto& [axis, index] : fixed) {
    if (axis >= d) throw IndexOutOfRange("slice axis " + std::to_string(axis) + " out of range");
    if (index >= grid.count(axis)) throw IndexOutOfRange("slice index " + std::to_string(index) + " out of range");
    if (pinned[axis]) throw DimensionMismatch("axis " + std::to_string(axis) + " fixed twice");
    pinned[axis] = true;
    m[axis] = index;
  }
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < d; ++i)
    if (!pinned[i]) free.push_back(i);
  if (free.size() != 2) {
    throw DimensionMismatch("a slice needs exactly 2 free axes, got " + std::to_string(free.size()));
  }

  SpectrumSlice out;
  out.row_axis = free[0];
  out.col_axis = free[1];
  for (std::size_t r = 0; r < grid.count(free[0]); ++r) out.row_f.push_back(grid.frequency(free[0], r));
  for (std::size_t c = 0; c < grid.count(free[1]); ++c) out.col_f.push_back(grid.frequency(free[1], c));
  for (std::size_t r = 0; r < out.row_f.size(); ++r) {
    for (std::size_t c = 0; c < out.col_f.size(); ++c) {
      m[free[0]] = r;
      m[free[1]] = c;
      out.values.push_back(s.at(m));
    }
  }
  return out;
}

void write_slice_csv(std::ostream& out, const SpectrumSlice& slice) {
  out << "f_" << slice.row_axis << "/f_" << slice.col_axis;
  for (double f : slice.col_f) out << ',' << format_double(f);
  out << '\n';
  for (std::size_t r = 0; r < slice.row_f.size(); ++r) {
    out << format_double(slice.row_f[r]);
    for (std::size_t c = 0; c < slice.col_f.size(); ++c) out << ',' << format_double(slice.at(r, c));
    out << '\n';
  }
}

}  // namespace ndspec::io
