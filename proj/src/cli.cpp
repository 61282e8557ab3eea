// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#include "ndspec/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "ndspec/baselines.hpp"
#include "ndspec/correlation.hpp"
#include "ndspec/error.hpp"
#include "ndspec/io.hpp"
#include "ndspec/kernels.hpp"
#include "ndspec/sequential.hpp"

namespace ndspec::cli {

namespace {

/// Malformed flag values detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double to_double(std::string_view s, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw UsageError("invalid number '" + std::string(s) + "' in " + what);
  }
  return v;
}

std::size_t to_size(std::string_view s, const std::string& what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw UsageError("invalid integer '" + std::string(s) + "' in " + what);
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    out.push_back(s.substr(start, end - start));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

// "f0,f1,...:power"
SpectralPeak parse_peak(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw UsageError("--peak expects f0,f1,...:power, got '" + text + "'");
  SpectralPeak p;
  for (auto f : split(parts[0], ',')) p.f.push_back(to_double(f, "--peak"));
  p.power = to_double(parts[1], "--peak");
  return p;
}

// "axis:f:power"
SpectralPlane parse_plane(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("--plane expects axis:f:power, got '" + text + "'");
  return {to_size(parts[0], "--plane"), to_double(parts[1], "--plane"), to_double(parts[2], "--plane")};
}

// "axis=index"
std::pair<std::size_t, std::size_t> parse_fix(const std::string& text) {
  const auto parts = split(text, '=');
  if (parts.size() != 2) throw UsageError("--fix expects axis=index, got '" + text + "'");
  return {to_size(parts[0], "--fix"), to_size(parts[1], "--fix")};
}

struct Sweep {
  std::size_t lo, hi, step;
};

Sweep parse_sweep(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("--grid-sweep expects cmin:cmax:step");
  Sweep s{to_size(parts[0], "--grid-sweep"), to_size(parts[1], "--grid-sweep"),
          to_size(parts[2], "--grid-sweep")};
  if (s.step == 0) throw UsageError("--grid-sweep step must be >= 1");
  if (s.lo == 0 || s.hi < s.lo) throw UsageError("--grid-sweep needs 1 <= cmin <= cmax");
  return s;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw IoError("failed writing " + path);
}

struct Options {
  // shared
  std::string output;
  std::string input;
  std::string spectrum;
  std::vector<std::size_t> gamma;
  std::vector<std::size_t> grid;
  std::string kernels = "auto";
  // gen
  std::vector<std::string> peaks;
  std::vector<std::string> planes;
  double noise = 0.0;
  bool symmetrize = false;
  // estimate
  std::string method = "sequential";
  double ridge = 0.0;
  // cost
  std::size_t dims = 0;
  std::string sweep;
  // slice
  std::vector<std::string> fixes;
};

void select_kernels(const std::string& name) {
  if (name == "auto") {
    kernels::set_backend(kernels::detect_backend());
  } else if (name == "scalar") {
    kernels::set_backend(kernels::Backend::Scalar);
  } else if (name == "avx2") {
    if (!kernels::backend_available(kernels::Backend::Avx2)) throw UsageError("avx2 kernels are not available on this CPU");
    kernels::set_backend(kernels::Backend::Avx2);
  }
}

std::string cmd_gen(const Options& o) {
  SpectralComposition comp;
  for (const auto& p : o.peaks) comp.peaks.push_back(parse_peak(p));
  for (const auto& p : o.planes) comp.planes.push_back(parse_plane(p));
  comp.noise_var = o.noise;
  if (o.symmetrize) comp = symmetrized(comp);
  try {
    comp.validate(o.gamma.size());
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const CorrelationSignal c = synth_correlation(comp, DimSpec(o.gamma));
  std::ostringstream os;
  io::write_correlation(os, c);
  return os.str();
}

std::string cmd_estimate(const Options& o) {
  CorrelationSignal c = io::load_correlation(o.input);
  if (o.grid.size() != c.dims()) {
    throw UsageError("--grid has " + std::to_string(o.grid.size()) + " counts, correlation has " +
                     std::to_string(c.dims()) + " dimensions");
  }
  if (o.ridge > 0.0) c = c.with_ridge(o.ridge);
  const SpectralGridSpec grid(o.grid);
  SpectrumEstimate s = o.method == "capon"
                           ? capon_spectrum(invert_pd(assemble(c).entries), c.spec(), grid)
                           : sequential_spectrum(c, grid);
  std::ostringstream os;
  io::write_spectrum_csv(os, s);
  return os.str();
}

std::string cmd_cost(const Options& o) {
  if (o.dims == 0) throw UsageError("--dims must be >= 1");
  std::vector<std::size_t> gamma = o.gamma;
  if (gamma.size() == 1) gamma.assign(o.dims, gamma[0]);
  if (gamma.size() != o.dims) throw UsageError("--gamma needs 1 or --dims values");
  const Sweep sweep = parse_sweep(o.sweep);
  const DimSpec spec(gamma);
  std::vector<io::CostRow> rows;
  for (std::size_t c = sweep.lo; c <= sweep.hi; c += sweep.step) {
    const CostReport r = cost_report(spec, SpectralGridSpec(std::vector<std::size_t>(o.dims, c)));
    rows.push_back({c, r.sequential_total, r.capon_total});
  }
  std::ostringstream os;
  io::write_cost_csv(os, rows);
  return os.str();
}

std::string cmd_match(const Options& o, std::ostream& err) {
  const SpectrumEstimate s = io::load_spectrum_csv(o.spectrum);
  const CorrelationSignal c = io::load_correlation(o.input);
  if (s.grid.dims() != c.dims()) {
    throw ParseError("spectrum has " + std::to_string(s.grid.dims()) + " dimensions, correlation has " +
                     std::to_string(c.dims()));
  }
  const MatchReport r = correlation_match(s, c);
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  std::ostringstream os;
  io::write_match_csv(os, r, c.dims());
  return os.str();
}

std::string cmd_slice(const Options& o) {
  const SpectrumEstimate s = io::load_spectrum_csv(o.spectrum);
  std::vector<std::pair<std::size_t, std::size_t>> fixed;
  for (const auto& f : o.fixes) fixed.push_back(parse_fix(f));
  io::SpectrumSlice slice;
  try {
    slice = io::extract_slice(s, fixed);
  } catch (const DimensionMismatch& e) {
    throw UsageError(e.what());
  } catch (const IndexOutOfRange& e) {
    throw UsageError(e.what());
  }
  std::ostringstream os;
  io::write_slice_csv(os, slice);
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequential multidimensional spectral estimation", "ndspec"};
  app.require_subcommand(1);
  Options o;

  auto add_kernels = [&](CLI::App* sub) {
    sub->add_option("--kernels", o.kernels, "Inner-loop kernels")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
        ->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "Synthesize a correlation file from a spectral composition");
  gen->add_option("--gamma", o.gamma, "Per-dimension orders, e.g. 3,3,3")->required()->delimiter(',');
  gen->add_option("--peak", o.peaks, "Spectral line f0,f1,...:power (repeatable)");
  gen->add_option("--plane", o.planes, "Spectral plane axis:f:power (repeatable)");
  gen->add_option("--noise", o.noise, "White noise variance");
  gen->add_flag("--symmetrize", o.symmetrize, "Add the mirror component at -f for every peak and plane");
  gen->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* est = app.add_subcommand("estimate", "Estimate the power spectrum on a uniform grid");
  est->add_option("-i,--input", o.input, "Correlation file")->required();
  est->add_option("--grid", o.grid, "Grid counts per dimension, e.g. 10,10,10")->required()->delimiter(',');
  est->add_option("--method", o.method, "Estimator")
      ->check(CLI::IsMember({"sequential", "capon"}))
      ->capture_default_str();
  est->add_option("--ridge", o.ridge, "Diagonal loading: adds ridge * c(0) to the zero lag")
      ->check(CLI::NonNegativeNumber);
  est->add_option("-o,--output", o.output, "Output CSV (default stdout)");
  add_kernels(est);

  auto* cost = app.add_subcommand("cost", "Operation counts of the sequential and Capon estimators");
  cost->add_option("--gamma", o.gamma, "Order (uniform) or per-dimension orders")->required()->delimiter(',');
  cost->add_option("--dims", o.dims, "Dimension count")->required();
  cost->add_option("--grid-sweep", o.sweep, "Uniform grid counts cmin:cmax:step")->required();
  cost->add_option("-o,--output", o.output, "Output CSV (default stdout)");

  auto* match = app.add_subcommand("match", "Correlation-matching error of a spectrum estimate");
  match->add_option("--spectrum", o.spectrum, "Spectrum CSV")->required();
  match->add_option("-i,--input", o.input, "Original correlation file")->required();
  match->add_option("-o,--output", o.output, "Output CSV (default stdout)");
  add_kernels(match);

  auto* slice = app.add_subcommand("slice", "2D cut through a spectrum CSV");
  slice->add_option("--spectrum", o.spectrum, "Spectrum CSV")->required();
  slice->add_option("--fix", o.fixes, "Pinned axis=index (repeatable)");
  slice->add_option("-o,--output", o.output, "Output CSV (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsage;
  }

  try {
    select_kernels(o.kernels);
    std::string text;
    if (gen->parsed()) {
      text = cmd_gen(o);
    } else if (est->parsed()) {
      text = cmd_estimate(o);
    } else if (cost->parsed()) {
      text = cmd_cost(o);
    } else if (match->parsed()) {
      text = cmd_match(o, err);
    } else {
      text = cmd_slice(o);
    }
    emit(text, o.output, out);
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotPositiveDefinite& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace ndspec::cli
