// Copyright 2026 The impulsewave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "impulsewave/analysis.hpp"
#include "impulsewave/analytic.hpp"
#include "impulsewave/cli.hpp"
#include "impulsewave/errors.hpp"
#include "impulsewave/generators.hpp"
#include "impulsewave/io.hpp"
#include "impulsewave/prbs.hpp"
#include "impulsewave/tolerances.hpp"
#include "internal.hpp"

namespace impulsewave::cli {

namespace {

const char* const kPrbsKeys[] = {"lfsr.width", "lfsr.taps",   "lfsr.seed_state", "clock.t_c",
                                 "clock.alpha", "clock.k",    "clock.mode",      "clock.seed"};

/// Output sink: the named file, or `fallback` for "" and "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

Eigen::VectorXd lag_axis(const RunConfig& cfg) {
  return lag_grid(cfg.lag_min, cfg.lag_max, cfg.lag_count);
}

void report(std::ostream& err, const Diagnostics& diag) {
  for (const auto& w : diag.warnings) err << "warning: " << w << '\n';
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = *cfg.seed;
  Diagnostics diag;
  std::optional<BinaryWaveform> w;
  if (cfg.process == "telegraph") {
    RandomSource rng(seed, Stream::telegraph);
    w = gen_telegraph(cfg.rate, cfg.duration, rng);
  } else if (cfg.process == "gaussian") {
    RandomSource rng(seed, Stream::gaussian);
    const GaussianSpec spec{spectrum_kind_from_string(cfg.spectrum), cfg.rate, cfg.oversample};
    w = gen_hardlimited_gaussian(spec, cfg.duration, rng);
  } else if (cfg.process == "bernoulli") {
    RandomSource rng(seed, Stream::chip);
    const ChipDistribution d(chip_kind_from_string(cfg.chip), cfg.t_c, cfg.alpha);
    w = gen_bernoulli(d, cfg.duration, rng);
  } else if (cfg.process == "prbs") {
    w = cfg.chips > 0 ? gen_prbs_chips(cfg.prbs.lfsr, cfg.prbs.clock(), cfg.chips)
                      : gen_prbs_waveform(cfg.prbs.lfsr, cfg.prbs.clock(), cfg.duration);
  } else if (cfg.process == "sampled-hold") {
    RandomSource rng(seed, Stream::telegraph);
    const BinaryWaveform source = gen_telegraph(cfg.rate, cfg.duration, rng);
    w = gen_sampled_hold(source, cfg.prbs.clock(), &diag);
  } else {
    w = gen_product(read_waveform_file(cfg.inputs[0]), read_waveform_file(cfg.inputs[1]));
  }
  report(err, diag);
  HeaderComments h = cfg.header_lines();
  h.push_back("transitions = " + std::to_string(w->transition_count()));
  Sink sink(cfg.output, out);
  write_waveform(sink.get(), *w, h);
  return kExitOk;
}

int cmd_acf(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const BinaryWaveform w = read_waveform_file(cfg.inputs[0]);
  Diagnostics diag;
  const AcfCurve c = cfg.oracle_step > 0.0
                         ? acf_oracle_dense(w, lag_axis(cfg), cfg.oracle_step, &diag)
                         : acf_exact(w, lag_axis(cfg));
  report(err, diag);
  HeaderComments h = cfg.header_lines();
  h.push_back("effective_duration = " + detail::format_number(c.effective_duration));
  Sink sink(cfg.output, out);
  write_acf_csv(sink.get(), c, h);
  return kExitOk;
}

int cmd_psd(const RunConfig& cfg, std::ostream& out) {
  const BinaryWaveform w = read_waveform_file(cfg.inputs[0]);
  const Eigen::VectorXd omegas =
      cfg.omega_count == 0 ? Eigen::VectorXd() : lag_grid(0.0, cfg.omega_max, cfg.omega_count);
  const PsdCurve c = psd_estimate(w, omegas, PsdOptions{cfg.segment_length, cfg.sample_step});
  Sink sink(cfg.output, out);
  write_psd_csv(sink.get(), c, cfg.header_lines());
  return kExitOk;
}

int cmd_interferogram(const RunConfig& cfg, std::ostream& out) {
  const BinaryWaveform w = read_waveform_file(cfg.inputs[0]);
  const Interferogram c = interferogram(w, lag_axis(cfg), cfg.max_crossings);
  Sink sink(cfg.output, out);
  write_interferogram_csv(sink.get(), c, cfg.header_lines());
  return kExitOk;
}

int cmd_analytic(const RunConfig& cfg, std::ostream& out) {
  const auto fn = detail::analytic_curve(cfg);
  const bool spectral = analytic_curve_is_spectral(cfg.curve);
  const char* axis = spectral ? "omega" : "lag";
  Eigen::VectorXd grid;
  Eigen::VectorXd reference;
  if (!cfg.compare.empty()) {
    const CsvTable table = read_csv_file(cfg.compare);
    grid = table.column(axis);
    reference = table.column("value");
    if (grid.size() == 0) throw std::invalid_argument("'" + cfg.compare + "' has no data rows");
  } else if (spectral) {
    grid = lag_grid(0.0, cfg.omega_max, cfg.omega_count);
  } else {
    grid = lag_axis(cfg);
  }
  const Eigen::VectorXd values = grid.unaryExpr(fn);
  if (cfg.compare.empty() || !cfg.output.empty()) {
    Sink sink(cfg.output, out);
    write_csv(sink.get(), {axis, "value"}, {grid, values}, cfg.header_lines());
  }
  if (cfg.compare.empty()) return kExitOk;

  const double sup = (values - reference).cwiseAbs().maxCoeff();
  const bool ok = sup < cfg.tolerance;
  out << (ok ? "PASS" : "FAIL") << "  " << cfg.curve << " vs " << cfg.compare
      << "  sup error=" << detail::format_number(sup) << " over " << grid.size()
      << " points (need < " << detail::format_number(cfg.tolerance) << ")\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
  for (const auto& path : reproduce_figure(cfg.figure, cfg.outdir, cfg.seed.value_or(1))) {
    out << path << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::vector<CheckResult> results = run_suite(cfg.suite, cfg.verify);
  std::size_t passed = 0;
  for (const auto& r : results) {
    print_check(out, r);
    if (r.passed) ++passed;
  }
  out << passed << '/' << results.size() << " checks passed (suite " << cfg.suite
      << ", seed " << cfg.verify.seed << ", tolerance table v"
      << tolerances::kToleranceTableVersion << ")\n";
  return passed == results.size() ? kExitOk : kExitCheckFailed;
}

void add_grid_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--lag-min", cfg.lag_min, "First lag (s)")->capture_default_str();
  sub->add_option("--lag-max", cfg.lag_max, "Last lag (s)")->capture_default_str();
  sub->add_option("--lag-count", cfg.lag_count, "Number of lags")->capture_default_str();
}

void add_process_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n0", cfg.rate, "Zero-crossing rate n0 (1/s)")->capture_default_str();
  sub->add_option("--spectrum", cfg.spectrum, "gaussian or uniform-band")->capture_default_str();
  sub->add_option("--chip", cfg.chip, "degenerate, uniform or raised-cosine")
      ->capture_default_str();
  sub->add_option("--tc", cfg.t_c, "Mean chip duration (s)")->capture_default_str();
  sub->add_option("--alpha", cfg.alpha, "Chip spread in [0, 1]")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random binary waveforms with impulse-like autocorrelation"};
  app.name(args.empty() ? "impulsewave" : args.front());
  app.require_subcommand(1);

  RunConfig cfg;
  std::string prbs_config;
  std::map<std::string, std::string> prbs_flags;
  std::optional<double> verify_alpha;

  auto* gen = app.add_subcommand("generate", "Write a waveform file");
  gen->add_option("--process", cfg.process,
                  "telegraph, gaussian, bernoulli, prbs, sampled-hold or product")
      ->required();
  add_process_options(gen, cfg);
  gen->add_option("--oversample", cfg.oversample, "Gaussian grid samples per 1/n0")
      ->capture_default_str();
  gen->add_option("--duration", cfg.duration, "Duration (s)");
  gen->add_option("--chips", cfg.chips, "prbs: number of chips instead of a duration");
  gen->add_option("--seed", cfg.seed, "Random seed (required)");
  gen->add_option("--input", cfg.inputs, "product: the two factor waveform files");
  gen->add_option("--config", prbs_config, "PRBS key = value file");
  for (const char* key : kPrbsKeys) {
    gen->add_option_function<std::string>(
        std::string("--") + key, [&prbs_flags, key](const std::string& v) { prbs_flags[key] = v; },
        "PRBS setting " + std::string(key));
  }
  gen->add_option("-o,--output", cfg.output, "Output file (default stdout)");

  auto* acf = app.add_subcommand("acf", "Exact time-average autocorrelation of a waveform");
  acf->add_option("--input", cfg.inputs, "Waveform file")->required();
  add_grid_options(acf, cfg);
  acf->add_option("--oracle-step", cfg.oracle_step, "Use the dense-grid reference with this step");
  acf->add_option("-o,--output", cfg.output, "Output CSV (default stdout)");

  auto* psd = app.add_subcommand("psd", "Averaged-periodogram spectral density of a waveform");
  psd->add_option("--input", cfg.inputs, "Waveform file")->required();
  psd->add_option("--omega-max", cfg.omega_max, "Largest angular frequency (rad/s)")
      ->capture_default_str();
  psd->add_option("--omega-count", cfg.omega_count, "Grid points; 0 for the native bins")
      ->capture_default_str();
  psd->add_option("--segment", cfg.segment_length, "Segment length (s)")->capture_default_str();
  psd->add_option("--sample-step", cfg.sample_step, "Sampling step (s); 0 picks one")
      ->capture_default_str();
  psd->add_option("-o,--output", cfg.output, "Output CSV (default stdout)");

  auto* ig = app.add_subcommand("interferogram", "Zero-crossing interferogram of a waveform");
  ig->add_option("--input", cfg.inputs, "Waveform file")->required();
  add_grid_options(ig, cfg);
  ig->add_option("--max-crossings", cfg.max_crossings, "Crossings to average")
      ->capture_default_str();
  ig->add_option("-o,--output", cfg.output, "Output CSV (default stdout)");

  auto* an = app.add_subcommand("analytic", "Closed-form reference curves");
  an->add_option("--curve", cfg.curve, "Curve name")
      ->required()
      ->check(CLI::IsMember(analytic_curve_names()));
  add_process_options(an, cfg);
  add_grid_options(an, cfg);
  an->add_option("--omega-max", cfg.omega_max, "Largest angular frequency (rad/s)")
      ->capture_default_str();
  an->add_option("--omega-count", cfg.omega_count, "Frequency grid points")->capture_default_str();
  an->add_option("--compare", cfg.compare, "CSV to compare against, on its own grid");
  an->add_option("--tolerance", cfg.tolerance, "Sup-error threshold for --compare")
      ->capture_default_str();
  an->add_option("-o,--output", cfg.output, "Output CSV (default stdout)");

  auto* fig = app.add_subcommand("reproduce-figure", "Write the data behind one figure");
  fig->add_option("--fig", cfg.figure, "Figure number")->required();
  fig->add_option("--outdir", cfg.outdir, "Output directory")->capture_default_str();
  fig->add_option("--seed", cfg.seed, "Random seed (default 1)");

  auto* ver = app.add_subcommand("verify", "Run estimator-versus-closed-form checks");
  ver->add_option("--suite", cfg.suite, "Suite name")
      ->capture_default_str()
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--alpha", verify_alpha, "Single spread for the uniform-chip suites");
  ver->add_option("--chips", cfg.verify.chips, "Chips per realization")->capture_default_str();
  ver->add_option("--seed", cfg.verify.seed, "Random seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "generate") {
      std::vector<std::string> keys;
      if (!prbs_config.empty()) cfg.prbs = read_prbs_config_file(prbs_config, &keys);
      bool taps_given = std::find(keys.begin(), keys.end(), "lfsr.taps") != keys.end();
      for (const auto& [key, value] : prbs_flags) {
        set_prbs_key(cfg.prbs, key, value, &taps_given);
        keys.push_back(key);
      }
      if (prbs_flags.count("lfsr.width") != 0 && !taps_given) {
        cfg.prbs.lfsr.taps = LfsrConfig::default_taps(cfg.prbs.lfsr.width);
      }
      if (cfg.seed && std::find(keys.begin(), keys.end(), "clock.seed") == keys.end()) {
        cfg.prbs.clock_seed = *cfg.seed;
      }
    }
    if (verify_alpha) cfg.verify.alphas = {*verify_alpha};
    cfg.validate();

    if (cfg.command == "generate") return cmd_generate(cfg, out, err);
    if (cfg.command == "acf") return cmd_acf(cfg, out, err);
    if (cfg.command == "psd") return cmd_psd(cfg, out);
    if (cfg.command == "interferogram") return cmd_interferogram(cfg, out);
    if (cfg.command == "analytic") return cmd_analytic(cfg, out);
    if (cfg.command == "reproduce-figure") return cmd_reproduce(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace impulsewave::cli
