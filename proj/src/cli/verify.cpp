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


#include "impulsewave/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "impulsewave/analysis.hpp"
#include "impulsewave/analytic.hpp"
#include "impulsewave/generators.hpp"
#include "impulsewave/io.hpp"
#include "impulsewave/prbs.hpp"
#include "impulsewave/tolerances.hpp"

namespace impulsewave {

namespace tol = tolerances;

namespace {

std::string fmt(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void below(const std::string& check, double measured, double tolerance) {
    add(check, measured, tolerance, "<", measured < tolerance);
  }
  void at_most(const std::string& check, double measured, double tolerance) {
    add(check, measured, tolerance, "<=", measured <= tolerance);
  }
  void at_least(const std::string& check, double measured, double tolerance) {
    add(check, measured, tolerance, ">=", measured >= tolerance);
  }

  /// Records min over lags of acf - (1 - 2 n0 |tau|) against -slack.
  void tangent(const std::string& label, const AcfCurve& acf, double rate) {
    double worst = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < acf.lags.size(); ++k) {
      worst = std::min(worst, acf.values[k] - (1.0 - 2.0 * rate * std::abs(acf.lags[k])));
    }
    add("tangent " + label, worst, -tol::kTangentSlack, ">=", worst >= -tol::kTangentSlack);
    results_.back().tangent = true;
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  void add(const std::string& check, double measured, double tolerance, const char* rel,
           bool ok) {
    CheckResult r;
    r.suite = name_;
    r.name = check;
    r.measured = measured;
    r.tolerance = tolerance;
    r.relation = rel;
    r.passed = ok && std::isfinite(measured);
    results_.push_back(std::move(r));
  }

  std::string name_;
  std::vector<CheckResult> results_;
};

double sup_error(const AcfCurve& c, const std::function<double(double)>& reference) {
  double worst = 0.0;
  for (Eigen::Index k = 0; k < c.lags.size(); ++k) {
    worst = std::max(worst, std::abs(c.values[k] - reference(c.lags[k])));
  }
  return worst;
}

// rms of the error divided by the rms of the reference.
double relative_rms(const PsdCurve& c, const std::function<double(double)>& reference) {
  double err = 0.0;
  double ref = 0.0;
  for (Eigen::Index k = 0; k < c.omegas.size(); ++k) {
    const double s = reference(c.omegas[k]);
    err += (c.values[k] - s) * (c.values[k] - s);
    ref += s * s;
  }
  return std::sqrt(err / ref);
}

std::string alpha_label(double alpha) { return "alpha=" + fmt(alpha); }

RandomSource source(const VerifyOptions& o, Stream stream, std::uint64_t child) {
  return RandomSource(o.seed, stream).substream(child);
}

std::vector<CheckResult> suite_eq20(const VerifyOptions& o) {
  Suite s("eq20");
  const Eigen::VectorXd lags = lag_grid(0.0, 2.5, 251);
  for (std::size_t i = 0; i < o.alphas.size(); ++i) {
    const double alpha = o.alphas[i];
    const auto d = ChipDistribution::uniform(1.0, alpha);
    RandomSource rng = source(o, Stream::chip, 100 + i);
    const BinaryWaveform w = gen_bernoulli(d, o.chips * d.mean_chip(), rng);
    const AcfCurve acf = acf_exact(w, lags);
    const ModelParams p(1.0, alpha);
    s.below("acf sup error " + alpha_label(alpha),
            sup_error(acf, [&](double t) { return acf_model(p, t); }), tol::kModelAcfSup);
    s.tangent("uniform chips " + alpha_label(alpha), acf, crossing_rate(w));
  }
  return s.take();
}

std::vector<CheckResult> suite_prbs(const VerifyOptions& o) {
  Suite s("prbs");
  const Eigen::VectorXd lags = lag_grid(0.0, 2.5, 251);
  {
    const auto lfsr = LfsrConfig::with_default_taps(20, 1);
    const auto clk = SpreadClockConfig::uniform_spread(1.0, 0.5, 64, ClockMode::permute_per_cycle,
                                                       o.seed);
    const BinaryWaveform w = gen_prbs_chips(lfsr, clk, (std::size_t{1} << 20) - 1);
    const AcfCurve acf = acf_exact(w, lags);
    const ModelParams p(1.0, 0.5);
    s.below("m=20 K=64 alpha=0.5 acf sup error",
            sup_error(acf, [&](double t) { return acf_model(p, t); }), tol::kPrbsAcfSup);
    s.tangent("spread-clock prbs m=20", acf, crossing_rate(w));

    // A replica needs its own register phase as well as its own clock seed:
    // every clock cycle sums to the same K t_c, so two clocks driving the
    // same symbol stream drift apart by at most a few chips and stay
    // correlated.
    const auto lfsr2 = LfsrConfig::with_default_taps(20, 0x5d3a7);
    const auto clk2 = SpreadClockConfig::uniform_spread(1.0, 0.5, 64, ClockMode::permute_per_cycle,
                                                        o.seed + 1);
    const BinaryWaveform w2 = gen_prbs_chips(lfsr2, clk2, (std::size_t{1} << 20) - 1);
    const AcfCurve x = xcorr_exact(w, w2, lag_grid(-2.5, 2.5, 501));
    s.below("replica cross-correlation peak", x.values.cwiseAbs().maxCoeff(),
            tol::kReplicaXcorrPeak);
  }
  {
    const auto lfsr = LfsrConfig::with_default_taps(16, 1);
    const SpreadClockConfig clk{{1.0}, ClockMode::cyclic_fixed, o.seed};
    const BinaryWaveform w = gen_prbs_chips(lfsr, clk, (std::size_t{1} << 16) - 1);
    const AcfCurve acf = acf_exact(w, lags);
    s.below("m=16 constant clock acf sup error",
            sup_error(acf, [](double t) { return acf_triangle(1.0, t); }), tol::kPrbsAcfSup);
    s.tangent("constant-clock prbs m=16", acf, crossing_rate(w));
  }
  return s.take();
}

std::vector<CheckResult> suite_telegraph(const VerifyOptions& o) {
  Suite s("telegraph");
  const double rate = 1.0;
  RandomSource rng = source(o, Stream::telegraph, 1);
  const BinaryWaveform w = gen_telegraph(rate, 1e6 / rate, rng);
  const AcfCurve acf = acf_exact(w, lag_grid(0.0, 2.0 / rate, 201));
  s.below("acf sup error", sup_error(acf, [&](double t) { return acf_telegraph(rate, t); }),
          tol::kTelegraphAcfSup);
  const PsdCurve psd = psd_estimate(w, lag_grid(0.0, 10.0 * rate, 201), PsdOptions{});
  s.below("psd relative rms", relative_rms(psd, [&](double om) { return psd_telegraph(rate, om); }),
          tol::kPsdRelRms);
  s.tangent("telegraph", acf, crossing_rate(w));
  return s.take();
}

std::vector<CheckResult> suite_arcsine(const VerifyOptions& o) {
  Suite s("arcsine");
  const double rate = 1.0;
  const Eigen::VectorXd lags = lag_grid(0.0, 2.0, 201);
  std::uint64_t child = 0;
  for (SpectrumKind kind : {SpectrumKind::gaussian, SpectrumKind::uniform_band}) {
    const GaussianSpec spec{kind, rate, 32};
    RandomSource rng = source(o, Stream::gaussian, ++child);
    const BinaryWaveform w = gen_hardlimited_gaussian(spec, 1e5 / rate, rng);
    const AcfCurve acf = acf_exact(w, lags);
    const std::string label(to_string(kind));
    s.below("acf sup error " + label,
            sup_error(acf, [&](double t) { return acf_hardlimited(kind, rate, t); }),
            tol::kArcsineAcfSup);
    s.below("crossing rate relative error " + label, std::abs(crossing_rate(w) / rate - 1.0),
            tol::kGaussianRateRel);
    s.tangent("hard-limited " + label, acf, crossing_rate(w));
  }
  return s.take();
}

std::vector<CheckResult> suite_interferogram(const VerifyOptions& o) {
  Suite s("interferogram");
  // Odd multiples of 0.0125 never land on a chip boundary lag.
  const Eigen::VectorXd lags = lag_grid(-2.4875, 2.4875, 200);
  {
    const auto d = ChipDistribution::degenerate(1.0);
    RandomSource rng = source(o, Stream::chip, 200);
    const BinaryWaveform w = gen_bernoulli(d, 25000.0, rng);
    const Interferogram ig = interferogram(w, lags, 10000);
    double worst = 0.0;
    for (Eigen::Index k = 0; k < lags.size(); ++k) {
      worst = std::max(worst, std::abs(ig.values[k] - interferogram_mean_chip(d, lags[k])));
    }
    s.at_least("constant chip crossings used", static_cast<double>(ig.crossings), 10000.0);
    s.below("constant chip sup error", worst, tol::kBernoulliInterferogramSup);
    s.tangent("constant chip", acf_exact(w, lag_grid(0.0, 2.5, 251)), crossing_rate(w));
  }
  {
    // Five curves from one path, each averaging 256 consecutive crossings.
    const double rate = 1.0;
    const GaussianSpec spec{SpectrumKind::gaussian, rate, 32};
    RandomSource rng = source(o, Stream::gaussian, 200);
    const BinaryWaveform w = gen_hardlimited_gaussian(spec, 2000.0, rng);
    const Eigen::VectorXd glags = lag_grid(-1.99, 1.99, 200);
    const auto t = w.transitions();
    std::size_t first = 0;
    while (first < t.size() && t[first] < 2.0) ++first;
    Eigen::Index inside = 0;
    Eigen::Index total = 0;
    for (int run = 0; run < 5; ++run) {
      if (first + 256 > t.size()) throw InsufficientDataError("path too short for five runs");
      const double start = t[first] - 2.0;
      const double stop = t[first + 255] + 2.0;
      std::vector<double> shifted;
      shifted.reserve(t.size());
      for (double v : t) {
        if (v > start && v < stop) shifted.push_back(v - start);
      }
      const BinaryWaveform piece(w.value_at(start), std::move(shifted), stop - start);
      const Interferogram ig = interferogram(piece, glags, 256);
      for (Eigen::Index k = 0; k < glags.size(); ++k) {
        const double mean = interferogram_mean_gaussian(rate, glags[k]);
        if (std::abs(ig.values[k] - mean) <= ig.ci95[k]) ++inside;
        ++total;
      }
      first += 256;
      // Skip past the lag window so the five curves use disjoint crossings.
      const double resume = t[first - 1] + 4.0;
      while (first < t.size() && t[first] < resume) ++first;
    }
    s.at_least("gaussian five-run band coverage",
               static_cast<double>(inside) / static_cast<double>(total),
               tol::kInterferogramCoverage);
    s.tangent("hard-limited gaussian", acf_exact(w, lag_grid(0.0, 2.0, 201)), crossing_rate(w));
  }
  return s.take();
}

std::vector<CheckResult> suite_psd_limit(const VerifyOptions& o) {
  Suite s("psd-limit");
  for (std::size_t i = 0; i < o.alphas.size(); ++i) {
    const double alpha = o.alphas[i];
    const auto d = ChipDistribution::uniform(1.0, alpha);
    RandomSource rng = source(o, Stream::chip, 300 + i);
    const BinaryWaveform w = gen_bernoulli(d, o.chips, rng);
    const PsdCurve native = psd_estimate(w, Eigen::VectorXd(), PsdOptions{});
    const double limit = 1.0 + alpha * alpha / 3.0;
    s.below("smallest bin vs limit " + alpha_label(alpha),
            std::abs(native.values[1] / limit - 1.0), tol::kPsdLimitRel);
    s.below("unit power " + alpha_label(alpha), std::abs(psd_moment(native, 0) - 1.0),
            tol::kPsdUnitPower);
    s.tangent("uniform chips " + alpha_label(alpha), acf_exact(w, lag_grid(0.0, 2.5, 251)),
              crossing_rate(w));
  }
  {
    const auto d = ChipDistribution::degenerate(1.0);
    RandomSource rng = source(o, Stream::chip, 399);
    const BinaryWaveform w = gen_bernoulli(d, o.chips, rng);
    const PsdCurve psd =
        psd_estimate(w, lag_grid(0.0, 6.0 * std::numbers::pi, 301), PsdOptions{});
    s.below("constant chip psd relative rms",
            relative_rms(psd, [](double om) { return psd_bernoulli(1.0, om); }), tol::kPsdRelRms);
  }
  const Eigen::VectorXd omegas = lag_grid(0.0, 200.0 * std::numbers::pi, 10000);
  for (double alpha : {0.0, 0.25, 0.5, 1.0}) {
    for (ChipKind kind : {ChipKind::uniform, ChipKind::raised_cosine}) {
      if (alpha == 0.0 && kind == ChipKind::raised_cosine) continue;
      const ChipDistribution d(kind, 1.0, alpha);
      double lowest = std::numeric_limits<double>::infinity();
      for (Eigen::Index k = 0; k < omegas.size(); ++k) {
        lowest = std::min(lowest, psd_randomchip(d, omegas[k]));
      }
      s.at_least("analytic psd minimum " + std::string(to_string(d.kind())) + " " +
                     alpha_label(alpha),
                 lowest, tol::kPsdFloor);
    }
  }
  return s.take();
}

std::vector<CheckResult> suite_product(const VerifyOptions& o, bool rate_only) {
  Suite s(rate_only ? "product-rate" : "product");
  const double n1 = 1.0;
  const double n2 = 2.0;
  const double duration = 1e5;
  RandomSource r1 = source(o, Stream::telegraph, 401);
  RandomSource r2 = source(o, Stream::telegraph, 402);
  const BinaryWaveform w1 = gen_telegraph(n1, duration, r1);
  const BinaryWaveform w2 = gen_telegraph(n2, duration, r2);
  const BinaryWaveform z = gen_product(w1, w2);
  s.below("rate additivity |n_z - (n1 + n2)|", std::abs(crossing_rate(z) - (n1 + n2)),
          tol::kProductRateAbs);
  if (rate_only) return s.take();

  s.at_most("demodulation mismatches", gen_product(z, w2) == w1 ? 0.0 : 1.0, 0.0);
  const Eigen::VectorXd lags = lag_grid(0.0, 2.0, 201);
  const AcfCurve a1 = acf_exact(w1, lags);
  const AcfCurve a2 = acf_exact(w2, lags);
  const AcfCurve az = acf_exact(z, lags);
  s.below("acf factorization sup error",
          (az.values - a1.values.cwiseProduct(a2.values)).cwiseAbs().maxCoeff(),
          tol::kProductAcfSup);
  s.tangent("product", az, crossing_rate(z));
  s.tangent("product factor n1", a1, crossing_rate(w1));
  s.tangent("product factor n2", a2, crossing_rate(w2));
  return s.take();
}

std::vector<CheckResult> suite_raised_cosine(const VerifyOptions&) {
  Suite s("raised-cosine");
  const Eigen::VectorXd taus = lag_grid(0.0, 2.5, 1000);
  {
    const auto d = ChipDistribution::raised_cosine(1.0, 1.0);
    double worst = 0.0;
    for (double t : taus) {
      worst = std::max(worst, std::abs(acf_from_cdf(d, t) - acf_raised_cosine_full_spread(1.0, t)));
    }
    s.below("quadrature vs closed form alpha=1", worst, tol::kClosedFormAbs);
  }
  for (double alpha : {0.25, 0.5, 0.75}) {
    for (ChipKind kind : {ChipKind::uniform, ChipKind::raised_cosine}) {
      const ChipDistribution d(kind, 1.0, alpha);
      double worst = 0.0;
      for (double t : taus) {
        worst = std::max(worst, std::abs(acf_from_cdf(d, t) - acf_randomchip(d, t)));
      }
      s.below("quadrature vs closed form " + std::string(to_string(kind)) + " " +
                  alpha_label(alpha),
              worst, tol::kClosedFormAbs);
    }
  }
  {
    const ModelParams upper(1.0, 1.0);
    const Eigen::VectorXd grid = lag_grid(0.0, 2.0, 1000);
    double violation = 0.0;
    for (double t : grid) {
      const double rc = acf_raised_cosine_full_spread(1.0, t);
      violation = std::max(violation, acf_triangle(1.0, t) - rc);
      violation = std::max(violation, rc - acf_model(upper, t));
    }
    s.at_most("ordering triangle <= raised cosine <= model alpha=1", violation, 1e-12);
  }
  return s.take();
}

std::vector<CheckResult> suite_model_conditions(const VerifyOptions&) {
  Suite s("model-conditions");
  const Eigen::VectorXd taus = lag_grid(-3.0, 3.0, 1201);
  for (int i = 0; i <= 10; ++i) {
    const double alpha = 0.1 * i;
    const ModelParams p(1.0, alpha);
    double a = std::abs(acf_model(p, 0.0) - 1.0);
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    for (double t : taus) {
      const double v = acf_model(p, t);
      b = std::max(b, std::abs(v - acf_model(p, -t)));
      c = std::max(c, v * v - 0.5 * (1.0 + acf_model(p, 2.0 * t)));
      if (std::abs(t) > 1.0 + alpha) d = std::max(d, std::abs(v));
    }
    const std::string label = alpha_label(alpha);
    s.at_most("(a) unit value at zero " + label, a, 0.0);
    s.at_most("(b) even symmetry " + label, b, 0.0);
    s.at_most("(c) square bound violation " + label, c, 1e-12);
    s.at_most("(d) zero beyond support " + label, d, 0.0);
  }
  return s.take();
}

std::vector<CheckResult> suite_oracle(const VerifyOptions& o) {
  Suite s("oracle");
  const Eigen::VectorXd lags = lag_grid(0.0, 2.5, 51);
  const double step = 1e-4;
  const ChipDistribution kinds[] = {ChipDistribution::degenerate(1.0),
                                    ChipDistribution::uniform(1.0, 0.5),
                                    ChipDistribution::uniform(1.0, 1.0),
                                    ChipDistribution::raised_cosine(1.0, 1.0)};
  std::uint64_t child = 500;
  for (const auto& d : kinds) {
    double worst = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
      RandomSource rng = source(o, Stream::chip, ++child);
      const BinaryWaveform w = gen_bernoulli(d, 100.0, rng);
      const AcfCurve exact = acf_exact(w, lags);
      const AcfCurve dense = acf_oracle_dense(w, lags, step * d.mean_chip());
      worst = std::max(worst, (exact.values - dense.values).cwiseAbs().maxCoeff());
    }
    s.below("exact vs dense " + std::string(to_string(d.kind())) + " " + alpha_label(d.alpha()),
            worst, tol::kOracleAbs);
  }
  return s.take();
}

std::vector<CheckResult> suite_lfsr(const VerifyOptions& o) {
  Suite s("lfsr");
  for (int m = 2; m <= 16; ++m) {
    const auto cfg = LfsrConfig::with_default_taps(m, 1);
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    const std::uint64_t period = lfsr_period(cfg, full + 1);
    s.at_most("period mismatch m=" + std::to_string(m),
              std::abs(static_cast<double>(period) - static_cast<double>(full)), 0.0);
    std::uint64_t state = cfg.initial_state;
    std::uint64_t ones = 0;
    for (std::uint64_t n = 0; n < full; ++n) {
      const LfsrStep st = lfsr_step(state, cfg);
      ones += static_cast<std::uint64_t>(st.bit);
      state = st.state;
    }
    s.at_most("balance mismatch m=" + std::to_string(m),
              std::abs(static_cast<double>(ones) - static_cast<double>(full / 2 + 1)), 0.0);
  }
  auto serialize = [&] {
    const auto lfsr = LfsrConfig::with_default_taps(12, 0x5a5);
    const auto clk = SpreadClockConfig::uniform_spread(1.0, 0.5, 64, ClockMode::permute_per_cycle,
                                                       o.seed);
    std::ostringstream out;
    write_waveform(out, gen_prbs_waveform(lfsr, clk, 5000.0));
    RandomSource rng = source(o, Stream::chip, 600);
    write_waveform(out, gen_bernoulli(ChipDistribution::uniform(1.0, 0.5), 5000.0, rng));
    return out.str();
  };
  s.at_most("replay byte mismatch", serialize() == serialize() ? 0.0 : 1.0, 0.0);
  return s.take();
}

std::vector<CheckResult> only_tangent(std::vector<CheckResult> all) {
  std::vector<CheckResult> out;
  for (auto& r : all) {
    if (r.tangent) {
      r.suite = "tangent";
      out.push_back(std::move(r));
    }
  }
  return out;
}

void append(std::vector<CheckResult>& to, std::vector<CheckResult> from) {
  for (auto& r : from) to.push_back(std::move(r));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "eq20",          "prbs",          "telegraph",     "arcsine",          "interferogram",
      "psd-limit",     "product",       "product-rate",  "raised-cosine",    "model-conditions",
      "oracle",        "lfsr",          "tangent",       "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& options) {
  for (double a : options.alphas) {
    if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("alpha must be in [0, 1]");
  }
  if (!(options.chips >= 1000.0) || !std::isfinite(options.chips)) {
    throw std::invalid_argument("chips must be at least 1000");
  }
  if (name == "eq20") return suite_eq20(options);
  if (name == "prbs") return suite_prbs(options);
  if (name == "telegraph") return suite_telegraph(options);
  if (name == "arcsine") return suite_arcsine(options);
  if (name == "interferogram") return suite_interferogram(options);
  if (name == "psd-limit") return suite_psd_limit(options);
  if (name == "product") return suite_product(options, false);
  if (name == "product-rate") return suite_product(options, true);
  if (name == "raised-cosine") return suite_raised_cosine(options);
  if (name == "model-conditions") return suite_model_conditions(options);
  if (name == "oracle") return suite_oracle(options);
  if (name == "lfsr") return suite_lfsr(options);
  if (name == "tangent" || name == "all") {
    std::vector<CheckResult> empirical;
    for (const char* n : {"eq20", "prbs", "telegraph", "arcsine", "interferogram", "psd-limit",
                          "product"}) {
      append(empirical, run_suite(n, options));
    }
    if (name == "tangent") return only_tangent(std::move(empirical));
    for (const char* n : {"raised-cosine", "model-conditions", "oracle", "lfsr"}) {
      append(empirical, run_suite(n, options));
    }
    return empirical;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

void print_check(std::ostream& out, const CheckResult& r) {
  out << (r.passed ? "PASS" : "FAIL") << "  " << r.suite << ": " << r.name
      << "  measured=" << std::setprecision(6) << r.measured << " (need " << r.relation << ' '
      << r.tolerance << ")\n";
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace impulsewave
