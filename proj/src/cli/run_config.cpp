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
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "impulsewave/analytic.hpp"
#include "impulsewave/chip_distribution.hpp"
#include "impulsewave/tolerances.hpp"
#include "internal.hpp"

namespace impulsewave::cli {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

bool needs_chip(const std::string& curve) {
  return curve.rfind("randomchip", 0) == 0 || curve == "interferogram-chip";
}

const std::vector<std::string> kProcesses{"telegraph", "gaussian",     "bernoulli",
                                          "prbs",      "sampled-hold", "product"};

}  // namespace

const std::vector<std::string>& analytic_curve_names() {
  static const std::vector<std::string> names{
      "telegraph-acf",          "telegraph-psd",           "hardlimited-acf",
      "triangle-acf",           "bernoulli-psd",           "model-acf",
      "randomchip-acf",         "randomchip-acf-quadrature", "randomchip-derivative",
      "randomchip-psd",         "interferogram-gaussian",  "interferogram-hardlimited",
      "interferogram-telegraph", "interferogram-chip"};
  return names;
}

bool analytic_curve_is_spectral(const std::string& curve) {
  return curve == "telegraph-psd" || curve == "bernoulli-psd" || curve == "randomchip-psd";
}

void RunConfig::validate() const {
  require(positive(rate), "--n0 must be positive");
  require(positive(t_c), "--tc must be positive");
  require(alpha >= 0.0 && alpha <= 1.0, "--alpha must be in [0, 1]");
  require(oversample >= 16, "--oversample must be at least 16");
  spectrum_kind_from_string(spectrum);
  chip_kind_from_string(chip);

  if (command == "generate") {
    require(seed.has_value(), "generate needs an explicit --seed");
    require(std::find(kProcesses.begin(), kProcesses.end(), process) != kProcesses.end(),
            "unknown --process '" + process + "'");
    if (process == "product") {
      require(inputs.size() == 2, "--process product needs exactly two --input files");
    } else if (process == "prbs") {
      require(chips > 0 || positive(duration), "prbs needs --chips or a positive --duration");
      prbs.lfsr.validate();
      prbs.clock().validate();
    } else {
      require(positive(duration), "--duration must be positive");
      if (process == "sampled-hold") prbs.clock().validate();
    }
  } else if (command == "acf" || command == "interferogram") {
    require(inputs.size() == 1, command + " needs one --input waveform file");
    require(lag_count >= 1, "--lag-count must be at least 1");
    require(std::isfinite(lag_min) && std::isfinite(lag_max) && lag_min <= lag_max,
            "lag range must be finite with --lag-min <= --lag-max");
    require(oracle_step >= 0.0, "--oracle-step must not be negative");
    require(max_crossings >= 1, "--max-crossings must be positive");
  } else if (command == "psd") {
    require(inputs.size() == 1, "psd needs one --input waveform file");
    require(positive(segment_length), "--segment must be positive");
    require(sample_step >= 0.0, "--sample-step must not be negative");
    require(omega_count >= 0, "--omega-count must not be negative");
    require(positive(omega_max), "--omega-max must be positive");
  } else if (command == "analytic") {
    require(std::find(analytic_curve_names().begin(), analytic_curve_names().end(), curve) !=
                analytic_curve_names().end(),
            "unknown --curve '" + curve + "'");
    require(positive(tolerance), "--tolerance must be positive");
    if (compare.empty()) {
      if (analytic_curve_is_spectral(curve)) {
        require(omega_count >= 2 && positive(omega_max), "spectral curves need an omega grid");
      } else {
        require(lag_count >= 1 && lag_min <= lag_max, "bad lag grid");
      }
    }
  } else if (command == "reproduce-figure") {
    require(figure != 0, "reproduce-figure needs --fig");
  } else if (command == "verify") {
    const auto& names = suite_names();
    require(std::find(names.begin(), names.end(), suite) != names.end(),
            "unknown suite '" + suite + "'");
  } else {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
}

std::vector<std::string> RunConfig::header_lines() const {
  std::vector<std::string> h;
  auto add = [&h](const std::string& key, const std::string& value) {
    h.push_back(key + " = " + value);
  };
  auto num = [](double v) { return detail::format_number(v); };
  add("tool", "impulsewave");
  add("command", command);
  if (command == "generate") {
    add("process", process);
    add("seed", std::to_string(*seed));
    if (process == "telegraph" || process == "gaussian" || process == "sampled-hold") {
      add("n0", num(rate));
    }
    if (process == "gaussian") {
      add("spectrum", spectrum);
      add("oversample", std::to_string(oversample));
    }
    if (process == "bernoulli") {
      add("chip", chip);
      add("tc", num(t_c));
      add("alpha", num(alpha));
    }
    if (process == "prbs" || process == "sampled-hold") {
      for (const auto& line : prbs.to_lines()) h.push_back(line);
    }
    if (process == "prbs" && chips > 0) add("chips", std::to_string(chips));
    if (process != "product" && duration > 0.0) add("duration", num(duration));
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) add("input", inputs[i]);
  if (command == "acf" || command == "interferogram" ||
      (command == "analytic" && !analytic_curve_is_spectral(curve) && compare.empty())) {
    add("lag_min", num(lag_min));
    add("lag_max", num(lag_max));
    add("lag_count", std::to_string(lag_count));
  }
  if (command == "acf" && oracle_step > 0.0) add("oracle_step", num(oracle_step));
  if (command == "interferogram") add("max_crossings", std::to_string(max_crossings));
  if (command == "psd" || (command == "analytic" && analytic_curve_is_spectral(curve) &&
                           compare.empty())) {
    add("omega_max", num(omega_max));
    add("omega_count", std::to_string(omega_count));
  }
  if (command == "psd") {
    add("segment", num(segment_length));
    add("sample_step", num(sample_step));
  }
  if (command == "analytic") {
    add("curve", curve);
    add("n0", num(rate));
    add("spectrum", spectrum);
    add("chip", chip);
    add("tc", num(t_c));
    add("alpha", num(alpha));
    if (!compare.empty()) add("compare", compare);
  }
  if (command == "verify" || command == "reproduce-figure") {
    add("tolerance_table", std::to_string(tolerances::kToleranceTableVersion));
  }
  return h;
}

namespace detail {

std::string format_number(double v) {
  std::ostringstream s;
  s << std::setprecision(15) << v;
  return s.str();
}

std::function<double(double)> analytic_curve(const RunConfig& cfg) {
  const std::string& c = cfg.curve;
  const double n0 = cfg.rate;
  const double tc = cfg.t_c;
  const SpectrumKind kind = spectrum_kind_from_string(cfg.spectrum);
  if (c == "telegraph-acf") return [n0](double t) { return acf_telegraph(n0, t); };
  if (c == "telegraph-psd") return [n0](double w) { return psd_telegraph(n0, w); };
  if (c == "hardlimited-acf") return [=](double t) { return acf_hardlimited(kind, n0, t); };
  if (c == "triangle-acf") return [tc](double t) { return acf_triangle(tc, t); };
  if (c == "bernoulli-psd") return [tc](double w) { return psd_bernoulli(tc, w); };
  if (c == "model-acf") {
    const ModelParams p(tc, cfg.alpha);
    return [p](double t) { return acf_model(p, t); };
  }
  if (c == "interferogram-gaussian") {
    return [n0](double t) { return interferogram_mean_gaussian(n0, t); };
  }
  if (c == "interferogram-hardlimited") {
    return [=](double t) { return interferogram_mean_hardlimited(kind, n0, t); };
  }
  if (c == "interferogram-telegraph") {
    return [n0](double t) { return interferogram_mean_telegraph(n0, t); };
  }
  if (needs_chip(c)) {
    const ChipDistribution d(chip_kind_from_string(cfg.chip), tc, cfg.alpha);
    if (c == "randomchip-acf") return [d](double t) { return acf_randomchip(d, t); };
    if (c == "randomchip-acf-quadrature") return [d](double t) { return acf_from_cdf(d, t); };
    if (c == "randomchip-derivative") {
      return [d](double t) { return acf_derivative_from_cdf(d, t); };
    }
    if (c == "randomchip-psd") return [d](double w) { return psd_randomchip(d, w); };
    if (c == "interferogram-chip") return [d](double t) { return interferogram_mean_chip(d, t); };
  }
  throw std::invalid_argument("unknown --curve '" + c + "'");
}

}  // namespace detail

}  // namespace impulsewave::cli
