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


#include <filesystem>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "impulsewave/analysis.hpp"
#include "impulsewave/analytic.hpp"
#include "impulsewave/generators.hpp"
#include "impulsewave/io.hpp"
#include "impulsewave/tolerances.hpp"
#include "internal.hpp"

namespace impulsewave::cli {

namespace {

class FigureWriter {
 public:
  FigureWriter(int figure, const std::string& outdir, std::uint64_t seed)
      : figure_(figure), dir_(outdir), seed_(seed) {
    std::filesystem::create_directories(dir_);
  }

  HeaderComments header(const std::string& curve, const std::string& params) const {
    return {"tool = impulsewave", "command = reproduce-figure", "fig = " + std::to_string(figure_),
            "curve = " + curve, "params = " + params, "seed = " + std::to_string(seed_),
            "tolerance_table = " + std::to_string(tolerances::kToleranceTableVersion)};
  }

  void analytic(const std::string& name, const std::string& params, const char* column,
                const Eigen::VectorXd& grid, const std::function<double(double)>& fn) {
    const Eigen::VectorXd values = grid.unaryExpr(fn);
    write(name, {column, "value"}, {grid, values}, header(name + " closed form", params));
  }

  void acf(const std::string& name, const std::string& params, const AcfCurve& c) {
    write(name, {"lag", "value"}, {c.lags, c.values}, header(name + " empirical", params));
  }

  void interferogram(const std::string& name, const std::string& params, const Interferogram& c) {
    HeaderComments h = header(name + " empirical", params);
    h.push_back("crossings = " + std::to_string(c.crossings));
    write(name, {"lag", "value", "ci95"}, {c.lags, c.values, c.ci95}, h);
  }

  void psd(const std::string& name, const std::string& params, const PsdCurve& c) {
    HeaderComments h = header(name + " empirical", params);
    h.push_back("normalization = " + c.normalization);
    write(name, {"omega", "value"}, {c.omegas, c.values}, h);
  }

  RandomSource rng(std::uint64_t child) const { return RandomSource(seed_, child); }

  std::vector<std::string> written;

 private:
  void write(const std::string& name, const std::vector<std::string>& columns,
             const std::vector<Eigen::VectorXd>& data, const HeaderComments& h) {
    const std::string path =
        (dir_ / ("fig" + std::to_string(figure_) + "_" + name + ".csv")).string();
    write_csv_file(path, columns, data, h);
    written.push_back(path);
  }

  int figure_;
  std::filesystem::path dir_;
  std::uint64_t seed_;
};

std::string alpha_name(double alpha) {
  return "alpha" + detail::format_number(alpha);
}

void figure1(FigureWriter& f) {
  // All four processes share the crossing rate n0 = 1.
  const double n0 = 1.0;
  const double tc = 1.0 / (2.0 * n0);
  const Eigen::VectorXd lags = lag_grid(-2.0, 2.0, 401);
  const double duration = 1e4 / n0;

  f.analytic("a_telegraph", "n0=1", "lag", lags, [&](double t) { return acf_telegraph(n0, t); });
  RandomSource r1 = f.rng(1);
  f.acf("a_telegraph_empirical", "n0=1 duration=1e4", acf_exact(gen_telegraph(n0, duration, r1), lags));

  const SpectrumKind kinds[] = {SpectrumKind::uniform_band, SpectrumKind::gaussian};
  const char* names[] = {"b_uniform_band", "c_gaussian"};
  for (int i = 0; i < 2; ++i) {
    const SpectrumKind kind = kinds[i];
    const std::string params = "n0=1 spectrum=" + std::string(to_string(kind));
    f.analytic(names[i], params, "lag", lags,
               [&](double t) { return acf_hardlimited(kind, n0, t); });
    RandomSource r = f.rng(2 + static_cast<std::uint64_t>(i));
    const BinaryWaveform w = gen_hardlimited_gaussian(GaussianSpec{kind, n0, 32}, duration, r);
    f.acf(std::string(names[i]) + "_empirical", params + " duration=1e4", acf_exact(w, lags));
  }

  f.analytic("d_bernoulli", "tc=0.5", "lag", lags, [&](double t) { return acf_triangle(tc, t); });
  RandomSource r4 = f.rng(4);
  f.acf("d_bernoulli_empirical", "tc=0.5 duration=1e4",
        acf_exact(gen_bernoulli(ChipDistribution::degenerate(tc), duration, r4), lags));
}

void figure2(FigureWriter& f) {
  const double n0 = 1.0;
  const Eigen::VectorXd lags = lag_grid(-2.0, 2.0, 401);
  f.analytic("mean", "n0=1 spectrum=gaussian", "lag", lags,
             [&](double t) { return interferogram_mean_gaussian(n0, t); });
  RandomSource r = f.rng(1);
  const BinaryWaveform w =
      gen_hardlimited_gaussian(GaussianSpec{SpectrumKind::gaussian, n0, 32}, 2000.0 / n0, r);
  // Consecutive blocks of 256 crossings, separated by one lag window.
  double start = 0.0;
  for (int run = 1; run <= 5; ++run) {
    const auto first = w.transitions_up_to(start + 2.0);
    if (first + 256 >= w.transition_count()) {
      throw InsufficientDataError("path too short for five interferograms");
    }
    const double stop = w.transitions()[first + 255] + 2.0;
    const double begin = w.transitions()[first] - 2.0;
    std::vector<double> shifted;
    for (double t : w.transitions()) {
      if (t > begin && t < stop) shifted.push_back(t - begin);
    }
    const BinaryWaveform piece(w.value_at(begin), std::move(shifted), stop - begin);
    f.interferogram("run" + std::to_string(run), "n0=1 spectrum=gaussian n_c=256",
                    interferogram(piece, lags, 256));
    start = stop + 2.0;
  }
}

void figure4(FigureWriter& f) {
  const auto d = ChipDistribution::degenerate(1.0);
  const Eigen::VectorXd lags = lag_grid(-2.0, 2.0, 401);
  f.analytic("a_acf", "tc=1", "lag", lags, [](double t) { return acf_triangle(1.0, t); });
  f.analytic("b_derivative", "tc=1", "lag", lags,
             [&](double t) { return acf_derivative_from_cdf(d, t); });
  const auto spread = ChipDistribution::uniform(1.0, 0.5);
  f.analytic("derivative_uniform_alpha0.5", "tc=1 alpha=0.5", "lag", lags,
             [&](double t) { return acf_derivative_from_cdf(spread, t); });
  RandomSource r = f.rng(1);
  const BinaryWaveform w = gen_bernoulli(d, 25000.0, r);
  f.interferogram("interferogram", "tc=1 n_c=10000",
                  interferogram(w, lag_grid(-2.4875, 2.4875, 200), 10000));
}

const double kAlphas[] = {0.0, 0.25, 0.5, 1.0};

void figure5(FigureWriter& f) {
  const Eigen::VectorXd lags = lag_grid(-2.5, 2.5, 501);
  std::uint64_t child = 0;
  for (double alpha : kAlphas) {
    const ModelParams p(1.0, alpha);
    const std::string params = "tc=1 alpha=" + detail::format_number(alpha);
    f.analytic(alpha_name(alpha), params, "lag", lags, [&](double t) { return acf_model(p, t); });
    RandomSource r = f.rng(++child);
    const BinaryWaveform w = gen_bernoulli(ChipDistribution::uniform(1.0, alpha), 1e5, r);
    f.acf(alpha_name(alpha) + "_empirical", params + " chips=1e5", acf_exact(w, lags));
  }
}

void figure6(FigureWriter& f) {
  const Eigen::VectorXd omegas = lag_grid(0.0, 8.0 * std::numbers::pi, 801);
  std::uint64_t child = 0;
  for (double alpha : kAlphas) {
    const auto d = ChipDistribution::uniform(1.0, alpha);
    const std::string params = "tc=1 alpha=" + detail::format_number(alpha);
    f.analytic(alpha_name(alpha), params, "omega", omegas,
               [&](double w) { return psd_randomchip(d, w); });
    RandomSource r = f.rng(++child);
    const BinaryWaveform w = gen_bernoulli(d, 1e5, r);
    f.psd(alpha_name(alpha) + "_empirical", params + " chips=1e5",
          psd_estimate(w, omegas, PsdOptions{}));
  }
}

void figure7(FigureWriter& f) {
  const Eigen::VectorXd lags = lag_grid(-2.2, 2.2, 441);
  f.analytic("triangle", "tc=1 alpha=0", "lag", lags, [](double t) { return acf_triangle(1.0, t); });
  f.analytic("raised_cosine", "tc=1 alpha=1", "lag", lags,
             [](double t) { return acf_raised_cosine_full_spread(1.0, t); });
  const ModelParams p(1.0, 1.0);
  f.analytic("uniform_alpha1", "tc=1 alpha=1", "lag", lags,
             [&](double t) { return acf_model(p, t); });
}

}  // namespace

std::vector<std::string> reproduce_figure(int figure, const std::string& outdir,
                                          std::uint64_t seed) {
  if (figure == 3 || figure == 8) {
    throw std::invalid_argument("figure " + std::to_string(figure) +
                                " is a block diagram; there is no data to reproduce");
  }
  void (*build)(FigureWriter&) = nullptr;
  switch (figure) {
    case 1: build = figure1; break;
    case 2: build = figure2; break;
    case 4: build = figure4; break;
    case 5: build = figure5; break;
    case 6: build = figure6; break;
    case 7: build = figure7; break;
    default:
      throw std::invalid_argument("unknown figure " + std::to_string(figure) +
                                  "; choose one of 1, 2, 4, 5, 6, 7");
  }
  FigureWriter writer(figure, outdir, seed);
  build(writer);
  return writer.written;
}

}  // namespace impulsewave::cli
