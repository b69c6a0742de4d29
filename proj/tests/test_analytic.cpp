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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "impulsewave/analysis.hpp"
#include "impulsewave/analytic.hpp"

using namespace impulsewave;

namespace {

constexpr double kPi = std::numbers::pi;

// Richardson-extrapolated one-sided slope (1 - R(h)) / h at the origin.
double origin_slope(const std::function<double(double)>& r, double h = 1e-3) {
  const double d1 = (1.0 - r(h)) / h;
  const double d2 = (1.0 - r(h / 2)) / (h / 2);
  return 2.0 * d2 - d1;
}

struct NamedAcf {
  const char* name;
  std::function<double(double)> acf;
  double rate;
};

std::vector<NamedAcf> analytic_acfs() {
  const auto u = ChipDistribution::uniform(1.0, 0.5);
  const auto rc = ChipDistribution::raised_cosine(2.0, 1.0);
  return {
      {"telegraph", [](double t) { return acf_telegraph(1.5, t); }, 1.5},
      {"gaussian", [](double t) { return acf_hardlimited(SpectrumKind::gaussian, 1.0, t); }, 1.0},
      {"band", [](double t) { return acf_hardlimited(SpectrumKind::uniform_band, 2.0, t); }, 2.0},
      {"triangle", [](double t) { return acf_triangle(1.0, t); }, 0.5},
      {"model", [](double t) { return acf_model(ModelParams(1.0, 0.7), t); }, 0.5},
      {"uniform", [u](double t) { return acf_randomchip(u, t); }, crossing_rate_chip(u)},
      {"raised-cosine", [rc](double t) { return acf_randomchip(rc, t); }, crossing_rate_chip(rc)},
  };
}

}  // namespace

TEST_CASE("telegraph closed forms") {
  CHECK(acf_telegraph(1.0, 0.0) == 1.0);
  CHECK(acf_telegraph(1.0, 0.5) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(acf_telegraph(1.0, -0.5) == acf_telegraph(1.0, 0.5));
  CHECK(acf_telegraph(1.0, 1e3) < 1e-300);
  CHECK(psd_telegraph(1.0, 0.0) == 1.0);
  CHECK(psd_telegraph(1.0, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(psd_telegraph(1.0, 1e8) < 1e-15);
}

TEST_CASE("arcsine law") {
  CHECK(acf_arcsine(1.0) == 1.0);
  CHECK(acf_arcsine(0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(acf_arcsine(0.0) == 0.0);
  CHECK(acf_arcsine(-0.5) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(acf_arcsine(1.0 + 1e-9), std::domain_error);
  CHECK(rx_gaussian(1.0, 0.0) == 1.0);
  CHECK(rx_gaussian(1.0, 1.0) == doctest::Approx(std::exp(-kPi * kPi / 2.0)).epsilon(1e-15));
  CHECK(uniform_band_edge(1.0) == doctest::Approx(std::sqrt(3.0) * kPi).epsilon(1e-15));
  CHECK(rx_uniform_band(1.0, 0.0) == 1.0);
  CHECK(acf_hardlimited(SpectrumKind::gaussian, 1.0, 0.0) == 1.0);
  // The band-limited input's acf goes negative past its first zero.
  CHECK(acf_hardlimited(SpectrumKind::uniform_band, 1.0, 1.0 / std::sqrt(3.0) + 0.2) < 0.0);
}

TEST_CASE("triangle and constant-chip spectrum") {
  CHECK(acf_triangle(1.0, 0.0) == 1.0);
  CHECK(acf_triangle(1.0, 0.5) == 0.5);
  CHECK(acf_triangle(1.0, -0.5) == 0.5);
  CHECK(acf_triangle(1.0, 2.0) == 0.0);
  CHECK(psd_bernoulli(1.0, 0.0) == 1.0);
  CHECK(psd_bernoulli(3.0, 1e-9) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(std::abs(psd_bernoulli(1.0, 2.0 * kPi)) < 1e-15);
  CHECK(psd_bernoulli(1.0, -1.3) == psd_bernoulli(1.0, 1.3));
}

TEST_CASE("model function branches") {
  CHECK(acf_model(ModelParams(1.0, 1.0), 1.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(acf_model(ModelParams(2.0, 1.0), 2.0) == doctest::Approx(0.25).epsilon(1e-15));
  for (double t = 0.0; t <= 3.0; t += 0.01) {
    CHECK(acf_model(ModelParams(1.0, 0.0), t) == doctest::Approx(acf_triangle(1.0, t)));
  }
  for (double alpha : {0.1, 0.5, 1.0}) {
    const ModelParams p(1.0, alpha);
    const double edge = 1.0 + alpha;
    CHECK(acf_model(p, edge) == 0.0);
    CHECK(std::abs(acf_model(p, edge - 1e-6)) < 1e-11);
    CHECK(acf_model(p, edge + 0.1) == 0.0);
    // Value and slope continuity where the parabola meets the line.
    const double knee = 1.0 - alpha;
    CHECK(acf_model(p, knee - 1e-9) == doctest::Approx(acf_model(p, knee + 1e-9)).epsilon(1e-8));
    const double h = 1e-6;
    CHECK((acf_model(p, knee + h) - acf_model(p, knee)) / h == doctest::Approx(-1.0).epsilon(1e-5));
  }
  CHECK_THROWS_AS(ModelParams(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(1.0, 1.2), std::invalid_argument);
}

TEST_CASE("model function is a realizable correlation") {
  for (int a = 0; a <= 10; ++a) {
    const ModelParams p(1.0, a / 10.0);
    CHECK(acf_model(p, 0.0) == 1.0);
    for (int i = 0; i <= 1000; ++i) {
      const double t = 2.5 * i / 1000.0;
      const double v = acf_model(p, t);
      CHECK(v == acf_model(p, -t));
      CHECK(v * v <= 0.5 * (1.0 + acf_model(p, 2.0 * t)) + 1e-15);
      if (t > 1.0 + p.alpha()) CHECK(v == 0.0);
    }
  }
}

TEST_CASE("acf from the chip cdf matches the closed forms") {
  for (double alpha : {0.1, 0.5, 1.0}) {
    const auto d = ChipDistribution::uniform(1.0, alpha);
    const ModelParams p(1.0, alpha);
    for (int i = 0; i <= 250; ++i) {
      const double t = 2.5 * i / 250.0;
      CHECK(std::abs(acf_from_cdf(d, t) - acf_model(p, t)) < 1e-9);
      CHECK(std::abs(acf_randomchip(d, t) - acf_model(p, t)) < 1e-12);
    }
  }
  const auto deg = ChipDistribution::degenerate(1.0);
  const auto rc = ChipDistribution::raised_cosine(1.0, 1.0);
  for (int i = 0; i <= 250; ++i) {
    const double t = 2.5 * i / 250.0;
    CHECK(std::abs(acf_from_cdf(deg, t) - acf_triangle(1.0, t)) < 1e-9);
    CHECK(std::abs(acf_from_cdf(rc, t) - acf_raised_cosine_full_spread(1.0, t)) < 1e-9);
    CHECK(std::abs(acf_randomchip(rc, t) - acf_raised_cosine_full_spread(1.0, t)) < 1e-9);
  }
}

TEST_CASE("raised-cosine full-spread closed form by hand") {
  // 1 - 1/2 + 1/16 - sin^2(pi/4)/pi^2 at tau = 1/2.
  CHECK(acf_raised_cosine_full_spread(1.0, 0.5) ==
        doctest::Approx(0.5625 - 0.5 / (kPi * kPi)).epsilon(1e-14));
  CHECK(std::abs(acf_raised_cosine_full_spread(1.0, 2.0)) < 1e-15);
}

TEST_CASE("triangle <= raised cosine <= model at full spread") {
  const auto rc = ChipDistribution::raised_cosine(1.0, 1.0);
  const ModelParams p(1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double t = 2.0 * i / 999.0;
    const double mid = acf_randomchip(rc, t);
    CHECK(acf_triangle(1.0, t) <= mid + 1e-12);
    CHECK(mid <= acf_model(p, t) + 1e-12);
  }
}

TEST_CASE("acf derivative from the cdf") {
  const auto u = ChipDistribution::uniform(1.0, 1.0);
  CHECK(acf_derivative_from_cdf(u, 1e-12) == doctest::Approx(-1.0));
  CHECK(acf_derivative_from_cdf(u, -1e-12) == doctest::Approx(1.0));
  CHECK(acf_derivative_from_cdf(u, 0.0) == 0.0);
  CHECK(acf_derivative_from_cdf(u, 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(acf_derivative_from_cdf(u, 2.5) == 0.0);
  CHECK(acf_derivative_from_cdf(ChipDistribution::uniform(2.0, 0.5), 1e-9) ==
        doctest::Approx(-0.5));
  // Central differences of the acf.
  const auto rc = ChipDistribution::raised_cosine(1.0, 0.6);
  for (double t : {0.2, 0.5, 0.9, 1.3}) {
    const double h = 1e-5;
    const double fd = (acf_randomchip(rc, t + h) - acf_randomchip(rc, t - h)) / (2 * h);
    CHECK(acf_derivative_from_cdf(rc, t) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("random-chip spectrum limits and sign") {
  for (double alpha : {0.25, 0.5, 1.0}) {
    const auto d = ChipDistribution::uniform(1.0, alpha);
    CHECK(psd_randomchip(d, 0.0) == doctest::Approx(1.0 + alpha * alpha / 3.0).epsilon(1e-14));
    CHECK(psd_randomchip(d, 1e-6) == doctest::Approx(1.0 + alpha * alpha / 3.0).epsilon(1e-9));
  }
  const auto tiny = ChipDistribution::uniform(1.0, 1e-5);
  for (int i = 0; i <= 200; ++i) {
    const double om = 0.05 * i;
    CHECK(std::abs(psd_randomchip(tiny, om) - psd_bernoulli(1.0, om)) < 1e-8);
  }
  const ChipDistribution kinds[] = {ChipDistribution::degenerate(1.0),
                                    ChipDistribution::uniform(1.0, 0.3),
                                    ChipDistribution::uniform(1.0, 1.0),
                                    ChipDistribution::raised_cosine(1.0, 0.5),
                                    ChipDistribution::raised_cosine(1.0, 1.0)};
  for (const auto& d : kinds) {
    for (int i = 0; i < 10000; ++i) CHECK(psd_randomchip(d, 0.02 * kPi * i) >= -1e-12);
  }
}

TEST_CASE("spectrum integrates back to unit power") {
  const auto d = ChipDistribution::uniform(1.0, 0.5);
  // Trapezoid over [0, 4000]; the tail beyond decays like 2 / omega^2.
  const double top = 4000.0;
  const int n = 400000;
  const double h = top / n;
  double s = 0.5 * (psd_randomchip(d, 0.0) + psd_randomchip(d, top));
  for (int i = 1; i < n; ++i) s += psd_randomchip(d, i * h);
  const double power = 2.0 * s * h / (2.0 * kPi) + 2.0 / (kPi * top);
  CHECK(power == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("every analytic acf stays above its tangent at the origin") {
  for (const auto& c : analytic_acfs()) {
    CAPTURE(c.name);
    for (int i = 0; i <= 1000; ++i) {
      const double t = 3.0 * i / 1000.0;
      CHECK(c.acf(t) >= 1.0 - 2.0 * c.rate * t - 1e-12);
    }
  }
}

TEST_CASE("origin slope equals twice the crossing rate") {
  for (const auto& c : analytic_acfs()) {
    CAPTURE(c.name);
    CHECK(origin_slope(c.acf) == doctest::Approx(2.0 * c.rate).epsilon(1e-6));
  }
}

TEST_CASE("product acf slope adds the rates") {
  const double n1 = 1.0;
  const double tc = 1.0;
  const auto prod = [&](double t) { return acf_telegraph(n1, t) * acf_triangle(tc, t); };
  CHECK(origin_slope(prod) == doctest::Approx(2.0 * (n1 + 1.0 / (2.0 * tc))).epsilon(1e-6));
}

TEST_CASE("chip crossing rate is half the chip rate") {
  CHECK(crossing_rate_chip(ChipDistribution::degenerate(1.0)) == 0.5);
  CHECK(crossing_rate_chip(ChipDistribution::uniform(2.0, 0.7)) == 0.25);
}

TEST_CASE("interferogram means") {
  CHECK(std::abs(interferogram_mean_gaussian(1.0, 1e-6)) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(interferogram_mean_gaussian(1.0, 0.0) == 1.0);
  CHECK(interferogram_mean_gaussian(1.0, -0.3) == -interferogram_mean_gaussian(1.0, 0.3));
  CHECK(interferogram_mean_telegraph(1.0, 0.5) == doctest::Approx(std::exp(-1.0)));
  CHECK(interferogram_mean_telegraph(1.0, -0.5) == doctest::Approx(-std::exp(-1.0)));

  // Finite-difference oracle: -R'(tau) / (2 n0).
  const auto fd = [](const std::function<double(double)>& r, double rate, double t) {
    const double h = 1e-5;
    return -(r(t + h) - r(t - h)) / (2.0 * h) / (2.0 * rate);
  };
  const auto gauss = [](double t) { return acf_hardlimited(SpectrumKind::gaussian, 1.0, t); };
  CHECK(interferogram_mean_gaussian(1.0, 1.0) == doctest::Approx(fd(gauss, 1.0, 1.0)).epsilon(1e-6));
  const auto band = [](double t) { return acf_hardlimited(SpectrumKind::uniform_band, 1.0, t); };
  for (double t : {0.1, 0.4, 0.8}) {
    CHECK(interferogram_mean_gaussian(1.0, t) == doctest::Approx(fd(gauss, 1.0, t)).epsilon(1e-6));
    CHECK(interferogram_mean_hardlimited(SpectrumKind::uniform_band, 1.0, t) ==
          doctest::Approx(fd(band, 1.0, t)).epsilon(1e-6));
  }
  const auto d = ChipDistribution::uniform(1.0, 0.5);
  for (double t : {0.3, 0.9, 1.2}) {
    CHECK(interferogram_mean_chip(d, t) ==
          doctest::Approx(fd([&](double x) { return acf_randomchip(d, x); }, 0.5, t)).epsilon(1e-6));
  }
  CHECK(interferogram_mean_chip(ChipDistribution::degenerate(1.0), 0.5) == 1.0);
  CHECK(interferogram_mean_chip(ChipDistribution::degenerate(1.0), 1.5) == 0.0);
}

TEST_CASE("evaluate_on applies a curve elementwise") {
  Eigen::ArrayXd g(3);
  g << 0.0, 0.5, 2.0;
  const auto v = evaluate_on(g, [](double t) { return acf_triangle(1.0, t); });
  CHECK(v[0] == 1.0);
  CHECK(v[1] == 0.5);
  CHECK(v[2] == 0.0);
}

TEST_CASE("spectrum kind names round trip") {
  for (auto k : {SpectrumKind::gaussian, SpectrumKind::uniform_band}) {
    CHECK(spectrum_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(spectrum_kind_from_string("pink"), std::invalid_argument);
}
