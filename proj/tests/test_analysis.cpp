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
#include <numbers>
#include <stdexcept>
#include <vector>

#include "impulsewave/analysis.hpp"
#include "impulsewave/analytic.hpp"
#include "impulsewave/generators.hpp"

using namespace impulsewave;

namespace {

const BinaryWaveform kSquare(Sign::plus, {1.0}, 2.0);

Eigen::VectorXd one(double v) { return Eigen::VectorXd::Constant(1, v); }

}  // namespace

TEST_CASE("lag grid is evenly spaced and inclusive") {
  const auto g = lag_grid(-1.0, 1.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g[0] == -1.0);
  CHECK(g[2] == doctest::Approx(0.0));
  CHECK(g[4] == 1.0);
  CHECK(lag_grid(0.3, 0.3, 1)[0] == 0.3);
}

TEST_CASE("square wave acf at half a second is one third") {
  // Overlap over [0, 1.5]: +1 on [0, 0.5] and [1, 1.5], -1 on [0.5, 1].
  CHECK(acf_exact(kSquare, one(0.5)).values[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(acf_oracle_dense(kSquare, one(0.5), 1e-4).values[0] - 1.0 / 3.0) < 1e-3);
  CHECK(acf_oracle_dense(kSquare, one(0.0), 1e-4).values[0] == 1.0);
}

TEST_CASE("exact acf is one at lag zero and even in the lag") {
  RandomSource rng(5, Stream::chip);
  const auto w = gen_bernoulli(ChipDistribution::uniform(1.0, 0.7), 500.0, rng);
  CHECK(acf_exact(w, one(0.0)).values[0] == 1.0);
  const Eigen::VectorXd pos = lag_grid(0.05, 3.0, 60);
  const Eigen::VectorXd neg = -pos;
  const auto a = acf_exact(w, pos).values;
  const auto b = acf_exact(w, neg).values;
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(a.cwiseAbs().maxCoeff() <= 1.0);
}

TEST_CASE("cross-correlation is antisymmetric in argument order") {
  RandomSource r1(6, Stream::telegraph);
  RandomSource r2(7, Stream::telegraph);
  const auto a = gen_telegraph(1.0, 300.0, r1);
  const auto b = gen_telegraph(1.0, 300.0, r2);
  const Eigen::VectorXd lags = lag_grid(-2.0, 2.0, 21);
  const auto ab = xcorr_exact(a, b, lags).values;
  const auto ba = xcorr_exact(b, a, -lags).values;
  CHECK((ab - ba).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("exact acf agrees with the dense oracle on short instances") {
  const ChipDistribution kinds[] = {ChipDistribution::degenerate(1.0),
                                    ChipDistribution::uniform(1.0, 0.5),
                                    ChipDistribution::raised_cosine(1.0, 1.0)};
  std::uint64_t child = 0;
  for (const auto& d : kinds) {
    RandomSource rng = RandomSource(8, Stream::chip).substream(++child);
    std::vector<double> bounds = chip_boundaries(d, 150.0, rng);
    REQUIRE(bounds.size() >= 100);
    bounds.resize(100);
    std::vector<Sign> signs(100);
    for (auto& s : signs) s = sign_from_int(rng.coin());
    const auto w = waveform_from_chips(bounds, signs);
    const Eigen::VectorXd lags = lag_grid(0.0, 2.5, 26);
    const auto exact = acf_exact(w, lags).values;
    const auto dense = acf_oracle_dense(w, lags, 1e-4).values;
    CHECK((exact - dense).cwiseAbs().maxCoeff() < 1e-3);
  }
}

TEST_CASE("lags outside the record are rejected") {
  CHECK_THROWS_AS(acf_exact(kSquare, one(2.0)), std::out_of_range);
  CHECK_THROWS_AS(acf_exact(kSquare, one(-2.5)), std::out_of_range);
  CHECK_THROWS_AS(acf_oracle_dense(kSquare, one(2.0), 1e-3), std::out_of_range);
}

TEST_CASE("coarse oracle grid raises a precision warning") {
  const BinaryWaveform w(Sign::plus, {1.0, 1.1}, 3.0);
  Diagnostics diag;
  acf_oracle_dense(w, one(0.5), 0.05, &diag);
  CHECK_FALSE(diag.empty());
  Diagnostics fine;
  acf_oracle_dense(w, one(0.5), 0.001, &fine);
  CHECK(fine.empty());
}

TEST_CASE("crossing rates") {
  const BinaryWaveform square(Sign::plus, {1.0, 2.0, 3.0, 4.0, 5.0, 6.0}, 6.0 + 1e-9);
  CHECK(crossing_rate(square) == doctest::Approx(1.0).epsilon(1e-8));
  RandomSource rt(9, Stream::telegraph);
  CHECK(std::abs(crossing_rate(gen_telegraph(2.0, 1e5, rt)) - 2.0) < 0.02);
  RandomSource rc(9, Stream::chip);
  CHECK(std::abs(crossing_rate(gen_bernoulli(ChipDistribution::degenerate(1.0), 1e5, rc)) - 0.5) <
        0.01);
}

TEST_CASE("cusp slope at the first lag estimates twice the crossing rate") {
  RandomSource rt(10, Stream::telegraph);
  const auto tel = gen_telegraph(1.0, 1e5, rt);
  const double tau1 = 0.01;
  CHECK((1.0 - acf_exact(tel, one(tau1)).values[0]) / tau1 ==
        doctest::Approx(2.0 * crossing_rate(tel)).epsilon(0.1));
  RandomSource rc(10, Stream::chip);
  const auto ber = gen_bernoulli(ChipDistribution::uniform(1.0, 0.5), 1e5, rc);
  CHECK((1.0 - acf_exact(ber, one(tau1)).values[0]) / tau1 ==
        doctest::Approx(2.0 * crossing_rate(ber)).epsilon(0.1));
}

TEST_CASE("psd of a telegraph signal follows the Lorentzian") {
  RandomSource rng(11, Stream::telegraph);
  const auto w = gen_telegraph(1.0, 2e5, rng);
  const Eigen::VectorXd om = lag_grid(0.0, 10.0, 101);
  const auto psd = psd_estimate(w, om, PsdOptions{});
  REQUIRE(psd.values.size() == om.size());
  CHECK_FALSE(psd.normalization.empty());
  double num = 0.0;
  double den = 0.0;
  for (Eigen::Index i = 0; i < om.size(); ++i) {
    const double s = psd_telegraph(1.0, om[i]);
    num += (psd.values[i] - s) * (psd.values[i] - s);
    den += s * s;
    CHECK(psd.values[i] >= -1e-12);
  }
  CHECK(std::sqrt(num / den) < 0.05);
}

TEST_CASE("native psd grid integrates to unit power") {
  RandomSource rng(12, Stream::chip);
  const auto w = gen_bernoulli(ChipDistribution::uniform(1.0, 0.5), 5e4, rng);
  const auto psd = psd_estimate(w, Eigen::VectorXd(), PsdOptions{});
  CHECK(psd.omegas[0] == 0.0);
  CHECK(std::abs(psd_moment(psd, 0) - 1.0) < 0.02);
  CHECK(psd.values.minCoeff() >= -1e-12);
}

TEST_CASE("psd needs four segments and a grid below Nyquist") {
  RandomSource rng(13, Stream::telegraph);
  const auto w = gen_telegraph(1.0, 200.0, rng);
  CHECK_THROWS_AS(psd_estimate(w, one(1.0), PsdOptions{64.0, 0.0}), InsufficientDataError);
  CHECK_THROWS_AS(psd_estimate(w, one(1e4), PsdOptions{16.0, 0.01}), std::out_of_range);
}

TEST_CASE("second spectral moment grows with the sampling rate") {
  RandomSource rng(14, Stream::telegraph);
  const auto w = gen_telegraph(1.0, 2e4, rng);
  double prev = 0.0;
  for (double dt : {1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128}) {
    const auto psd = psd_estimate(w, Eigen::VectorXd(), PsdOptions{16.0, dt});
    const double m2 = psd_moment(psd, 2);
    CAPTURE(dt);
    CHECK(m2 > 1.5 * prev);
    prev = m2;
  }
}

TEST_CASE("interferogram is +1 just after the crossing") {
  const BinaryWaveform w(Sign::plus, {1.0, 2.5, 3.0, 4.5}, 6.0);
  const Eigen::VectorXd lags = lag_grid(-0.2, 0.2, 5);
  const auto ig = interferogram(w, lags, 100);
  CHECK(ig.crossings == 4);
  CHECK(ig.values[2] == 1.0);
  CHECK(ig.values[3] == 1.0);
  CHECK(ig.values[1] == -1.0);
  CHECK(ig.ci95[2] == 0.0);
}

TEST_CASE("interferogram confidence band is the normal approximation") {
  const BinaryWaveform w(Sign::plus, {1.0, 2.5, 3.0, 4.5}, 6.0);
  const auto ig = interferogram(w, one(0.7), 100);
  // Trajectory values: t=1 -> level after is -, w(1.7) = -, product +1;
  // t=2.5 -> +, w(3.2) = -, product -1; t=3 -> -, w(3.7) = -, +1;
  // t=4.5 -> +, w(5.2) = +, +1.
  CHECK(ig.values[0] == doctest::Approx(0.5));
  const double sd = std::sqrt((3 * 0.25 + 2.25) / 3.0);
  CHECK(ig.ci95[0] == doctest::Approx(1.96 * sd / 2.0));
}

TEST_CASE("interferogram skips crossings whose window leaves the record") {
  const BinaryWaveform w(Sign::plus, {0.5, 5.5}, 6.0);
  CHECK_THROWS_AS(interferogram(w, lag_grid(-1.0, 1.0, 3), 10), InsufficientDataError);
  CHECK(interferogram(w, lag_grid(-0.4, 0.4, 3), 10).crossings == 2);
  CHECK(interferogram(w, lag_grid(-0.4, 0.4, 3), 1).crossings == 1);
}

TEST_CASE("interferogram converges to the rate-scaled acf slope") {
  const Eigen::VectorXd lags = lag_grid(-2.0, 2.0, 80);
  SUBCASE("telegraph") {
    RandomSource rng(15, Stream::telegraph);
    const auto w = gen_telegraph(1.0, 2e4, rng);
    const auto ig = interferogram(w, lags, 10000);
    CHECK(ig.crossings == 10000);
    for (Eigen::Index i = 0; i < lags.size(); ++i) {
      CHECK(std::abs(ig.values[i] - interferogram_mean_telegraph(1.0, lags[i])) <=
            3.0 * ig.ci95[i] + 1e-12);
    }
  }
  SUBCASE("uniform chips") {
    const auto d = ChipDistribution::uniform(1.0, 0.5);
    RandomSource rng(16, Stream::chip);
    const auto w = gen_bernoulli(d, 4e4, rng);
    const auto ig = interferogram(w, lags, 10000);
    for (Eigen::Index i = 0; i < lags.size(); ++i) {
      CHECK(std::abs(ig.values[i] - interferogram_mean_chip(d, lags[i])) <=
            3.0 * ig.ci95[i] + 1e-12);
    }
  }
}
