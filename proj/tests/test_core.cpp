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

#include <algorithm>
#include <functional>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "impulsewave/chip_distribution.hpp"
#include "impulsewave/random.hpp"
#include "impulsewave/waveform.hpp"

using namespace impulsewave;

namespace {

// Independent cdf reference: composite Simpson integration of the density.
double simpson_cdf(const ChipDistribution& d, double tau) {
  const double lo = d.min_chip();
  const double hi = std::min(tau, d.max_chip());
  if (hi <= lo) return 0.0;
  const int n = 2000;
  const double h = (hi - lo) / n;
  double s = d.pdf(lo) + d.pdf(hi);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * d.pdf(lo + i * h);
  return s * h / 3.0;
}

double ks_statistic(std::vector<double> draws, const std::function<double(double)>& cdf) {
  std::sort(draws.begin(), draws.end());
  const double n = static_cast<double>(draws.size());
  double d = 0.0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const double f = cdf(draws[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return d;
}

}  // namespace

TEST_CASE("waveform value follows the parity of passed transitions") {
  const BinaryWaveform w(Sign::plus, {1.0}, 2.0);
  CHECK(w.value_at(0.5) == Sign::plus);
  CHECK(w.value_at(1.5) == Sign::minus);
  CHECK(waveform_value_at(w, 0.0) == Sign::plus);
  CHECK(w.value_at(2.0) == Sign::minus);

  const BinaryWaveform v(Sign::minus, {0.5, 1.0, 1.5}, 3.0);
  CHECK(v.value_at(2.0) == Sign::plus);
}

TEST_CASE("value exactly at a transition is the level after it") {
  const BinaryWaveform w(Sign::plus, {1.0, 2.0}, 3.0);
  CHECK(w.value_at(1.0) == Sign::minus);
  CHECK(w.value_at(2.0) == Sign::plus);
}

TEST_CASE("waveform rejects invalid construction and ranges") {
  CHECK_THROWS_AS(BinaryWaveform(Sign::plus, {1.0, 1.0}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWaveform(Sign::plus, {2.0, 1.0}, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWaveform(Sign::plus, {0.0}, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWaveform(Sign::plus, {3.0}, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWaveform(Sign::plus, {}, 0.0), std::invalid_argument);
  const BinaryWaveform w(Sign::plus, {1.0}, 2.0);
  CHECK_THROWS_AS(w.value_at(-0.1), std::out_of_range);
  CHECK_THROWS_AS(w.value_at(2.1), std::out_of_range);
}

TEST_CASE("truncation keeps the earlier transitions") {
  const BinaryWaveform w(Sign::minus, {1.0, 2.0, 3.0}, 4.0);
  const BinaryWaveform t = w.truncated(2.5);
  CHECK(t.duration() == 2.5);
  CHECK(t.transition_count() == 2);
  CHECK(t.value_at(2.4) == Sign::minus);
}

TEST_CASE("random source is reproducible per seed and stream") {
  RandomSource a(42, Stream::chip);
  RandomSource b(42, Stream::chip);
  RandomSource c(42, Stream::clock);
  RandomSource d(43, Stream::chip);
  int same_c = 0;
  int same_d = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    same_c += x == c.next_u64();
    same_d += x == d.next_u64();
  }
  CHECK(same_c == 0);
  CHECK(same_d == 0);
  CHECK(a.substream(5).next_u64() == b.substream(5).next_u64());
}

TEST_CASE("distinct streams are uncorrelated") {
  RandomSource a(7, Stream::data);
  RandomSource b(7, Stream::chip);
  const int n = 200000;
  double sab = 0.0;
  for (int i = 0; i < n; ++i) sab += (a.uniform() - 0.5) * (b.uniform() - 0.5);
  // Var of each centred uniform is 1/12; the correlation estimate has sd 1/sqrt(n).
  CHECK(std::abs(sab / n * 12.0) < 5.0 / std::sqrt(n));
}

TEST_CASE("chip distribution validation") {
  CHECK_THROWS_AS(ChipDistribution::uniform(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ChipDistribution::uniform(1.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(ChipDistribution::uniform(1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(ChipDistribution(ChipKind::degenerate, 1.0, 0.3), std::invalid_argument);
  CHECK(ChipDistribution::uniform(1.0, 0.0).kind() == ChipKind::degenerate);
  CHECK(chip_kind_from_string("raised-cosine") == ChipKind::raised_cosine);
}

TEST_CASE("degenerate chips are exactly t_c") {
  const auto d = ChipDistribution::degenerate(1.0);
  RandomSource rng(1, Stream::chip);
  for (int i = 0; i < 1000; ++i) CHECK(sample_chip(d, rng) == 1.0);
  CHECK(chip_cdf(d, 0.999999) == 0.0);
  CHECK(chip_cdf(d, 1.0) == 1.0);
  CHECK(chip_cdf(d, 5.0) == 1.0);
}

TEST_CASE("uniform chips stay in support and average to t_c") {
  const auto d = ChipDistribution::uniform(1.0, 0.5);
  RandomSource rng(2, Stream::chip);
  const int n = 1000000;
  double sum = 0.0;
  double lo = 10.0;
  double hi = -10.0;
  for (int i = 0; i < n; ++i) {
    const double c = sample_chip(d, rng);
    sum += c;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  CHECK(lo >= 0.5);
  CHECK(hi <= 1.5);
  CHECK(std::abs(sum / n - 1.0) < 0.001);
}

TEST_CASE("uniform cdf matches the linear ramp") {
  const auto d = ChipDistribution::uniform(1.0, 0.5);
  CHECK(chip_cdf(d, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(chip_cdf(d, 0.75) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(chip_cdf(d, 0.4) == 0.0);
  CHECK(chip_cdf(d, 1.5 + 1e-12) == 1.0);
}

TEST_CASE("every kind: cdf is 1 above support and symmetric about t_c") {
  const ChipDistribution kinds[] = {ChipDistribution::uniform(1.0, 0.5),
                                    ChipDistribution::uniform(2.0, 1.0),
                                    ChipDistribution::raised_cosine(1.0, 1.0),
                                    ChipDistribution::raised_cosine(3.0, 0.3)};
  for (const auto& d : kinds) {
    CHECK(chip_cdf(d, d.max_chip() + 1e-9) == 1.0);
    CHECK(chip_cdf(d, d.min_chip() - 1e-9) == 0.0);
    double prev = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double x = d.half_width() * i / 200.0;
      CHECK(chip_cdf(d, d.mean_chip() + x) + chip_cdf(d, d.mean_chip() - x) ==
            doctest::Approx(1.0).epsilon(1e-12));
      const double f = chip_cdf(d, d.min_chip() + 2.0 * x);
      CHECK(f >= prev);
      prev = f;
    }
  }
  CHECK(chip_cdf(ChipDistribution::raised_cosine(1.0, 1.0), 1.0) ==
        doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("raised-cosine cdf agrees with integrating its density") {
  const auto d = ChipDistribution::raised_cosine(1.0, 0.7);
  for (int i = 0; i <= 50; ++i) {
    const double tau = 0.3 + 1.4 * i / 50.0;
    CHECK(chip_cdf(d, tau) == doctest::Approx(simpson_cdf(d, tau)).epsilon(1e-10));
  }
}

TEST_CASE("raised-cosine sampler: Kolmogorov distance to the density integral") {
  const auto d = ChipDistribution::raised_cosine(1.0, 1.0);
  // Tabulate the Simpson oracle once on a fine grid and interpolate.
  const int cells = 4000;
  std::vector<double> table(cells + 1);
  for (int i = 0; i <= cells; ++i) table[i] = simpson_cdf(d, 2.0 * i / cells);
  const auto oracle = [&](double t) {
    const double x = std::clamp(t / 2.0 * cells, 0.0, static_cast<double>(cells));
    const int i = std::min(static_cast<int>(x), cells - 1);
    return table[i] + (x - i) * (table[i + 1] - table[i]);
  };
  RandomSource rng(3, Stream::chip);
  std::vector<double> draws(1000000);
  for (auto& x : draws) {
    x = sample_chip(d, rng);
    REQUIRE(x >= 0.0);
    REQUIRE(x <= 2.0);
  }
  CHECK(ks_statistic(draws, oracle) < 0.005);
}

TEST_CASE("samplers pass a one-sample KS test at the 1% level") {
  // Critical value 1.628 / sqrt(n) for n = 1e5.
  const double critical = 1.628 / std::sqrt(1e5);
  const ChipDistribution kinds[] = {ChipDistribution::uniform(1.0, 0.25),
                                    ChipDistribution::uniform(1.0, 1.0),
                                    ChipDistribution::raised_cosine(2.0, 0.5)};
  std::uint64_t child = 0;
  for (const auto& d : kinds) {
    RandomSource rng = RandomSource(11, Stream::chip).substream(++child);
    std::vector<double> draws(100000);
    for (auto& x : draws) x = sample_chip(d, rng);
    CHECK(ks_statistic(draws, [&](double t) { return chip_cdf(d, t); }) < critical);
  }
}

TEST_CASE("characteristic function and variance of the shipped kinds") {
  const auto u = ChipDistribution::uniform(1.0, 0.5);
  CHECK(u.characteristic(0.0) == 1.0);
  CHECK(u.characteristic(2.0) == doctest::Approx(std::sin(1.0) / 1.0).epsilon(1e-14));
  CHECK(u.variance() == doctest::Approx(0.25 / 3.0).epsilon(1e-14));
  const auto rc = ChipDistribution::raised_cosine(1.0, 1.0);
  // Var of the raised cosine on [-a, a] is a^2 (1/3 - 2/pi^2).
  CHECK(rc.variance() ==
        doctest::Approx(1.0 / 3.0 - 2.0 / (std::numbers::pi * std::numbers::pi)).epsilon(1e-13));
  for (double om : {1e-9, 1e-4, 0.3, 3.0, 40.0}) {
    CHECK(std::abs(rc.characteristic(om)) <= 1.0);
    CHECK(rc.characteristic_defect(om) >= 0.0);
  }
  CHECK(u.characteristic_defect(0.0) == doctest::Approx(u.variance() / 2.0).epsilon(1e-14));
}
