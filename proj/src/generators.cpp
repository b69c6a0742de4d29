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

#include "impulsewave/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <iterator>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/FFT>

#include "impulsewave/errors.hpp"

namespace impulsewave {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

// Relative spectral weights on the circulant frequency grid, normalized to
// unit total power.
std::vector<double> spectral_weights(const GaussianSpec& spec, std::size_t n) {
  const double step = spec.grid_step();
  const double d_omega = 2.0 * std::numbers::pi / (static_cast<double>(n) * step);
  const double sigma = std::numbers::pi * spec.target_rate;
  const double band_edge = uniform_band_edge(spec.target_rate);
  std::vector<double> p(n / 2 + 1);
  double total = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double omega = d_omega * static_cast<double>(k);
    if (spec.spectrum == SpectrumKind::gaussian) {
      p[k] = std::exp(-0.5 * (omega / sigma) * (omega / sigma));
    } else {
      p[k] = omega < band_edge ? 1.0 : 0.0;
    }
    const bool unpaired = (k == 0 || k == n / 2);
    total += unpaired ? p[k] : 2.0 * p[k];
  }
  for (double& v : p) v /= total;
  return p;
}

}  // namespace

void GaussianSpec::validate() const {
  require_positive(target_rate, "target crossing rate");
  if (oversample_factor < 16) {
    throw std::invalid_argument("oversample factor must be at least 16");
  }
}

BinaryWaveform gen_telegraph(double rate, double duration, RandomSource& rng) {
  require_positive(rate, "telegraph crossing rate");
  require_positive(duration, "duration");
  const Sign initial = sign_from_int(rng.coin());
  const double mean_gap = 1.0 / rate;
  std::vector<double> transitions;
  transitions.reserve(static_cast<std::size_t>(rate * duration * 1.05) + 16);
  double t = rng.exponential(mean_gap);
  while (t < duration) {
    // A zero-length gap would repeat a time; it has probability zero but
    // the exponential draw can round to it.
    if (transitions.empty() || t > transitions.back()) transitions.push_back(t);
    t += rng.exponential(mean_gap);
  }
  if (!transitions.empty() && transitions.front() <= 0.0) transitions.erase(transitions.begin());
  return BinaryWaveform(initial, std::move(transitions), duration);
}

Eigen::VectorXd sample_gaussian_path(const GaussianSpec& spec, Eigen::Index n_samples,
                                     RandomSource& rng) {
  spec.validate();
  if (n_samples < 2) throw std::invalid_argument("need at least two path samples");
  // Pad by 16 correlation lengths so the circular wrap stays out of view.
  const auto margin = static_cast<std::size_t>(16 * spec.oversample_factor);
  const std::size_t n = std::bit_ceil(static_cast<std::size_t>(n_samples) + margin);
  const std::vector<double> p = spectral_weights(spec, n);

  const double scale = static_cast<double>(n);
  std::vector<std::complex<double>> spectrum(n);
  spectrum[0] = scale * std::sqrt(p[0]) * rng.normal();
  spectrum[n / 2] = scale * std::sqrt(p[n / 2]) * rng.normal();
  for (std::size_t k = 1; k < n / 2; ++k) {
    const double amp = scale * std::sqrt(0.5 * p[k]);
    const double re = rng.normal();
    const double im = rng.normal();
    spectrum[k] = {amp * re, amp * im};
    spectrum[n - k] = std::conj(spectrum[k]);
  }

  Eigen::FFT<double> fft;
  std::vector<double> path;
  fft.inv(path, spectrum);
  return Eigen::Map<const Eigen::VectorXd>(path.data(), n_samples);
}

BinaryWaveform hard_limit(const Eigen::Ref<const Eigen::VectorXd>& samples, double step,
                          double duration) {
  require_positive(step, "grid step");
  require_positive(duration, "duration");
  if (samples.size() < 2) throw std::invalid_argument("need at least two samples");
  const double tiny = std::numeric_limits<double>::denorm_min();
  auto at = [&](Eigen::Index i) {
    const double v = samples[i];
    return v == 0.0 ? tiny : v;
  };

  std::vector<double> crossings;
  double prev = 0.0;
  for (Eigen::Index i = 0; i + 1 < samples.size(); ++i) {
    const double x0 = at(i);
    const double x1 = at(i + 1);
    if ((x0 > 0.0) == (x1 > 0.0)) continue;
    double t = (static_cast<double>(i) + x0 / (x0 - x1)) * step;
    if (t >= duration) break;
    if (!(t > prev)) t = std::nextafter(prev, duration);
    if (!(t < duration)) break;
    crossings.push_back(t);
    prev = t;
  }
  return BinaryWaveform(at(0) > 0.0 ? Sign::plus : Sign::minus, std::move(crossings), duration);
}

BinaryWaveform gen_hardlimited_gaussian(const GaussianSpec& spec, double duration,
                                        RandomSource& rng) {
  spec.validate();
  require_positive(duration, "duration");
  if (duration < 10.0 / spec.target_rate) {
    throw InsufficientDataError("hard-limited Gaussian needs at least 10 correlation lengths (" +
                                std::to_string(10.0 / spec.target_rate) + " s)");
  }
  const double step = spec.grid_step();
  const auto n_samples = static_cast<Eigen::Index>(std::ceil(duration / step)) + 1;
  const Eigen::VectorXd path = sample_gaussian_path(spec, n_samples, rng);
  return hard_limit(path, step, duration);
}

std::vector<double> chip_boundaries(const ChipDistribution& d, double duration,
                                    RandomSource& rng) {
  require_positive(duration, "duration");
  std::vector<double> bounds;
  bounds.reserve(static_cast<std::size_t>(duration / d.mean_chip() * 1.01) + 16);
  double t = 0.0;
  while (true) {
    const double next = t + d.sample(rng);
    if (next > duration) break;
    if (!(next > t)) continue;
    bounds.push_back(next);
    t = next;
  }
  return bounds;
}

BinaryWaveform waveform_from_chips(std::span<const double> boundaries,
                                   std::span<const Sign> signs) {
  if (boundaries.empty()) throw InsufficientDataError("no complete chip fits in the duration");
  if (boundaries.size() != signs.size()) {
    throw std::invalid_argument("one sign per chip is required");
  }
  std::vector<double> transitions;
  transitions.reserve(boundaries.size() / 2 + 1);
  for (std::size_t j = 1; j < signs.size(); ++j) {
    if (signs[j] != signs[j - 1]) transitions.push_back(boundaries[j - 1]);
  }
  return BinaryWaveform(signs.front(), std::move(transitions), boundaries.back());
}

BinaryWaveform gen_bernoulli(const ChipDistribution& d, double duration, RandomSource& rng) {
  require_positive(duration, "duration");
  std::vector<double> bounds;
  std::vector<Sign> signs;
  const auto expected = static_cast<std::size_t>(duration / d.mean_chip() * 1.01) + 16;
  bounds.reserve(expected);
  signs.reserve(expected);
  double t = 0.0;
  while (true) {
    const double next = t + d.sample(rng);
    if (next > duration) break;
    const Sign s = sign_from_int(rng.coin());
    if (!(next > t)) continue;
    bounds.push_back(next);
    signs.push_back(s);
    t = next;
  }
  return waveform_from_chips(bounds, signs);
}

BinaryWaveform gen_product(const BinaryWaveform& a, const BinaryWaveform& b) {
  if (a.duration() != b.duration()) {
    throw std::invalid_argument("product needs equal durations (" + std::to_string(a.duration()) +
                                " vs " + std::to_string(b.duration()) + ")");
  }
  std::vector<double> transitions;
  transitions.reserve(a.transition_count() + b.transition_count());
  std::set_symmetric_difference(a.transitions().begin(), a.transitions().end(),
                                b.transitions().begin(), b.transitions().end(),
                                std::back_inserter(transitions));
  return BinaryWaveform(a.initial_level() * b.initial_level(), std::move(transitions),
                        a.duration());
}

}  // namespace impulsewave
