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

#pragma once

#include <vector>

#include <Eigen/Core>

#include "impulsewave/analytic.hpp"
#include "impulsewave/chip_distribution.hpp"
#include "impulsewave/random.hpp"
#include "impulsewave/waveform.hpp"

namespace impulsewave {

/// Gaussian input to the hard limiter.
struct GaussianSpec {
  SpectrumKind spectrum = SpectrumKind::gaussian;
  /// Target zero-crossing rate n0 (crossings per second).
  double target_rate = 1.0;
  /// Fine-grid samples per 1/n0; at least 16.
  int oversample_factor = 32;

  /// Throws std::invalid_argument when out of range.
  void validate() const;
  double grid_step() const { return 1.0 / (oversample_factor * target_rate); }
};

/// Random telegraph signal: exponential gaps with mean 1/n0, so the mean
/// crossing rate is n0 and R(tau) = exp(-2 n0 |tau|). The initial level is
/// equiprobable.
BinaryWaveform gen_telegraph(double rate, double duration, RandomSource& rng);

/// Stationary unit-variance Gaussian path with the spec's normalized acf on
/// the grid t_k = k * spec.grid_step(), k = 0 .. n_samples - 1.
///
/// Built by spectral filtering of white noise on a circulant grid at least as
/// long as the request, so the covariance is exactly circulant.
Eigen::VectorXd sample_gaussian_path(const GaussianSpec& spec, Eigen::Index n_samples,
                                     RandomSource& rng);

/// sgn of a Gaussian path; crossings are found by linear interpolation
/// between bracketing grid samples. Throws InsufficientDataError when the
/// duration is shorter than ten correlation lengths (10 / n0).
BinaryWaveform gen_hardlimited_gaussian(const GaussianSpec& spec, double duration,
                                        RandomSource& rng);

/// Zero crossings of a sampled path with linear interpolation. Exact zeros
/// count as positive.
BinaryWaveform hard_limit(const Eigen::Ref<const Eigen::VectorXd>& samples, double step,
                          double duration);

/// Chip boundaries 0 < b_1 < b_2 < ... with gaps drawn from `d`, stopping at
/// the last boundary that fits in `duration`.
std::vector<double> chip_boundaries(const ChipDistribution& d, double duration, RandomSource& rng);

/// Bernoulli process with chip periods drawn from `d` and fresh i.i.d.
/// equiprobable signs per chip. The result ends at the last complete chip.
BinaryWaveform gen_bernoulli(const ChipDistribution& d, double duration, RandomSource& rng);

/// Bernoulli waveform from explicit chip boundaries (the last one is the end
/// time) and per-chip signs; sizes must match.
BinaryWaveform waveform_from_chips(std::span<const double> boundaries, std::span<const Sign> signs);

/// Pointwise product. Transitions of the result are the symmetric
/// difference of the input transition sets, so coincident flips cancel.
/// Durations must be identical.
BinaryWaveform gen_product(const BinaryWaveform& a, const BinaryWaveform& b);

}  // namespace impulsewave
