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

#include <string>
#include <string_view>

#include "impulsewave/random.hpp"

namespace impulsewave {

enum class ChipKind { degenerate, uniform, raised_cosine };

std::string_view to_string(ChipKind kind);
/// Accepts "degenerate", "uniform", "raised-cosine" / "raised_cosine".
ChipKind chip_kind_from_string(std::string_view name);

/// Law of the chip period C.
///
/// The centered density p_C is even with support [-a, a], a = alpha * mean_chip;
/// the chip period itself has density p_C(tau - mean_chip). A spread of zero
/// always collapses to the degenerate kind, whatever kind was requested.
class ChipDistribution {
 public:
  ChipDistribution(ChipKind kind, double mean_chip, double alpha);

  static ChipDistribution degenerate(double mean_chip) {
    return ChipDistribution(ChipKind::degenerate, mean_chip, 0.0);
  }
  static ChipDistribution uniform(double mean_chip, double alpha) {
    return ChipDistribution(ChipKind::uniform, mean_chip, alpha);
  }
  static ChipDistribution raised_cosine(double mean_chip, double alpha) {
    return ChipDistribution(ChipKind::raised_cosine, mean_chip, alpha);
  }

  ChipKind kind() const { return kind_; }
  double mean_chip() const { return mean_chip_; }
  double alpha() const { return alpha_; }
  /// a = alpha * mean_chip.
  double half_width() const { return alpha_ * mean_chip_; }
  double min_chip() const { return mean_chip_ - half_width(); }
  double max_chip() const { return mean_chip_ + half_width(); }

  /// Variance of C.
  double variance() const;

  /// Centered density p_C(x). The degenerate kind has no density and returns
  /// zero everywhere.
  double centered_pdf(double x) const;

  /// Shifted density p_C(tau - mean_chip).
  double pdf(double tau) const { return centered_pdf(tau - mean_chip_); }

  /// F(tau) = Pr{C <= tau}.
  double cdf(double tau) const;

  /// Fourier transform of the centered density (real because p_C is even).
  double characteristic(double omega) const;

  /// (1 - characteristic(omega)) / omega^2, finite at omega = 0.
  double characteristic_defect(double omega) const;

  /// One chip duration in [min_chip(), max_chip()].
  double sample(RandomSource& rng) const;

  bool operator==(const ChipDistribution&) const = default;

 private:
  ChipKind kind_;
  double mean_chip_;
  double alpha_;
};

inline double sample_chip(const ChipDistribution& d, RandomSource& rng) { return d.sample(rng); }
inline double chip_cdf(const ChipDistribution& d, double tau) { return d.cdf(tau); }

}  // namespace impulsewave
