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

#include "impulsewave/chip_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "impulsewave/detail/series.hpp"

namespace impulsewave {

using std::numbers::pi;

std::string_view to_string(ChipKind kind) {
  switch (kind) {
    case ChipKind::degenerate: return "degenerate";
    case ChipKind::uniform: return "uniform";
    case ChipKind::raised_cosine: return "raised-cosine";
  }
  return "unknown";
}

ChipKind chip_kind_from_string(std::string_view name) {
  if (name == "degenerate" || name == "constant") return ChipKind::degenerate;
  if (name == "uniform") return ChipKind::uniform;
  if (name == "raised-cosine" || name == "raised_cosine") return ChipKind::raised_cosine;
  throw std::invalid_argument("unknown chip distribution kind '" + std::string(name) + "'");
}

ChipDistribution::ChipDistribution(ChipKind kind, double mean_chip, double alpha)
    : kind_(kind), mean_chip_(mean_chip), alpha_(alpha) {
  if (!std::isfinite(mean_chip) || mean_chip <= 0.0) {
    throw std::invalid_argument("mean chip period must be positive and finite");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("chip spread alpha must lie in [0, 1]");
  }
  if (kind_ == ChipKind::degenerate && alpha_ != 0.0) {
    throw std::invalid_argument("degenerate chip distribution requires alpha = 0");
  }
  if (alpha_ == 0.0) kind_ = ChipKind::degenerate;
}

double ChipDistribution::variance() const {
  const double a = half_width();
  switch (kind_) {
    case ChipKind::degenerate: return 0.0;
    case ChipKind::uniform: return a * a / 3.0;
    case ChipKind::raised_cosine: return a * a * (1.0 / 3.0 - 2.0 / (pi * pi));
  }
  return 0.0;
}

double ChipDistribution::centered_pdf(double x) const {
  const double a = half_width();
  if (kind_ == ChipKind::degenerate || std::abs(x) > a) return 0.0;
  if (kind_ == ChipKind::uniform) return 1.0 / (2.0 * a);
  return (1.0 + std::cos(pi * x / a)) / (2.0 * a);
}

double ChipDistribution::cdf(double tau) const {
  if (kind_ == ChipKind::degenerate) return tau >= mean_chip_ ? 1.0 : 0.0;
  const double a = half_width();
  const double x = tau - mean_chip_;
  if (x <= -a) return 0.0;
  if (x >= a) return 1.0;
  if (kind_ == ChipKind::uniform) return (x + a) / (2.0 * a);
  const double f = 0.5 + x / (2.0 * a) + std::sin(pi * x / a) / (2.0 * pi);
  return std::clamp(f, 0.0, 1.0);
}

double ChipDistribution::characteristic(double omega) const {
  const double x = std::abs(omega) * half_width();
  switch (kind_) {
    case ChipKind::degenerate: return 1.0;
    case ChipKind::uniform: return detail::sinc(x);
    case ChipKind::raised_cosine:
      // pi^2 sin(x) / (x (pi^2 - x^2)); the second form removes the pole at x = pi.
      if (x <= 1.0) return detail::sinc(x) * pi * pi / (pi * pi - x * x);
      return pi * pi * detail::sinc(x - pi) / (x * (x + pi));
  }
  return 1.0;
}

double ChipDistribution::characteristic_defect(double omega) const {
  const double a = half_width();
  const double x = std::abs(omega) * a;
  switch (kind_) {
    case ChipKind::degenerate: return 0.0;
    case ChipKind::uniform: return a * a * detail::one_minus_sinc_over_sq(x);
    case ChipKind::raised_cosine:
      if (x <= 1.0) {
        return a * a * (pi * pi * detail::one_minus_sinc_over_sq(x) - 1.0) / (pi * pi - x * x);
      }
      return (1.0 - characteristic(omega)) / (omega * omega);
  }
  return 0.0;
}

double ChipDistribution::sample(RandomSource& rng) const {
  const double a = half_width();
  switch (kind_) {
    case ChipKind::degenerate: return mean_chip_;
    case ChipKind::uniform: return min_chip() + 2.0 * a * rng.uniform();
    case ChipKind::raised_cosine: {
      // Inverse cdf by bisection on the centered support.
      const double u = rng.uniform();
      const double tol = 1e-12 * mean_chip_;
      double lo = -a;
      double hi = a;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double f = 0.5 + mid / (2.0 * a) + std::sin(pi * mid / a) / (2.0 * pi);
        if (f < u) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return mean_chip_ + 0.5 * (lo + hi);
    }
  }
  return mean_chip_;
}

}  // namespace impulsewave
