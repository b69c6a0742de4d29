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

#include "impulsewave/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "impulsewave/detail/series.hpp"
#include "impulsewave/quadrature.hpp"

namespace impulsewave {

using std::numbers::pi;

namespace {

void require_rate(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw std::invalid_argument("crossing rate must be positive and finite");
  }
}

void require_chip(double mean_chip) {
  if (!(mean_chip > 0.0) || !std::isfinite(mean_chip)) {
    throw std::invalid_argument("chip period must be positive and finite");
  }
}

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

// (sin x - x cos x) / x^3, the normalized slope of sinc.
double sinc_slope_ratio(double x) {
  const double x2 = x * x;
  if (std::abs(x) < 1e-2) return 1.0 / 3.0 - x2 / 30.0 + x2 * x2 / 840.0;
  return (std::sin(x) - x * std::cos(x)) / (x2 * x);
}

// Integral of the centered cdf from -a to y, for y in [-a, a].
double centered_cdf_integral(const ChipDistribution& d, double y) {
  const double a = d.half_width();
  switch (d.kind()) {
    case ChipKind::degenerate: return 0.0;
    case ChipKind::uniform: return (y + a) * (y + a) / (4.0 * a);
    case ChipKind::raised_cosine:
      return y / 2.0 + y * y / (4.0 * a) + a / 4.0 - a * (1.0 + std::cos(pi * y / a)) / (2.0 * pi * pi);
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(SpectrumKind kind) {
  return kind == SpectrumKind::gaussian ? "gaussian" : "uniform-band";
}

SpectrumKind spectrum_kind_from_string(std::string_view name) {
  if (name == "gaussian") return SpectrumKind::gaussian;
  if (name == "uniform-band" || name == "uniform_band" || name == "uniform") {
    return SpectrumKind::uniform_band;
  }
  throw std::invalid_argument("unknown spectrum kind '" + std::string(name) + "'");
}

ModelParams::ModelParams(double mean_chip, double alpha) : mean_chip_(mean_chip), alpha_(alpha) {
  require_chip(mean_chip);
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("model spread alpha must lie in [0, 1]");
  }
}

double acf_telegraph(double rate, double tau) {
  require_rate(rate);
  return std::exp(-2.0 * rate * std::abs(tau));
}

double psd_telegraph(double rate, double omega) {
  require_rate(rate);
  return 4.0 * rate / (omega * omega + 4.0 * rate * rate);
}

double acf_arcsine(double r) {
  if (!(std::abs(r) <= 1.0)) {
    throw std::domain_error("arcsine law needs |r| <= 1, got " + std::to_string(r));
  }
  return 2.0 / pi * std::asin(r);
}

double rx_gaussian(double rate, double tau) {
  require_rate(rate);
  const double s = pi * rate * tau;
  return std::exp(-0.5 * s * s);
}

double uniform_band_edge(double rate) {
  require_rate(rate);
  return std::sqrt(3.0) * pi * rate;
}

double rx_uniform_band(double rate, double tau) {
  return detail::sinc(uniform_band_edge(rate) * tau);
}

double rx(SpectrumKind kind, double rate, double tau) {
  return kind == SpectrumKind::gaussian ? rx_gaussian(rate, tau) : rx_uniform_band(rate, tau);
}

double acf_hardlimited(SpectrumKind kind, double rate, double tau) {
  return acf_arcsine(std::clamp(rx(kind, rate, tau), -1.0, 1.0));
}

double acf_triangle(double mean_chip, double tau) {
  require_chip(mean_chip);
  const double u = std::abs(tau) / mean_chip;
  return u < 1.0 ? 1.0 - u : 0.0;
}

double psd_bernoulli(double mean_chip, double omega) {
  require_chip(mean_chip);
  const double s = detail::sinc(0.5 * omega * mean_chip);
  return mean_chip * s * s;
}

double acf_model(const ModelParams& p, double tau) {
  const double u = std::abs(tau) / p.mean_chip();
  const double alpha = p.alpha();
  if (u < 1.0 - alpha) return 1.0 - u;
  if (u < 1.0 + alpha) {
    const double d = u - 1.0 - alpha;
    return d * d / (4.0 * alpha);
  }
  return 0.0;
}

double acf_from_cdf(const ChipDistribution& d, double tau, double abs_tol) {
  const double t = d.mean_chip();
  const double x = std::abs(tau);
  const std::array<double, 3> kinks{d.min_chip(), t, d.max_chip()};
  // Below the support F vanishes, so only [min_chip, x] contributes.
  const double lo = std::min(d.min_chip(), x);
  const auto q = integrate([&d](double xi) { return d.cdf(xi); }, lo, x, abs_tol * t, kinks);
  return 1.0 - x / t + q.value / t;
}

double acf_randomchip(const ChipDistribution& d, double tau) {
  const double t = d.mean_chip();
  const double x = std::abs(tau);
  if (d.kind() == ChipKind::degenerate) return acf_triangle(t, tau);
  if (x <= d.min_chip()) return 1.0 - x / t;
  if (x >= d.max_chip()) return 0.0;
  return 1.0 - x / t + centered_cdf_integral(d, x - t) / t;
}

double acf_raised_cosine_full_spread(double mean_chip, double tau) {
  require_chip(mean_chip);
  const double u = std::abs(tau) / mean_chip;
  if (u >= 2.0) return 0.0;
  const double s = std::sin(0.5 * pi * u);
  return 1.0 - u + 0.25 * u * u - s * s / (pi * pi);
}

double acf_derivative_from_cdf(const ChipDistribution& d, double tau) {
  return sgn(tau) * (d.cdf(std::abs(tau)) - 1.0) / d.mean_chip();
}

double psd_randomchip(const ChipDistribution& d, double omega) {
  // 1 - Psi cos = (1 - cos) + cos (1 - Psi); both pieces divided by omega^2
  // stay finite at omega = 0.
  const double t = d.mean_chip();
  const double s = detail::sinc(0.5 * omega * t);
  const double one_minus_cos = 0.5 * t * t * s * s;
  return 2.0 / t * (one_minus_cos + std::cos(omega * t) * d.characteristic_defect(omega));
}

double crossing_rate_chip(const ChipDistribution& d) { return 0.5 / d.mean_chip(); }

double interferogram_mean_gaussian(double rate, double tau) {
  require_rate(rate);
  if (tau == 0.0) return 1.0;
  const double s = pi * rate * tau;
  const double r = std::exp(-0.5 * s * s);
  return s * r / std::sqrt(-std::expm1(-s * s));
}

double interferogram_mean_hardlimited(SpectrumKind kind, double rate, double tau) {
  if (kind == SpectrumKind::gaussian) return interferogram_mean_gaussian(rate, tau);
  if (tau == 0.0) return 1.0;
  // -R'/(2 n0) with R = (2/pi) asin(sinc(W tau)).
  const double w = uniform_band_edge(rate);
  const double x = w * tau;
  const double r = detail::sinc(x);
  // 1 - r^2 = x^2 g(x) (1 + r)
  const double g = detail::one_minus_sinc_over_sq(x);
  return sgn(x) * w * sinc_slope_ratio(x) / (pi * rate * std::sqrt(g * (1.0 + r)));
}

double interferogram_mean_telegraph(double rate, double tau) {
  require_rate(rate);
  if (tau == 0.0) return 1.0;
  return sgn(tau) * std::exp(-2.0 * rate * std::abs(tau));
}

double interferogram_mean_chip(const ChipDistribution& d, double tau) {
  if (tau == 0.0) return 1.0;
  return sgn(tau) * (1.0 - d.cdf(std::abs(tau)));
}

}  // namespace impulsewave
