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

/// @file
/// Closed-form autocorrelation, spectrum and interferogram curves for the
/// random binary processes produced by this library.
///
/// Conventions used throughout:
///  - autocorrelations are normalized, R(0) = 1;
///  - spectra are two-sided densities in angular frequency with
///    S(omega) = integral of R(tau) exp(-i omega tau) dtau, so that
///    the integral of S(omega) d omega / (2 pi) equals R(0) = 1;
///  - the interferogram mean is -R'(tau) / (2 n0), which is +1 just after
///    the origin and odd in tau. At tau = 0 the right limit is returned.

#include <string_view>
#include <utility>

#include <Eigen/Core>

#include "impulsewave/chip_distribution.hpp"

namespace impulsewave {

/// Spectrum of the Gaussian process that is hard-limited.
enum class SpectrumKind { uniform_band, gaussian };

std::string_view to_string(SpectrumKind kind);
SpectrumKind spectrum_kind_from_string(std::string_view name);

/// Chip period and spread of the parabolic-corner model function.
class ModelParams {
 public:
  ModelParams(double mean_chip, double alpha);

  double mean_chip() const { return mean_chip_; }
  double alpha() const { return alpha_; }

 private:
  double mean_chip_;
  double alpha_;
};

// -- random telegraph signal ------------------------------------------------

double acf_telegraph(double rate, double tau);
/// Lorentzian 4 n0 / (omega^2 + 4 n0^2).
double psd_telegraph(double rate, double omega);

// -- hard-limited Gaussian noise --------------------------------------------

/// (2/pi) arcsin(r); throws std::domain_error for |r| > 1.
double acf_arcsine(double r);

/// Normalized acf exp(-pi^2 n0^2 tau^2 / 2) of the Gaussian-spectrum input.
double rx_gaussian(double rate, double tau);
/// Normalized acf sin(W tau)/(W tau) of the band-limited input.
double rx_uniform_band(double rate, double tau);
/// Band edge W = sqrt(3) pi n0 giving crossing rate n0.
double uniform_band_edge(double rate);
double rx(SpectrumKind kind, double rate, double tau);

/// Arcsine law composed with the input acf.
double acf_hardlimited(SpectrumKind kind, double rate, double tau);

// -- Bernoulli processes ----------------------------------------------------

/// Triangle 1 - |tau|/t_c on |tau| <= t_c, zero outside.
double acf_triangle(double mean_chip, double tau);
/// 4 sin^2(omega t_c / 2) / (omega^2 t_c), t_c at omega = 0.
double psd_bernoulli(double mean_chip, double omega);

/// Triangle with its foot replaced by matched parabolic arcs:
///   1 - |u|                      for |u| < 1 - alpha
///   (|u| - 1 - alpha)^2 / (4 alpha) for 1 - alpha <= |u| < 1 + alpha
///   0                            beyond,
/// with u = tau / t_c.
double acf_model(const ModelParams& p, double tau);

/// Acf of the random-chip process from its chip cdf,
///   R(tau) = 1 - |tau|/t_c + (1/t_c) * integral_0^|tau| F(xi) d xi,
/// with the integral done by adaptive quadrature to `abs_tol`.
double acf_from_cdf(const ChipDistribution& d, double tau, double abs_tol = 1e-10);

/// Same acf using the closed-form cdf integral of each shipped kind.
double acf_randomchip(const ChipDistribution& d, double tau);

/// Closed form for raised-cosine modulation with full spread (alpha = 1):
///   1 - |tau|/t_c + tau^2/(4 t_c^2) - sin^2(pi tau / (2 t_c)) / pi^2.
double acf_raised_cosine_full_spread(double mean_chip, double tau);

/// R'(tau) = sgn(tau) [F(|tau|) - 1] / t_c; zero at tau = 0.
double acf_derivative_from_cdf(const ChipDistribution& d, double tau);

/// S(omega) = (2 / (omega^2 t_c)) [1 - Psi(omega) cos(omega t_c)], with the
/// omega -> 0 limit t_c + var(C) / t_c.
double psd_randomchip(const ChipDistribution& d, double omega);

// -- zero-crossing statistics -----------------------------------------------

/// Mean crossing rate of a random-chip (or constant-chip) process.
double crossing_rate_chip(const ChipDistribution& d);

/// Interferogram mean pi n0 tau r / sqrt(1 - r^2), r = exp(-pi^2 n0^2 tau^2 / 2).
double interferogram_mean_gaussian(double rate, double tau);
double interferogram_mean_hardlimited(SpectrumKind kind, double rate, double tau);
double interferogram_mean_telegraph(double rate, double tau);
/// sgn(tau) [1 - F(|tau|)], i.e. -t_c R'(tau).
double interferogram_mean_chip(const ChipDistribution& d, double tau);

/// Applies a scalar curve elementwise over a grid.
template <typename Fn>
Eigen::ArrayXd evaluate_on(const Eigen::Ref<const Eigen::ArrayXd>& grid, Fn&& fn) {
  return grid.unaryExpr(std::forward<Fn>(fn));
}

}  // namespace impulsewave
