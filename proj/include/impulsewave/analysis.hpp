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
/// Empirical estimators on event-based binary waveforms.

#include <string>

#include <Eigen/Core>

#include "impulsewave/errors.hpp"
#include "impulsewave/waveform.hpp"

namespace impulsewave {

/// Correlation estimates on a lag grid (seconds).
struct AcfCurve {
  Eigen::VectorXd lags;
  Eigen::VectorXd values;
  /// Observation span T the estimate was formed from.
  double effective_duration = 0.0;
};

/// Spectral density estimates on an angular-frequency grid (rad/s).
struct PsdCurve {
  Eigen::VectorXd omegas;
  Eigen::VectorXd values;
  std::string normalization;
};

/// Zero-crossing interferogram: signed average of crossing-aligned
/// trajectories.
struct Interferogram {
  Eigen::VectorXd lags;
  Eigen::VectorXd values;
  /// Half-width of the per-lag 95% band, 1.96 * sample std / sqrt(n_c).
  Eigen::VectorXd ci95;
  Eigen::Index crossings = 0;
};

/// `count` evenly spaced points from `first` to `last` inclusive.
Eigen::VectorXd lag_grid(double first, double last, Eigen::Index count);

/// Exact time-average cross-correlation
///   (1 / (T - |tau|)) * integral a(t) b(t + tau) dt
/// over the overlap, T the shorter duration. Each lag is one merge pass over
/// the two transition lists, so there is no discretization error. Throws
/// std::out_of_range for |tau| >= T.
AcfCurve xcorr_exact(const BinaryWaveform& a, const BinaryWaveform& b,
                     const Eigen::Ref<const Eigen::VectorXd>& lags);

/// Exact time-average autocorrelation; symmetric in tau, exactly 1 at tau = 0.
AcfCurve acf_exact(const BinaryWaveform& w, const Eigen::Ref<const Eigen::VectorXd>& lags);

/// Brute-force reference: samples w at cell midpoints of a uniform grid and
/// averages lagged products, lags rounded to whole grid steps. Appends a
/// precision warning to `diag` when grid_step is not below a quarter of the
/// smallest gap between transitions.
AcfCurve acf_oracle_dense(const BinaryWaveform& w, const Eigen::Ref<const Eigen::VectorXd>& lags,
                          double grid_step, Diagnostics* diag = nullptr);

/// Transitions per second.
double crossing_rate(const BinaryWaveform& w);

struct PsdOptions {
  /// Segment length in seconds.
  double segment_length = 64.0;
  /// Sampling step in seconds; zero picks 32 samples per mean chip,
  /// i.e. 1 / (64 n0) with n0 the measured crossing rate.
  double sample_step = 0.0;
};

/// Averaged-periodogram (Welch) estimate of the two-sided density S(omega)
/// with integral S d omega / (2 pi) = R(0) = 1.
///
/// The waveform is box-averaged onto the sampling grid (exact integrals of
/// the piecewise-constant signal), cut into half-overlapping segments with a
/// Hann taper w[n] = 0.5 - 0.5 cos(2 pi n / M), and the squared FFT
/// magnitudes (zero-padded to a power of two at least 2M) are averaged. The
/// box-average response sinc^2(omega dt / 2) is divided out. Values at the requested |omega| are interpolated linearly
/// between FFT bins; an empty grid returns the native bins 0..Nyquist.
/// Throws InsufficientDataError when the duration holds fewer than four
/// segments, std::out_of_range for |omega| above Nyquist.
PsdCurve psd_estimate(const BinaryWaveform& w, const Eigen::Ref<const Eigen::VectorXd>& omegas,
                      const PsdOptions& options);

/// Trapezoidal integral of S(omega) omega^power d omega / (2 pi) over the
/// symmetric band covered by a one-sided native grid.
double psd_moment(const PsdCurve& psd, int power);

/// Zero-crossing interferogram over the first `max_crossings` eligible
/// crossings. A crossing is eligible when [t_i + min lag, t_i + max lag]
/// lies inside the waveform. Upcrossings count with +, downcrossings with -,
/// so the value at lag 0 is exactly +1. Throws InsufficientDataError if no
/// crossing is eligible.
Interferogram interferogram(const BinaryWaveform& w, const Eigen::Ref<const Eigen::VectorXd>& lags,
                            Eigen::Index max_crossings);

}  // namespace impulsewave
