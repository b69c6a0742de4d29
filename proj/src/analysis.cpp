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

#include "impulsewave/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "impulsewave/detail/parallel.hpp"
#include "impulsewave/detail/series.hpp"

namespace impulsewave {

namespace {

// Integral of x(t) y(t + shift) over t in [0, span] for shift >= 0 and
// shift + span <= y.duration(), span <= x.duration().
double overlap_integral(const BinaryWaveform& x, const BinaryWaveform& y, double shift,
                        double span) {
  const auto tx = x.transitions();
  const auto ty = y.transitions();
  std::size_t i = 0;
  std::size_t j = y.transitions_up_to(shift);
  const std::size_t i_end = static_cast<std::size_t>(
      std::lower_bound(tx.begin(), tx.end(), span) - tx.begin());
  const std::size_t j_end = static_cast<std::size_t>(
      std::lower_bound(ty.begin(), ty.end(), shift + span) - ty.begin());

  int product = to_int(x.initial_level()) * to_int(y.value_at(shift));
  double pos = 0.0;
  double sum = 0.0;
  while (i < i_end || j < j_end) {
    double e;
    if (j >= j_end || (i < i_end && tx[i] <= ty[j] - shift)) {
      e = tx[i++];
    } else {
      e = ty[j++] - shift;
    }
    sum += product * (e - pos);
    pos = e;
    product = -product;
  }
  sum += product * (span - pos);
  return sum;
}

// Exact mean of w over cells [n dt, (n + 1) dt) for n = first, first + 1, ...
void box_average(const BinaryWaveform& w, std::ptrdiff_t first, double dt, std::span<double> out) {
  const auto t = w.transitions();
  double pos = static_cast<double>(first) * dt;
  std::size_t next = w.transitions_up_to(pos);
  double level = to_int(w.value_at(pos));
  for (std::size_t n = 0; n < out.size(); ++n) {
    const double lo = static_cast<double>(first + static_cast<std::ptrdiff_t>(n)) * dt;
    const double hi = lo + dt;
    pos = lo;
    double acc = 0.0;
    while (next < t.size() && t[next] < hi) {
      acc += level * (t[next] - pos);
      pos = t[next];
      level = -level;
      ++next;
    }
    acc += level * (hi - pos);
    out[n] = acc / dt;
  }
}

double min_transition_gap(const BinaryWaveform& w) {
  const auto t = w.transitions();
  double gap = w.duration();
  double prev = 0.0;
  for (double v : t) {
    gap = std::min(gap, v - prev);
    prev = v;
  }
  return std::min(gap, w.duration() - prev);
}

}  // namespace

Eigen::VectorXd lag_grid(double first, double last, Eigen::Index count) {
  if (count < 1) throw std::invalid_argument("lag grid needs at least one point");
  if (count == 1) return Eigen::VectorXd::Constant(1, first);
  return Eigen::VectorXd::LinSpaced(count, first, last);
}

AcfCurve xcorr_exact(const BinaryWaveform& a, const BinaryWaveform& b,
                     const Eigen::Ref<const Eigen::VectorXd>& lags) {
  const double span = std::min(a.duration(), b.duration());
  for (Eigen::Index k = 0; k < lags.size(); ++k) {
    if (!(std::abs(lags[k]) < span)) {
      throw std::out_of_range("lag " + std::to_string(lags[k]) +
                              " is not shorter than the waveform duration");
    }
  }
  AcfCurve out{lags, Eigen::VectorXd(lags.size()), span};
  detail::parallel_for(lags.size(), [&](std::ptrdiff_t k) {
    const double tau = lags[k];
    const double shift = std::abs(tau);
    const double len = span - shift;
    const double integral = tau >= 0.0 ? overlap_integral(a, b, shift, len)
                                       : overlap_integral(b, a, shift, len);
    out.values[k] = integral / len;
  });
  return out;
}

AcfCurve acf_exact(const BinaryWaveform& w, const Eigen::Ref<const Eigen::VectorXd>& lags) {
  const Eigen::VectorXd abs_lags = lags.cwiseAbs();
  AcfCurve out = xcorr_exact(w, w, abs_lags);
  out.lags = lags;
  return out;
}

AcfCurve acf_oracle_dense(const BinaryWaveform& w, const Eigen::Ref<const Eigen::VectorXd>& lags,
                          double grid_step, Diagnostics* diag) {
  if (!(grid_step > 0.0)) throw std::invalid_argument("oracle grid step must be positive");
  const auto cells = static_cast<std::ptrdiff_t>(std::floor(w.duration() / grid_step));
  if (cells < 2) throw std::invalid_argument("oracle grid step is longer than the waveform");
  if (diag != nullptr && grid_step >= 0.25 * min_transition_gap(w)) {
    std::ostringstream msg;
    msg << "dense acf oracle: grid step " << grid_step
        << " is not below a quarter of the smallest transition gap " << min_transition_gap(w)
        << "; expect visible discretization error";
    diag->warn(msg.str());
  }

  std::vector<std::int8_t> samples(static_cast<std::size_t>(cells));
  const auto t = w.transitions();
  std::size_t next = 0;
  int level = to_int(w.initial_level());
  for (std::ptrdiff_t n = 0; n < cells; ++n) {
    const double mid = (static_cast<double>(n) + 0.5) * grid_step;
    while (next < t.size() && t[next] <= mid) {
      level = -level;
      ++next;
    }
    samples[static_cast<std::size_t>(n)] = static_cast<std::int8_t>(level);
  }

  AcfCurve out{lags, Eigen::VectorXd(lags.size()), w.duration()};
  for (Eigen::Index k = 0; k < lags.size(); ++k) {
    const auto shift = static_cast<std::ptrdiff_t>(std::llround(std::abs(lags[k]) / grid_step));
    if (shift >= cells) throw std::out_of_range("oracle lag exceeds the sampled span");
  }
  detail::parallel_for(lags.size(), [&](std::ptrdiff_t k) {
    const auto shift = static_cast<std::ptrdiff_t>(std::llround(std::abs(lags[k]) / grid_step));
    const std::ptrdiff_t count = cells - shift;
    std::int64_t sum = 0;
    for (std::ptrdiff_t n = 0; n < count; ++n) {
      sum += samples[static_cast<std::size_t>(n)] * samples[static_cast<std::size_t>(n + shift)];
    }
    out.values[k] = static_cast<double>(sum) / static_cast<double>(count);
  });
  return out;
}

double crossing_rate(const BinaryWaveform& w) {
  return static_cast<double>(w.transition_count()) / w.duration();
}

PsdCurve psd_estimate(const BinaryWaveform& w, const Eigen::Ref<const Eigen::VectorXd>& omegas,
                      const PsdOptions& options) {
  if (!(options.segment_length > 0.0)) {
    throw std::invalid_argument("psd segment length must be positive");
  }
  double dt = options.sample_step;
  if (dt == 0.0) {
    if (w.transition_count() == 0) {
      throw std::invalid_argument("cannot choose a psd sampling step for a waveform without crossings");
    }
    dt = 1.0 / (64.0 * crossing_rate(w));
  }
  if (!(dt > 0.0)) throw std::invalid_argument("psd sampling step must be positive");
  if (w.duration() < 4.0 * options.segment_length) {
    throw InsufficientDataError("psd estimate needs at least four segments of data");
  }
  const auto seg = static_cast<std::ptrdiff_t>(std::llround(options.segment_length / dt));
  if (seg < 8) throw std::invalid_argument("psd segment must span at least 8 samples");
  const auto n_samples = static_cast<std::ptrdiff_t>(std::floor(w.duration() / dt));

  const std::ptrdiff_t hop = seg / 2;
  const std::ptrdiff_t n_seg = (n_samples - seg) / hop + 1;
  const auto nfft = static_cast<std::ptrdiff_t>(std::bit_ceil(static_cast<std::size_t>(2 * seg)));
  const std::ptrdiff_t n_bins = nfft / 2 + 1;

  std::vector<double> taper(static_cast<std::size_t>(seg));
  double taper_energy = 0.0;
  for (std::ptrdiff_t n = 0; n < seg; ++n) {
    const double v = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(n) /
                                          static_cast<double>(seg));
    taper[static_cast<std::size_t>(n)] = v;
    taper_energy += v * v;
  }

  Eigen::VectorXd power = Eigen::VectorXd::Zero(n_bins);
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
  std::vector<double> buffer(static_cast<std::size_t>(nfft), 0.0);
  std::vector<std::complex<double>> spectrum;
  for (std::ptrdiff_t s = 0; s < n_seg; ++s) {
    box_average(w, s * hop, dt, std::span<double>(buffer.data(), static_cast<std::size_t>(seg)));
    for (std::ptrdiff_t n = 0; n < seg; ++n) buffer[static_cast<std::size_t>(n)] *= taper[static_cast<std::size_t>(n)];
    fft.fwd(spectrum, buffer);
    for (std::ptrdiff_t k = 0; k < n_bins; ++k) power[k] += std::norm(spectrum[static_cast<std::size_t>(k)]);
  }

  const double d_omega = 2.0 * std::numbers::pi / (static_cast<double>(nfft) * dt);
  Eigen::VectorXd bins(n_bins);
  Eigen::VectorXd density(n_bins);
  for (std::ptrdiff_t k = 0; k < n_bins; ++k) {
    const double omega = d_omega * static_cast<double>(k);
    const double box = detail::sinc(0.5 * omega * dt);
    bins[k] = omega;
    density[k] = power[k] * dt / (taper_energy * static_cast<double>(n_seg) * box * box);
  }

  std::ostringstream note;
  note << "two-sided S(omega), integral S domega/(2pi) = R(0); Welch, Hann taper, segment "
       << options.segment_length << " s, step " << dt << " s, " << n_seg << " segments";
  if (omegas.size() == 0) return PsdCurve{bins, density, note.str()};

  const double nyquist = bins[n_bins - 1];
  PsdCurve out{omegas, Eigen::VectorXd(omegas.size()), note.str()};
  for (Eigen::Index i = 0; i < omegas.size(); ++i) {
    const double omega = std::abs(omegas[i]);
    if (omega > nyquist) {
      throw std::out_of_range("frequency " + std::to_string(omegas[i]) + " above Nyquist " +
                              std::to_string(nyquist));
    }
    const double pos = omega / d_omega;
    const auto k = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(pos), n_bins - 2);
    const double frac = pos - static_cast<double>(k);
    out.values[i] = (1.0 - frac) * density[k] + frac * density[k + 1];
  }
  return out;
}

double psd_moment(const PsdCurve& psd, int power) {
  const Eigen::Index n = psd.omegas.size();
  if (n < 2) throw std::invalid_argument("psd moment needs at least two frequencies");
  double sum = 0.0;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    const double w0 = psd.omegas[k];
    const double w1 = psd.omegas[k + 1];
    const double f0 = psd.values[k] * std::pow(w0, power);
    const double f1 = psd.values[k + 1] * std::pow(w1, power);
    sum += 0.5 * (f0 + f1) * (w1 - w0);
  }
  // Even integrand: the negative half contributes the same.
  return 2.0 * sum / (2.0 * std::numbers::pi);
}

Interferogram interferogram(const BinaryWaveform& w, const Eigen::Ref<const Eigen::VectorXd>& lags,
                            Eigen::Index max_crossings) {
  if (lags.size() == 0) throw std::invalid_argument("interferogram needs at least one lag");
  if (max_crossings < 1) throw std::invalid_argument("max_crossings must be positive");
  const double lo = std::min(0.0, lags.minCoeff());
  const double hi = std::max(0.0, lags.maxCoeff());
  const auto t = w.transitions();

  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < t.size() && static_cast<Eigen::Index>(used.size()) < max_crossings;
       ++i) {
    if (t[i] + lo >= 0.0 && t[i] + hi <= w.duration()) used.push_back(i);
  }
  if (used.empty()) {
    throw InsufficientDataError("no zero crossing has its whole lag window inside the waveform");
  }

  const auto n_c = static_cast<Eigen::Index>(used.size());
  Interferogram out{lags, Eigen::VectorXd(lags.size()), Eigen::VectorXd(lags.size()), n_c};
  detail::parallel_for(lags.size(), [&](std::ptrdiff_t k) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t i : used) {
      const int v = to_int(w.level_after(i)) * to_int(w.value_at(t[i] + lags[k]));
      sum += v;
      sum_sq += v * v;
    }
    const double n = static_cast<double>(n_c);
    const double mean = sum / n;
    const double var = n > 1.0 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) : 0.0;
    out.values[k] = mean;
    out.ci95[k] = 1.96 * std::sqrt(var / n);
  });
  return out;
}

}  // namespace impulsewave
