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

#include "impulsewave/prbs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "impulsewave/analysis.hpp"
#include "impulsewave/generators.hpp"

namespace impulsewave {

namespace {

std::uint64_t tap_mask(const LfsrConfig& cfg) {
  std::uint64_t mask = 0;
  for (int t : cfg.taps) mask |= std::uint64_t{1} << (cfg.width - t);
  return mask;
}

// Hot loop form of lfsr_step for an already validated config.
struct Register {
  std::uint64_t state;
  std::uint64_t taps;
  int top;

  int shift() {
    const int out = static_cast<int>(state & 1U);
    const auto fb = static_cast<std::uint64_t>(std::popcount(state & taps) & 1);
    state = (state >> 1) | (fb << top);
    return out;
  }
};

Register make_register(const LfsrConfig& cfg) {
  cfg.validate();
  return Register{cfg.initial_state, tap_mask(cfg), cfg.width - 1};
}

}  // namespace

void LfsrConfig::validate() const {
  if (width < 2 || width > 64) throw std::invalid_argument("LFSR width must be in [2, 64]");
  if (taps.empty()) throw std::invalid_argument("LFSR needs at least one tap");
  std::vector<int> sorted = taps;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("LFSR taps must be distinct");
  }
  if (sorted.front() < 1 || sorted.back() > width) {
    throw std::invalid_argument("LFSR taps must lie in [1, width]");
  }
  if (initial_state == 0) throw std::invalid_argument("LFSR initial state must be nonzero");
  if ((initial_state & ~mask()) != 0) {
    throw std::invalid_argument("LFSR initial state does not fit in the register width");
  }
}

std::vector<int> LfsrConfig::default_taps(int width) {
  // Primitive feedback polynomials, one per register width.
  switch (width) {
    case 2: return {2, 1};
    case 3: return {3, 2};
    case 4: return {4, 3};
    case 5: return {5, 3};
    case 6: return {6, 5};
    case 7: return {7, 6};
    case 8: return {8, 6, 5, 4};
    case 9: return {9, 5};
    case 10: return {10, 7};
    case 11: return {11, 9};
    case 12: return {12, 6, 4, 1};
    case 13: return {13, 4, 3, 1};
    case 14: return {14, 5, 3, 1};
    case 15: return {15, 14};
    case 16: return {16, 15, 13, 4};
    case 17: return {17, 14};
    case 18: return {18, 11};
    case 19: return {19, 6, 2, 1};
    case 20: return {20, 17};
    case 21: return {21, 19};
    case 22: return {22, 21};
    case 23: return {23, 18};
    case 24: return {24, 23, 22, 17};
    case 32: return {32, 22, 2, 1};
    default: break;
  }
  throw std::invalid_argument("no default taps for LFSR width " + std::to_string(width));
}

LfsrConfig LfsrConfig::with_default_taps(int width, std::uint64_t initial_state) {
  LfsrConfig cfg{width, default_taps(width), initial_state};
  cfg.validate();
  return cfg;
}

LfsrStep lfsr_step(std::uint64_t state, const LfsrConfig& cfg) {
  if (state == 0) throw std::invalid_argument("LFSR state must be nonzero");
  if ((state & ~cfg.mask()) != 0) {
    throw std::invalid_argument("LFSR state does not fit in the register width");
  }
  Register reg{state, tap_mask(cfg), cfg.width - 1};
  const int bit = reg.shift();
  return {reg.state, bit};
}

std::uint64_t lfsr_period(const LfsrConfig& cfg, std::uint64_t limit) {
  Register reg = make_register(cfg);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    reg.shift();
    if (reg.state == cfg.initial_state) return n;
  }
  return 0;
}

std::string_view to_string(ClockMode mode) {
  return mode == ClockMode::cyclic_fixed ? "cyclic_fixed" : "permute_per_cycle";
}

ClockMode clock_mode_from_string(std::string_view name) {
  if (name == "cyclic_fixed" || name == "cyclic-fixed" || name == "cyclic") {
    return ClockMode::cyclic_fixed;
  }
  if (name == "permute_per_cycle" || name == "permute-per-cycle" || name == "permute") {
    return ClockMode::permute_per_cycle;
  }
  throw std::invalid_argument("unknown clock mode '" + std::string(name) + "'");
}

void SpreadClockConfig::validate() const {
  if (intervals.empty()) throw std::invalid_argument("spread clock needs at least one interval");
  for (double v : intervals) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("spread clock intervals must be positive and finite");
    }
  }
}

double SpreadClockConfig::mean_interval() const {
  validate();
  return std::accumulate(intervals.begin(), intervals.end(), 0.0) /
         static_cast<double>(intervals.size());
}

SpreadClockConfig SpreadClockConfig::uniform_spread(double mean_chip, double alpha, int k,
                                                    ClockMode mode, std::uint64_t seed) {
  if (!(mean_chip > 0.0) || !std::isfinite(mean_chip)) {
    throw std::invalid_argument("clock mean chip must be positive");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("clock alpha must be in [0, 1]");
  if (k < 1) throw std::invalid_argument("clock needs K >= 1 intervals");
  SpreadClockConfig cfg;
  cfg.mode = mode;
  cfg.seed = seed;
  cfg.intervals.resize(static_cast<std::size_t>(k));
  const double lo = (1.0 - alpha) * mean_chip;
  const double width = 2.0 * alpha * mean_chip;
  for (int j = 0; j < k; ++j) {
    cfg.intervals[static_cast<std::size_t>(j)] = lo + width * (j + 0.5) / k;
  }
  return cfg;
}

SpreadClock::SpreadClock(SpreadClockConfig cfg)
    : cfg_(std::move(cfg)), rng_(cfg_.seed, Stream::clock), order_(cfg_.intervals) {
  cfg_.validate();
  pos_ = order_.size();
}

void SpreadClock::start_cycle() {
  if (cfg_.mode == ClockMode::permute_per_cycle || !fixed_drawn_) {
    order_ = cfg_.intervals;
    std::shuffle(order_.begin(), order_.end(), rng_.engine());
    fixed_drawn_ = true;
  }
  pos_ = 0;
}

double SpreadClock::next_gap() {
  if (pos_ == order_.size()) start_cycle();
  return order_[pos_++];
}

std::vector<double> clock_ticks(const SpreadClockConfig& cfg, std::size_t n) {
  if (n < 1) throw std::invalid_argument("need at least one tick");
  SpreadClock clock(cfg);
  std::vector<double> ticks(n);
  double t = 0.0;
  for (auto& tick : ticks) {
    t += clock.next_gap();
    tick = t;
  }
  return ticks;
}

namespace {

BinaryWaveform prbs_from_boundaries(const LfsrConfig& lfsr, std::span<const double> boundaries) {
  Register reg = make_register(lfsr);
  std::vector<Sign> symbols(boundaries.size());
  for (auto& s : symbols) s = lfsr_symbol(reg.shift());
  return waveform_from_chips(boundaries, symbols);
}

}  // namespace

BinaryWaveform gen_prbs_waveform(const LfsrConfig& lfsr, const SpreadClockConfig& clk,
                                 double duration) {
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw std::invalid_argument("duration must be positive and finite");
  }
  SpreadClock clock(clk);
  std::vector<double> bounds;
  bounds.reserve(static_cast<std::size_t>(duration / clk.mean_interval()) + 16);
  double t = 0.0;
  while (true) {
    const double next = t + clock.next_gap();
    if (next > duration) break;
    bounds.push_back(next);
    t = next;
  }
  return prbs_from_boundaries(lfsr, bounds);
}

BinaryWaveform gen_prbs_chips(const LfsrConfig& lfsr, const SpreadClockConfig& clk,
                              std::size_t n_chips) {
  return prbs_from_boundaries(lfsr, clock_ticks(clk, n_chips));
}

BinaryWaveform gen_sampled_hold(const BinaryWaveform& source, std::span<const double> ticks,
                                Diagnostics* diag) {
  if (ticks.empty()) throw std::invalid_argument("sample-and-hold needs at least one tick");
  double prev = 0.0;
  double min_gap = ticks.front();
  for (double t : ticks) {
    if (!(t > prev)) throw std::invalid_argument("sample ticks must be strictly increasing and > 0");
    if (t > source.duration()) {
      throw std::out_of_range("sample tick " + std::to_string(t) + " beyond source duration " +
                              std::to_string(source.duration()));
    }
    min_gap = std::min(min_gap, t - prev);
    prev = t;
  }

  std::vector<Sign> held(ticks.size());
  held[0] = source.value_at(0.0);
  for (std::size_t j = 1; j < ticks.size(); ++j) held[j] = source.value_at(ticks[j - 1]);

  if (diag != nullptr && min_gap < source.duration()) {
    const Eigen::VectorXd lag = Eigen::VectorXd::Constant(1, min_gap);
    const double r = acf_exact(source, lag).values[0];
    if (r > 0.1) {
      std::ostringstream msg;
      msg << "sample-and-hold: source acf " << r << " at the smallest tick gap " << min_gap
          << " exceeds 0.1; successive samples are correlated";
      diag->warn(msg.str());
    }
  }
  return waveform_from_chips(ticks, held);
}

BinaryWaveform gen_sampled_hold(const BinaryWaveform& source, const SpreadClockConfig& clk,
                                Diagnostics* diag) {
  SpreadClock clock(clk);
  std::vector<double> ticks;
  double t = 0.0;
  while (true) {
    const double next = t + clock.next_gap();
    if (next > source.duration()) break;
    ticks.push_back(next);
    t = next;
  }
  return gen_sampled_hold(source, ticks, diag);
}

}  // namespace impulsewave
