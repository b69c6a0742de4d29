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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "impulsewave/errors.hpp"
#include "impulsewave/random.hpp"
#include "impulsewave/waveform.hpp"

namespace impulsewave {

/// Fibonacci (external XOR) linear-feedback shift register.
///
/// Bits are numbered 1..width from the output end's opposite side, so tap t
/// reads bit (width - t) of the state word; the output bit is the least
/// significant bit and the feedback enters at the top. Taps {m, ...} of a
/// primitive polynomial give the maximal period 2^m - 1.
struct LfsrConfig {
  int width = 16;
  /// Tap positions in [1, width], listed MSB-first.
  std::vector<int> taps;
  std::uint64_t initial_state = 1;

  /// Throws std::invalid_argument on a bad width, tap, or a zero/oversized
  /// state.
  void validate() const;
  std::uint64_t mask() const {
    return width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }

  /// Shipped primitive taps for widths 2..24 and 32; throws otherwise.
  static std::vector<int> default_taps(int width);
  static LfsrConfig with_default_taps(int width, std::uint64_t initial_state = 1);
};

struct LfsrStep {
  std::uint64_t state;
  int bit;  ///< output bit before mapping, 0 or 1
};

/// One register shift. Throws std::invalid_argument for the all-zero state.
LfsrStep lfsr_step(std::uint64_t state, const LfsrConfig& cfg);

/// Output bit mapped to a level: 0 -> +1, 1 -> -1.
constexpr Sign lfsr_symbol(int bit) { return bit == 0 ? Sign::plus : Sign::minus; }

/// Steps until the initial state recurs, giving up after `limit` steps
/// (returns 0 then).
std::uint64_t lfsr_period(const LfsrConfig& cfg, std::uint64_t limit);

enum class ClockMode { cyclic_fixed, permute_per_cycle };

std::string_view to_string(ClockMode mode);
ClockMode clock_mode_from_string(std::string_view name);

/// Spread-period clock: the gap between ticks is taken from a finite
/// multiset of K interpulse intervals, one full pass over the multiset per
/// cycle. In cyclic_fixed mode a single seeded permutation is replayed every
/// cycle; in permute_per_cycle mode every cycle gets a fresh permutation.
/// Permutations come from RandomSource(seed, Stream::clock), independent of
/// any data randomness.
struct SpreadClockConfig {
  std::vector<double> intervals{1.0};
  ClockMode mode = ClockMode::permute_per_cycle;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument for an empty set or nonpositive interval.
  void validate() const;
  double mean_interval() const;

  /// K intervals at the centres of K equal bins of
  /// [(1 - alpha) t_c, (1 + alpha) t_c]; the multiset mean is t_c.
  static SpreadClockConfig uniform_spread(double mean_chip, double alpha, int k,
                                          ClockMode mode, std::uint64_t seed);
};

/// Stateful tick source for a SpreadClockConfig.
class SpreadClock {
 public:
  explicit SpreadClock(SpreadClockConfig cfg);

  /// Next interpulse gap.
  double next_gap();

 private:
  void start_cycle();

  SpreadClockConfig cfg_;
  RandomSource rng_;
  std::vector<double> order_;
  std::size_t pos_ = 0;
  bool fixed_drawn_ = false;
};

/// First n tick times; tick k is the sum of the first k gaps, so the ticks
/// are strictly increasing and start at the first gap.
std::vector<double> clock_ticks(const SpreadClockConfig& cfg, std::size_t n);

/// Register clocked by the spread-period clock. The symbol emitted at chip
/// boundary j (boundary 0 is time zero) is held until the next tick. The
/// waveform ends at the last tick not exceeding `duration`.
BinaryWaveform gen_prbs_waveform(const LfsrConfig& lfsr, const SpreadClockConfig& clk,
                                 double duration);

/// Same, but for an exact number of chips.
BinaryWaveform gen_prbs_chips(const LfsrConfig& lfsr, const SpreadClockConfig& clk,
                              std::size_t n_chips);

/// Sample-and-hold of `source` at time zero and at each tick, holding each
/// sample until the next tick; the output ends at the last tick. Throws
/// std::out_of_range if a tick lies beyond the source, std::invalid_argument
/// for non-increasing ticks.
///
/// When the source's empirical acf at the smallest gap exceeds 0.1 the
/// samples are correlated and a warning is appended to `diag`.
BinaryWaveform gen_sampled_hold(const BinaryWaveform& source, std::span<const double> ticks,
                                Diagnostics* diag = nullptr);

/// Sample-and-hold driven by a spread-period clock, ticking until the source
/// ends.
BinaryWaveform gen_sampled_hold(const BinaryWaveform& source, const SpreadClockConfig& clk,
                                Diagnostics* diag = nullptr);

}  // namespace impulsewave
