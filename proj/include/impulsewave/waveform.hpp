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

#include <cstddef>
#include <span>
#include <vector>

namespace impulsewave {

/// Level of a unit-amplitude binary waveform.
enum class Sign : int { minus = -1, plus = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }

/// Checked conversion from an integer level; anything but +1/-1 throws
/// std::invalid_argument.
Sign sign_from_int(int level);

/// Exact event-based realization of a +/-1 process on [0, duration].
///
/// The waveform starts at `initial_level` and flips at every transition time.
/// Transitions are strictly increasing and lie in the open interval
/// (0, duration). Values are right-continuous: at a transition instant the
/// waveform already holds the level after the flip.
///
/// Instances are immutable after construction and can be shared freely
/// across threads.
class BinaryWaveform {
 public:
  /// Validates all invariants; throws std::invalid_argument on violation.
  BinaryWaveform(Sign initial_level, std::vector<double> transitions, double duration);

  static BinaryWaveform constant(Sign level, double duration) {
    return BinaryWaveform(level, {}, duration);
  }

  Sign initial_level() const { return initial_level_; }
  double duration() const { return duration_; }
  std::span<const double> transitions() const { return transitions_; }
  std::size_t transition_count() const { return transitions_.size(); }

  /// Number of transitions at or before t.
  std::size_t transitions_up_to(double t) const;

  /// Level held on [t_k, t_{k+1}), i.e. just after the k-th transition.
  Sign level_after(std::size_t k) const {
    return (k % 2 == 0) ? flip(initial_level_) : initial_level_;
  }

  /// Right-continuous value at t; throws std::out_of_range outside
  /// [0, duration].
  Sign value_at(double t) const;

  /// Restriction to [0, new_duration]; transitions at or after the new end
  /// are dropped.
  BinaryWaveform truncated(double new_duration) const;

  bool operator==(const BinaryWaveform&) const = default;

 private:
  Sign initial_level_;
  std::vector<double> transitions_;
  double duration_;
};

/// Free-function form of BinaryWaveform::value_at.
inline Sign waveform_value_at(const BinaryWaveform& w, double t) { return w.value_at(t); }

}  // namespace impulsewave
