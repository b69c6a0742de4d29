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

#include "impulsewave/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace impulsewave {

Sign sign_from_int(int level) {
  if (level == 1) return Sign::plus;
  if (level == -1) return Sign::minus;
  throw std::invalid_argument("binary level must be +1 or -1, got " + std::to_string(level));
}

BinaryWaveform::BinaryWaveform(Sign initial_level, std::vector<double> transitions,
                               double duration)
    : initial_level_(initial_level), transitions_(std::move(transitions)), duration_(duration) {
  if (initial_level_ != Sign::plus && initial_level_ != Sign::minus) {
    throw std::invalid_argument("initial level must be +1 or -1");
  }
  if (!std::isfinite(duration_) || duration_ <= 0.0) {
    throw std::invalid_argument("waveform duration must be positive and finite");
  }
  double prev = 0.0;
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const double t = transitions_[i];
    if (!(t > prev)) {
      throw std::invalid_argument("transition times must be strictly increasing and > 0 (index " +
                                  std::to_string(i) + ")");
    }
    prev = t;
  }
  if (!transitions_.empty() && !(transitions_.back() < duration_)) {
    throw std::invalid_argument("transition times must lie before the waveform end");
  }
}

std::size_t BinaryWaveform::transitions_up_to(double t) const {
  return static_cast<std::size_t>(
      std::upper_bound(transitions_.begin(), transitions_.end(), t) - transitions_.begin());
}

Sign BinaryWaveform::value_at(double t) const {
  if (!(t >= 0.0 && t <= duration_)) {
    throw std::out_of_range("time " + std::to_string(t) + " outside waveform span [0, " +
                            std::to_string(duration_) + "]");
  }
  return transitions_up_to(t) % 2 == 0 ? initial_level_ : flip(initial_level_);
}

BinaryWaveform BinaryWaveform::truncated(double new_duration) const {
  if (!(new_duration > 0.0 && new_duration <= duration_)) {
    throw std::invalid_argument("truncation point must lie in (0, duration]");
  }
  const auto end = std::lower_bound(transitions_.begin(), transitions_.end(), new_duration);
  return BinaryWaveform(initial_level_, std::vector<double>(transitions_.begin(), end),
                        new_duration);
}

}  // namespace impulsewave
