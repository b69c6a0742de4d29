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
#include <random>

namespace impulsewave {

/// Well-known sub-stream identifiers so that independent random mechanisms
/// (chip signs, chip durations, clock permutations, ...) can be reseeded
/// separately.
enum class Stream : std::uint64_t {
  data = 1,
  chip = 2,
  clock = 3,
  gaussian = 4,
  telegraph = 5,
};

/// Seeded source of randomness.
///
/// The pair (seed, stream_id) fully determines the draw sequence. Distinct
/// stream ids give statistically independent sequences; derive them with
/// substream() before handing work to other threads. A RandomSource is
/// single-owner and must not be shared between threads.
class RandomSource {
 public:
  using engine_type = std::mt19937_64;

  explicit RandomSource(std::uint64_t seed, std::uint64_t stream_id = 0);
  RandomSource(std::uint64_t seed, Stream stream)
      : RandomSource(seed, static_cast<std::uint64_t>(stream)) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Independent child stream keyed by `child`.
  RandomSource substream(std::uint64_t child) const;
  RandomSource substream(Stream child) const {
    return substream(static_cast<std::uint64_t>(child));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Exponential with the given mean.
  double exponential(double mean);

  double normal() { return normal_(engine_); }

  /// Equiprobable +1 / -1.
  int coin() { return (engine_() >> 63) != 0 ? -1 : 1; }

  engine_type& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  engine_type engine_;
  std::normal_distribution<double> normal_;
};

}  // namespace impulsewave
