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

#include <cmath>

namespace impulsewave::detail {

/// sin(x)/x with the removable singularity filled in.
inline double sinc(double x) {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

/// (1 - sin(x)/x) / x^2 without cancellation near zero.
inline double one_minus_sinc_over_sq(double x) {
  const double x2 = x * x;
  if (std::abs(x) < 1e-2) return 1.0 / 6.0 - x2 / 120.0 + x2 * x2 / 5040.0;
  return (1.0 - std::sin(x) / x) / x2;
}

}  // namespace impulsewave::detail
