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
/// Estimator-versus-closed-form check suites behind `impulsewave verify`.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace impulsewave {

struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  /// How measured relates to tolerance on success: "<", "<=" or ">=".
  std::string relation = "<";
  bool passed = false;
  /// Tangent-bound checks attached to an empirical acf.
  bool tangent = false;
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  /// Modulation spreads for the uniform-chip suites.
  std::vector<double> alphas{0.25, 0.5, 1.0};
  /// Chips per realization for the uniform-chip suites.
  double chips = 1e6;
};

/// Suite names accepted by run_suite, including "tangent" and "all".
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& options);

/// One line per check: status, suite/name, measured value and threshold.
void print_check(std::ostream& out, const CheckResult& r);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace impulsewave
