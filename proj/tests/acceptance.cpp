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


// Runs every verification suite once and prints one PASS/FAIL line per
// acceptance criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "impulsewave/verify.hpp"

using namespace impulsewave;

int main() {
  const std::vector<std::pair<std::string, std::string>> criteria = {
      {"eq20", "uniform random-chip acf matches the model function"},
      {"prbs", "spread-clock PRBS acf matches the model function"},
      {"telegraph", "telegraph acf and Lorentzian psd"},
      {"arcsine", "hard-limited Gaussian arcsine law and crossing rate"},
      {"interferogram", "interferogram limit and Gaussian band coverage"},
      {"psd-limit", "psd low-frequency limit and nonnegativity"},
      {"product", "product process demodulation, rate and factorization"},
      {"raised-cosine", "raised-cosine closed form and bound ordering"},
      {"model-conditions", "model function realizability conditions"},
      {"oracle", "exact acf agrees with the dense-grid oracle"},
      {"lfsr", "LFSR period, balance and replay"},
  };

  const VerifyOptions options;
  std::vector<bool> verdicts;
  std::vector<CheckResult> tangents;
  for (const auto& [suite, label] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = run_suite(suite, options);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = true;
    std::size_t counted = 0;
    for (const auto& r : results) {
      print_check(std::cout, r);
      if (r.tangent) {
        tangents.push_back(r);
      } else {
        ok = ok && r.passed;
        ++counted;
      }
    }
    verdicts.push_back(ok && counted > 0);
    std::printf("  (%s: %.1f s)\n", suite.c_str(), secs);
  }

  bool tangent_ok = !tangents.empty();
  for (const auto& r : tangents) tangent_ok = tangent_ok && r.passed;
  verdicts.push_back(tangent_ok);

  std::cout << '\n';
  bool all = true;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const std::string label = i < criteria.size()
                                  ? criteria[i].second
                                  : "tangent bound on every empirical acf (" +
                                        std::to_string(tangents.size()) + " curves)";
    std::printf("%s  criterion %zu: %s\n", verdicts[i] ? "PASS" : "FAIL", i + 1, label.c_str());
    all = all && verdicts[i];
  }
  return all ? 0 : 1;
}
