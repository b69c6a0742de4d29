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
/// Command-line front end. tools/impulsewave.cpp is a thin wrapper around
/// cli::run so the commands can be driven in-process by tests.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "impulsewave/io.hpp"
#include "impulsewave/verify.hpp"

namespace impulsewave::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Fully resolved settings of one invocation.
struct RunConfig {
  std::string command;

  /// telegraph, gaussian, bernoulli, prbs, sampled-hold or product.
  std::string process = "bernoulli";
  double rate = 1.0;
  std::string spectrum = "gaussian";
  int oversample = 32;
  std::string chip = "uniform";
  double t_c = 1.0;
  double alpha = 0.0;
  double duration = 0.0;
  /// prbs only: chip count instead of a duration.
  std::uint64_t chips = 0;
  std::optional<std::uint64_t> seed;
  PrbsConfig prbs;

  std::vector<std::string> inputs;
  /// Empty or "-" writes to standard output.
  std::string output;

  double lag_min = 0.0;
  double lag_max = 2.5;
  int lag_count = 251;
  double omega_max = 20.0;
  /// Zero asks psd for the estimator's native bins.
  int omega_count = 201;
  double segment_length = 64.0;
  double sample_step = 0.0;
  long max_crossings = 10000;
  /// Nonzero switches acf to the dense-grid reference estimator.
  double oracle_step = 0.0;

  std::string curve;
  std::string compare;
  double tolerance = 0.02;

  std::string suite = "all";
  VerifyOptions verify;

  int figure = 0;
  std::string outdir = ".";

  /// Range checks for the selected command; throws std::invalid_argument.
  void validate() const;
  /// `key = value` lines recorded as comments in every output file.
  std::vector<std::string> header_lines() const;
};

/// Analytic curve names accepted by the `analytic` command.
const std::vector<std::string>& analytic_curve_names();

/// True for curves over angular frequency (CSV column `omega`).
bool analytic_curve_is_spectral(const std::string& curve);

/// Writes the data files of one figure into `outdir` and returns their
/// paths. Figures 3 and 8 are block diagrams and are refused with
/// std::invalid_argument, as is any other unknown id.
std::vector<std::string> reproduce_figure(int figure, const std::string& outdir,
                                          std::uint64_t seed);

/// Parses and executes one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace impulsewave::cli
