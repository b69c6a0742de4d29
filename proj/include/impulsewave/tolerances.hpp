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
/// Pass/fail thresholds for the verification suites. The CLI `verify`
/// command and the acceptance tests both read this table, so a change here
/// moves both at once; bump kToleranceTableVersion when editing.

namespace impulsewave::tolerances {

inline constexpr int kToleranceTableVersion = 1;

/// Uniform-modulated random-chip acf vs the model function, sup over lags.
inline constexpr double kModelAcfSup = 0.02;
/// Spread-clock PRBS acf vs the model function, sup over lags.
inline constexpr double kPrbsAcfSup = 0.02;
/// Cross-correlation peak of two PRBS replicas with different clock seeds.
inline constexpr double kReplicaXcorrPeak = 0.02;
inline constexpr double kTelegraphAcfSup = 0.01;
/// Relative rms error of a psd estimate against its closed form.
inline constexpr double kPsdRelRms = 0.05;
inline constexpr double kPsdUnitPower = 0.02;
inline constexpr double kArcsineAcfSup = 0.02;
/// Relative error of the measured crossing rate of a hard-limited path.
inline constexpr double kGaussianRateRel = 0.02;
inline constexpr double kBernoulliInterferogramSup = 0.05;
/// Minimum fraction of lags whose analytic mean lies inside the 95% band.
inline constexpr double kInterferogramCoverage = 0.90;
inline constexpr double kPsdLimitRel = 0.05;
inline constexpr double kPsdFloor = -1e-12;
inline constexpr double kProductRateAbs = 0.05;
inline constexpr double kProductAcfSup = 0.02;
inline constexpr double kClosedFormAbs = 1e-9;
inline constexpr double kOracleAbs = 1e-3;
/// Slack below the tangent line 1 - 2 n0 |tau| allowed for empirical acfs.
inline constexpr double kTangentSlack = 0.02;
/// Relative agreement of a one-sided slope at 0 with -2 n0.
inline constexpr double kSlopeRel = 1e-6;

}  // namespace impulsewave::tolerances
