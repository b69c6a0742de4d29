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
/// Text formats: the waveform file, curve CSVs and the PRBS key=value config.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "impulsewave/analysis.hpp"
#include "impulsewave/prbs.hpp"
#include "impulsewave/waveform.hpp"

namespace impulsewave {

/// Free-form `# key = value` lines written ahead of the data.
using HeaderComments = std::vector<std::string>;

/// Waveform file: a line `impulsewave-v1 <initial_level> <duration>`, then
/// optional `#` comment lines, then one transition time per line with 17
/// significant digits so that a round trip is bit-exact.
void write_waveform(std::ostream& out, const BinaryWaveform& w, const HeaderComments& comments = {});
void write_waveform_file(const std::string& path, const BinaryWaveform& w,
                         const HeaderComments& comments = {});

/// Throws std::invalid_argument on a malformed file (bad header, unparsable
/// line, or transitions violating the waveform invariants).
BinaryWaveform read_waveform(std::istream& in, HeaderComments* comments = nullptr);
BinaryWaveform read_waveform_file(const std::string& path, HeaderComments* comments = nullptr);

/// A parsed curve CSV. `columns` holds the header names in order.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  HeaderComments comments;

  /// Column by name; throws std::invalid_argument if absent.
  Eigen::VectorXd column(const std::string& name) const;
};

/// Writes `# ` comment lines, the header row and the data with 15
/// significant digits. All columns must have equal length.
void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<Eigen::VectorXd>& data, const HeaderComments& comments = {});
void write_csv_file(const std::string& path, const std::vector<std::string>& columns,
                    const std::vector<Eigen::VectorXd>& data, const HeaderComments& comments = {});

CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

/// `lag,value`
void write_acf_csv(std::ostream& out, const AcfCurve& c, const HeaderComments& comments = {});
/// `omega,value`
void write_psd_csv(std::ostream& out, const PsdCurve& c, const HeaderComments& comments = {});
/// `lag,value,ci95`
void write_interferogram_csv(std::ostream& out, const Interferogram& c,
                             const HeaderComments& comments = {});

/// Resolved PRBS settings as read from a key=value file.
struct PrbsConfig {
  LfsrConfig lfsr = LfsrConfig::with_default_taps(16, 1);
  double t_c = 1.0;
  double alpha = 0.5;
  int k = 64;
  ClockMode mode = ClockMode::permute_per_cycle;
  std::uint64_t clock_seed = 0;

  SpreadClockConfig clock() const;
  /// Lines `key = value` for every key, as written by write_prbs_config.
  std::vector<std::string> to_lines() const;
};

/// Parses `key = value` lines (blank lines and `#` comments ignored) with the
/// keys lfsr.width, lfsr.taps (comma list), lfsr.seed_state, clock.t_c,
/// clock.alpha, clock.k, clock.mode and clock.seed. Missing keys keep their
/// defaults; a width without taps picks the shipped taps for that width.
/// Unknown keys and bad values throw std::invalid_argument. The keys found
/// are appended to `keys` when given.
PrbsConfig parse_prbs_config(std::istream& in, std::vector<std::string>* keys = nullptr);
PrbsConfig read_prbs_config_file(const std::string& path,
                                  std::vector<std::string>* keys = nullptr);

/// Applies one key to a config; the shared path for files and CLI flags.
void set_prbs_key(PrbsConfig& cfg, const std::string& key, const std::string& value,
                  bool* taps_given = nullptr);

void write_prbs_config(std::ostream& out, const PrbsConfig& cfg);

}  // namespace impulsewave
