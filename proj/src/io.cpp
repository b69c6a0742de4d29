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


#include "impulsewave/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace impulsewave {

namespace {

constexpr const char* kWaveformMagic = "impulsewave-v1";

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& text, const std::string& what) {
  const std::string s = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + " '" + text + "' as a number");
  }
  if (used != s.size()) {
    throw std::invalid_argument("trailing characters in " + what + " '" + text + "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::string s = trim(text);
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    base = 16;
    s = s.substr(2);
  } else if (s.size() > 2 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) {
    base = 2;
    s = s.substr(2);
  }
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("cannot parse " + what + " '" + text + "' as an unsigned integer");
  }
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  const std::string s = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("cannot parse " + what + " '" + text + "' as an integer");
  }
  return v;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "' for reading");
  return in;
}

void write_comments(std::ostream& out, const HeaderComments& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
}

}  // namespace

void write_waveform(std::ostream& out, const BinaryWaveform& w, const HeaderComments& comments) {
  out << kWaveformMagic << ' ' << to_int(w.initial_level()) << ' '
      << std::setprecision(17) << w.duration() << '\n';
  write_comments(out, comments);
  for (double t : w.transitions()) out << t << '\n';
  if (!out) throw std::runtime_error("failed writing waveform");
}

void write_waveform_file(const std::string& path, const BinaryWaveform& w,
                         const HeaderComments& comments) {
  auto out = open_out(path);
  write_waveform(out, w, comments);
}

BinaryWaveform read_waveform(std::istream& in, HeaderComments* comments) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty waveform file");
  std::istringstream header(line);
  std::string magic, level_text, duration_text, extra;
  header >> magic >> level_text >> duration_text;
  if (magic != kWaveformMagic || duration_text.empty() || (header >> extra)) {
    throw std::invalid_argument("bad waveform header '" + line + "'");
  }
  const int level = parse_int(level_text[0] == '+' ? level_text.substr(1) : level_text,
                              "initial level");
  if (level != 1 && level != -1) throw std::invalid_argument("initial level must be +1 or -1");
  const double duration = parse_double(duration_text, "duration");

  std::vector<double> transitions;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = trim(line);
    if (s.empty()) continue;
    if (s[0] == '#') {
      if (comments != nullptr) comments->push_back(trim(s.substr(1)));
      continue;
    }
    transitions.push_back(parse_double(s, "transition on line " + std::to_string(line_no)));
  }
  return BinaryWaveform(sign_from_int(level), std::move(transitions), duration);
}

BinaryWaveform read_waveform_file(const std::string& path, HeaderComments* comments) {
  auto in = open_in(path);
  return read_waveform(in, comments);
}

Eigen::VectorXd CsvTable::column(const std::string& name) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] != name) continue;
    Eigen::VectorXd v(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) v[static_cast<Eigen::Index>(r)] = rows[r][c];
    return v;
  }
  throw std::invalid_argument("CSV has no column '" + name + "'");
}

void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<Eigen::VectorXd>& data, const HeaderComments& comments) {
  if (columns.size() != data.size() || columns.empty()) {
    throw std::invalid_argument("CSV needs one data column per header name");
  }
  const Eigen::Index n = data.front().size();
  for (const auto& col : data) {
    if (col.size() != n) throw std::invalid_argument("CSV columns differ in length");
  }
  write_comments(out, comments);
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n' << std::setprecision(15);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < data.size(); ++c) out << (c ? "," : "") << data[c][r];
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed writing CSV");
}

void write_csv_file(const std::string& path, const std::vector<std::string>& columns,
                    const std::vector<Eigen::VectorXd>& data, const HeaderComments& comments) {
  auto out = open_out(path);
  write_csv(out, columns, data, comments);
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = trim(line);
    if (s.empty()) continue;
    if (s[0] == '#') {
      table.comments.push_back(trim(s.substr(1)));
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(s);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (table.columns.empty()) {
      table.columns = std::move(fields);
      continue;
    }
    if (fields.size() != table.columns.size()) {
      throw std::invalid_argument("CSV line " + std::to_string(line_no) + " has " +
                                  std::to_string(fields.size()) + " fields, expected " +
                                  std::to_string(table.columns.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_double(f, "CSV field on line " + std::to_string(line_no)));
    table.rows.push_back(std::move(row));
  }
  if (table.columns.empty()) throw std::invalid_argument("CSV has no header row");
  return table;
}

CsvTable read_csv_file(const std::string& path) {
  auto in = open_in(path);
  return read_csv(in);
}

void write_acf_csv(std::ostream& out, const AcfCurve& c, const HeaderComments& comments) {
  write_csv(out, {"lag", "value"}, {c.lags, c.values}, comments);
}

void write_psd_csv(std::ostream& out, const PsdCurve& c, const HeaderComments& comments) {
  HeaderComments all = comments;
  if (!c.normalization.empty()) all.push_back("normalization = " + c.normalization);
  write_csv(out, {"omega", "value"}, {c.omegas, c.values}, all);
}

void write_interferogram_csv(std::ostream& out, const Interferogram& c,
                             const HeaderComments& comments) {
  HeaderComments all = comments;
  all.push_back("crossings = " + std::to_string(c.crossings));
  write_csv(out, {"lag", "value", "ci95"}, {c.lags, c.values, c.ci95}, all);
}

SpreadClockConfig PrbsConfig::clock() const {
  return SpreadClockConfig::uniform_spread(t_c, alpha, k, mode, clock_seed);
}

std::vector<std::string> PrbsConfig::to_lines() const {
  std::ostringstream taps;
  for (std::size_t i = 0; i < lfsr.taps.size(); ++i) taps << (i ? "," : "") << lfsr.taps[i];
  auto num = [](double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
  };
  return {
      "lfsr.width = " + std::to_string(lfsr.width),
      "lfsr.taps = " + taps.str(),
      "lfsr.seed_state = " + std::to_string(lfsr.initial_state),
      "clock.t_c = " + num(t_c),
      "clock.alpha = " + num(alpha),
      "clock.k = " + std::to_string(k),
      "clock.mode = " + std::string(to_string(mode)),
      "clock.seed = " + std::to_string(clock_seed),
  };
}

void set_prbs_key(PrbsConfig& cfg, const std::string& key, const std::string& value,
                  bool* taps_given) {
  if (key == "lfsr.width") {
    cfg.lfsr.width = parse_int(value, key);
  } else if (key == "lfsr.taps") {
    std::vector<int> taps;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) taps.push_back(parse_int(item, key));
    cfg.lfsr.taps = std::move(taps);
    if (taps_given != nullptr) *taps_given = true;
  } else if (key == "lfsr.seed_state") {
    cfg.lfsr.initial_state = parse_u64(value, key);
  } else if (key == "clock.t_c") {
    cfg.t_c = parse_double(value, key);
  } else if (key == "clock.alpha") {
    cfg.alpha = parse_double(value, key);
  } else if (key == "clock.k") {
    cfg.k = parse_int(value, key);
  } else if (key == "clock.mode") {
    cfg.mode = clock_mode_from_string(trim(value));
  } else if (key == "clock.seed") {
    cfg.clock_seed = parse_u64(value, key);
  } else {
    throw std::invalid_argument("unknown PRBS config key '" + key + "'");
  }
}

PrbsConfig parse_prbs_config(std::istream& in, std::vector<std::string>* keys) {
  PrbsConfig cfg;
  bool taps_given = false;
  bool width_given = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) + " is not key = value");
    }
    const std::string key = trim(s.substr(0, eq));
    if (key == "lfsr.width") width_given = true;
    if (keys != nullptr) keys->push_back(key);
    set_prbs_key(cfg, key, trim(s.substr(eq + 1)), &taps_given);
  }
  if (width_given && !taps_given) cfg.lfsr.taps = LfsrConfig::default_taps(cfg.lfsr.width);
  cfg.lfsr.validate();
  cfg.clock().validate();
  return cfg;
}

PrbsConfig read_prbs_config_file(const std::string& path, std::vector<std::string>* keys) {
  auto in = open_in(path);
  return parse_prbs_config(in, keys);
}

void write_prbs_config(std::ostream& out, const PrbsConfig& cfg) {
  for (const auto& l : cfg.to_lines()) out << l << '\n';
}

}  // namespace impulsewave
