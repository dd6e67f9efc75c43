// Copyright 2026 The meanbound Authors
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


#include "meanbound/results_io.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace meanbound {

namespace {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote_csv(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

double parse_real(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::runtime_error("read_results_csv: bad number '" + s + "'");
  return v;
}

template <typename Int>
Int parse_int(const std::string& s) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::runtime_error("read_results_csv: bad integer '" + s + "'");
  return v;
}

nlohmann::ordered_json real_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

void write_results(const std::vector<ExperimentRow>& rows, std::ostream& out, ResultFormat format) {
  if (format == ResultFormat::kJson) {
    auto array = nlohmann::ordered_json::array();
    for (const ExperimentRow& r : rows) {
      array.push_back(nlohmann::ordered_json{{"distribution", r.distribution},
                                             {"n", r.n},
                                             {"alpha", real_json(r.alpha)},
                                             {"method", r.method},
                                             {"trials", r.trials},
                                             {"metric", r.metric},
                                             {"value", real_json(r.value)},
                                             {"stderr", real_json(r.standard_error)},
                                             {"seed", r.seed}});
    }
    out << array.dump(2) << '\n';
    return;
  }
  out << kResultColumns << "\r\n";
  for (const ExperimentRow& r : rows) {
    out << quote_csv(r.distribution) << ',' << r.n << ',' << format_real(r.alpha) << ','
        << quote_csv(r.method) << ',' << r.trials << ',' << quote_csv(r.metric) << ','
        << format_real(r.value) << ',' << format_real(r.standard_error) << ',' << r.seed << "\r\n";
  }
}

void write_results(const std::vector<ExperimentRow>& rows, const std::filesystem::path& path,
                   ResultFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_results(rows, out, format);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::vector<std::string> split_csv_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quoted CSV field");
  fields.push_back(std::move(field));
  return fields;
}

std::vector<ExperimentRow> read_results_csv(std::istream& in) {
  std::string line;
  const auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };
  if (!next_line() || line != kResultColumns)
    throw std::runtime_error("read_results_csv: missing or unexpected header");
  std::vector<ExperimentRow> rows;
  while (next_line()) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_record(line);
    if (f.size() != 9) throw std::runtime_error("read_results_csv: expected 9 fields, got " + std::to_string(f.size()));
    rows.push_back({f[0], parse_int<int>(f[1]), parse_real(f[2]), f[3], parse_int<std::int64_t>(f[4]), f[5],
                    parse_real(f[6]), parse_real(f[7]), parse_int<std::uint64_t>(f[8])});
  }
  return rows;
}

std::vector<ExperimentRow> read_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return read_results_csv(in);
}

}  // namespace meanbound
