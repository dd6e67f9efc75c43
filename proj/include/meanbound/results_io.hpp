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


#ifndef MEANBOUND_RESULTS_IO_HPP
#define MEANBOUND_RESULTS_IO_HPP

#include "meanbound/simulation.hpp"

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace meanbound {

enum class ResultFormat { kCsv, kJson };

/// Header and column order of every result file.
inline constexpr std::string_view kResultColumns =
    "distribution,n,alpha,method,trials,metric,value,stderr,seed";

/// Writes rows as RFC-4180 CSV or a JSON array of objects. Reals use 17
/// significant digits so a read-back is exact; NaN is written as "nan" in CSV
/// and null in JSON. Throws std::runtime_error if the file cannot be written.
void write_results(const std::vector<ExperimentRow>& rows, const std::filesystem::path& path,
                   ResultFormat format);
void write_results(const std::vector<ExperimentRow>& rows, std::ostream& out, ResultFormat format);

/// Parses a CSV file produced by write_results.
std::vector<ExperimentRow> read_results_csv(const std::filesystem::path& path);
std::vector<ExperimentRow> read_results_csv(std::istream& in);

/// Splits one CSV record, honouring double-quoted fields with "" escapes.
/// Quoted fields containing line breaks are not supported.
std::vector<std::string> split_csv_record(std::string_view line);

}  // namespace meanbound

#endif  // MEANBOUND_RESULTS_IO_HPP
