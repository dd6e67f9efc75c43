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


#ifndef MEANBOUND_TOOLS_CLI_HPP
#define MEANBOUND_TOOLS_CLI_HPP

#include "meanbound/core.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace meanbound::cli {

/// Affine map between [lo, hi] and [0, 1].
class RescaleSpec {
 public:
  RescaleSpec(double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

  /// Throws std::invalid_argument if x lies outside [lo, hi].
  double to_unit(double x) const;
  double from_unit(double b) const noexcept { return lo_ + (hi_ - lo_) * b; }

 private:
  double lo_;
  double hi_;
};

/// Reads one number per line, or field `column` (1-based) of each CSV record.
/// Blank lines are skipped; anything unparseable, NaN or infinite throws.
std::vector<double> read_data(std::istream& in, std::optional<int> column = std::nullopt,
                              bool skip_header = false);
std::vector<double> read_data(const std::filesystem::path& path, std::optional<int> column = std::nullopt,
                              bool skip_header = false);

/// Formats with 10 significant digits.
std::string format_number(double v);

/// Runs the command line; returns the process exit code. Errors are reported
/// as a single "error: <kind>: <message>" line on err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace meanbound::cli

#endif  // MEANBOUND_TOOLS_CLI_HPP
