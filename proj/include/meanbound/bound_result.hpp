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

#ifndef MEANBOUND_BOUND_RESULT_HPP
#define MEANBOUND_BOUND_RESULT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace meanbound {

enum class Method {
  kOursExact,
  kOursMonteCarlo,
  kOurs,  // exact for small n, Monte Carlo above
  kHoeffding,
  kHoeffdingTightened,
  kMaurerPontil,
  kAnderson,
  kStudentT,
  kPercentileBootstrap,
  kBca,
};

std::string_view method_name(Method m);

/// Parses names such as "ours-exact", "hoeffding", "bca". Throws
/// std::invalid_argument for unknown names.
Method parse_method(std::string_view name);

std::span<const Method> all_methods();

/// Methods whose coverage is proven (ours is conjectured and tested).
bool has_guaranteed_coverage(Method m);

struct Diagnostics {
  std::optional<std::int64_t> mc_samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> mc_std_error;
  std::optional<double> raw_value;  // before clamping to [0, 1]
  std::optional<int> bootstrap_resamples;
  std::optional<int> iterations;
  bool fallback = false;  // BCa reverted to the percentile bootstrap
};

struct BoundResult {
  double value = 0.0;  // clamped to [0, 1]
  Method method = Method::kOursExact;
  double alpha = 0.0;
  std::int64_t n = 0;
  Diagnostics diagnostics;
};

}  // namespace meanbound

#endif  // MEANBOUND_BOUND_RESULT_HPP
