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

#include "meanbound/methods.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace meanbound {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 10> kNames = {{
    {Method::kOursExact, "ours-exact"},
    {Method::kOursMonteCarlo, "ours-mc"},
    {Method::kOurs, "ours"},
    {Method::kHoeffding, "hoeffding"},
    {Method::kHoeffdingTightened, "hoeffding-tightened"},
    {Method::kMaurerPontil, "maurer-pontil"},
    {Method::kAnderson, "anderson"},
    {Method::kStudentT, "student-t"},
    {Method::kPercentileBootstrap, "percentile-bootstrap"},
    {Method::kBca, "bca"},
}};

constexpr std::array<Method, 10> kAll = {
    Method::kOursExact,  Method::kOursMonteCarlo,      Method::kOurs,
    Method::kHoeffding,  Method::kHoeffdingTightened,  Method::kMaurerPontil,
    Method::kAnderson,   Method::kStudentT,            Method::kPercentileBootstrap,
    Method::kBca};

BoundResult upper(Method method, const VectorRef& x, double alpha, const MethodOptions& options) {
  BoundResult result;
  result.method = method;
  result.alpha = alpha;
  result.n = x.size();
  double raw = 0.0;
  switch (method) {
    case Method::kOurs:
    case Method::kOursExact:
    case Method::kOursMonteCarlo: {
      BoundOptions bound = options.bound;
      if (method == Method::kOursExact)
        bound.estimator = Estimator::kExact;
      else if (method == Method::kOursMonteCarlo)
        bound.estimator = Estimator::kMonteCarlo;
      else
        bound.estimator = x.size() <= options.exact_max_n ? Estimator::kExact : Estimator::kMonteCarlo;
      BoundResult ours = upper_bound(x, alpha, bound);
      ours.method = method;
      return ours;
    }
    case Method::kHoeffding:
      raw = hoeffding_upper(x, alpha);
      break;
    case Method::kHoeffdingTightened:
      raw = hoeffding_upper_tightened(x, alpha);
      break;
    case Method::kMaurerPontil:
      raw = maurer_pontil_upper(x, alpha);
      break;
    case Method::kAnderson:
      raw = anderson_upper(x, alpha);
      break;
    case Method::kStudentT:
      raw = student_t_upper(x, alpha);
      break;
    case Method::kPercentileBootstrap:
      raw = percentile_bootstrap_upper(x, alpha, options.bootstrap);
      result.diagnostics.bootstrap_resamples = options.bootstrap.resamples;
      result.diagnostics.seed = options.bootstrap.seed;
      break;
    case Method::kBca: {
      const BcaResult bca = bca_upper(x, alpha, options.bootstrap);
      raw = bca.value;
      result.diagnostics.fallback = bca.fallback;
      result.diagnostics.bootstrap_resamples = options.bootstrap.resamples;
      result.diagnostics.seed = options.bootstrap.seed;
      break;
    }
  }
  result.diagnostics.raw_value = raw;
  result.value = std::clamp(raw, 0.0, 1.0);
  return result;
}

}  // namespace

std::string_view method_name(Method m) {
  for (const auto& [method, name] : kNames)
    if (method == m) return name;
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (const auto& [method, known] : kNames)
    if (known == name) return method;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::span<const Method> all_methods() { return kAll; }

bool has_guaranteed_coverage(Method m) {
  switch (m) {
    case Method::kHoeffding:
    case Method::kHoeffdingTightened:
    case Method::kMaurerPontil:
    case Method::kAnderson:
      return true;
    default:
      return false;
  }
}

BoundResult compute_bound(Method method, const VectorRef& x, double alpha,
                          const MethodOptions& options, Side side) {
  if (side == Side::kUpper) return upper(method, x, alpha, options);
  const Vector reflected = Vector::Ones(x.size()) - x;
  BoundResult result = upper(method, reflected, alpha, options);
  const double raw = 1.0 - result.diagnostics.raw_value.value_or(result.value);
  result.diagnostics.raw_value = raw;
  result.value = std::clamp(raw, 0.0, 1.0);
  return result;
}

}  // namespace meanbound
