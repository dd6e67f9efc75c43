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

#include "meanbound/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace meanbound {

namespace {

void check_sorted_unit(const Vector& v, const char* what) {
  if (v.size() == 0) throw std::invalid_argument(std::string(what) + ": empty vector");
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!(v[i] >= 0.0 && v[i] <= 1.0))
      throw std::invalid_argument(std::string(what) + ": value outside [0, 1] at index " +
                                  std::to_string(i));
    if (i > 0 && v[i] < v[i - 1])
      throw std::invalid_argument(std::string(what) + ": values not sorted ascending");
  }
}

}  // namespace

OrderedSample::OrderedSample(Vector values) : values_(std::move(values)) {
  check_sorted_unit(values_, "OrderedSample");
}

SortedUniformVector::SortedUniformVector(Vector values) : values_(std::move(values)) {
  check_sorted_unit(values_, "SortedUniformVector");
}

ConfidenceSpec::ConfidenceSpec(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("ConfidenceSpec: alpha must lie in [0, 1]");
}

OrderedSample order_statistics(const VectorRef& x) {
  if (x.size() == 0) throw std::invalid_argument("order_statistics: empty sample");
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0 && x[i] <= 1.0))
      throw std::invalid_argument(
          "order_statistics: value outside [0, 1] (rescale the data first)");
  }
  Vector sorted = x;
  std::sort(sorted.begin(), sorted.end());
  return OrderedSample(std::move(sorted));
}

OrderedSample order_statistics(std::span<const double> x) {
  return order_statistics(Eigen::Map<const Vector>(x.data(), static_cast<Eigen::Index>(x.size())));
}

Spacings spacings(const OrderedSample& z) {
  const Eigen::Index n = z.size();
  Vector s(n);
  s.head(n - 1) = z.values().tail(n - 1) - z.values().head(n - 1);
  s[n - 1] = 1.0 - z[n - 1];
  return {std::move(s)};
}

double induced_mean(const OrderedSample& z, const SortedUniformVector& u) {
  if (z.size() != u.size()) throw std::invalid_argument("induced_mean: length mismatch");
  return 1.0 - u.values().dot(spacings(z).values);
}

double induced_mean_horizontal(const OrderedSample& z, const SortedUniformVector& u) {
  if (z.size() != u.size())
    throw std::invalid_argument("induced_mean_horizontal: length mismatch");
  const Eigen::Index n = z.size();
  double sum = 0.0;
  double previous = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    sum += z[i] * (u[i] - previous);
    previous = u[i];
  }
  return sum + (1.0 - previous);
}

double conservative_cdf(const OrderedSample& z, const SortedUniformVector& u, double t) {
  if (z.size() != u.size()) throw std::invalid_argument("conservative_cdf: length mismatch");
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("conservative_cdf: t outside [0, 1]");
  if (t >= 1.0) return 1.0;
  // Last i with z_i <= t; ties resolve to the rightmost step (right-continuity).
  const auto& zv = z.values();
  const auto it = std::upper_bound(zv.begin(), zv.end(), t);
  const auto count = static_cast<Eigen::Index>(it - zv.begin());
  return count == 0 ? 0.0 : u[count - 1];
}

std::size_t quantile_index(double level, std::size_t count) {
  const double target = level * static_cast<double>(count);
  const double nearest = std::round(target);
  const double snapped =
      std::abs(target - nearest) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, target)
          ? nearest
          : std::ceil(target);
  const double clamped = std::clamp(snapped, 1.0, static_cast<double>(count));
  return static_cast<std::size_t>(clamped);
}

double empirical_quantile(std::vector<double> values, double level) {
  if (values.empty()) throw std::invalid_argument("empirical_quantile: empty vector");
  if (!(level > 0.0 && level <= 1.0))
    throw std::invalid_argument("empirical_quantile: level must lie in (0, 1]");
  const std::size_t k = quantile_index(level, values.size()) - 1;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k), values.end());
  return values[k];
}

}  // namespace meanbound
