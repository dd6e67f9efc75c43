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

#ifndef MEANBOUND_CORE_HPP
#define MEANBOUND_CORE_HPP

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <vector>

namespace meanbound {

using Vector = Eigen::VectorXd;
using VectorRef = Eigen::Ref<const Vector>;

/// Ascending sample z_1 <= ... <= z_n inside [0, 1].
///
/// The sentinel z_{n+1} = 1 is implicit and never stored.
class OrderedSample {
 public:
  /// Throws std::invalid_argument unless values are sorted and inside [0, 1].
  explicit OrderedSample(Vector values);

  const Vector& values() const noexcept { return values_; }
  Eigen::Index size() const noexcept { return values_.size(); }
  double operator[](Eigen::Index i) const { return values_[i]; }
  double smallest() const { return values_[0]; }

 private:
  Vector values_;
};

/// Sorted draws 0 <= u_1 <= ... <= u_n <= 1, typically uniform order statistics.
class SortedUniformVector {
 public:
  explicit SortedUniformVector(Vector values);

  const Vector& values() const noexcept { return values_; }
  Eigen::Index size() const noexcept { return values_.size(); }
  double operator[](Eigen::Index i) const { return values_[i]; }

 private:
  Vector values_;
};

/// s_i = z_{i+1} - z_i with z_{n+1} = 1. Non-negative, sums to 1 - z_1.
struct Spacings {
  Vector values;
};

/// Failure rate alpha in [0, 1]; the confidence level is 1 - alpha.
class ConfidenceSpec {
 public:
  explicit ConfidenceSpec(double alpha);

  double alpha() const noexcept { return alpha_; }
  double level() const noexcept { return 1.0 - alpha_; }

 private:
  double alpha_;
};

/// Sorts x ascending. Throws if x is empty or any value lies outside [0, 1]
/// (callers holding data on another interval must rescale first).
OrderedSample order_statistics(const VectorRef& x);
OrderedSample order_statistics(std::span<const double> x);

Spacings spacings(const OrderedSample& z);

/// Mean of the conservative completion of (z, u): 1 - sum u_i (z_{i+1} - z_i).
double induced_mean(const OrderedSample& z, const SortedUniformVector& u);

/// The same mean summed as horizontal strips: sum_{i=1}^{n+1} z_i (u_i - u_{i-1})
/// with u_0 = 0, u_{n+1} = 1, z_{n+1} = 1.
double induced_mean_horizontal(const OrderedSample& z, const SortedUniformVector& u);

/// Stair-step CDF through the pairs (z_i, u_i) that puts each step's mass as
/// far right as possible. Right-continuous; equals 1 for t >= 1.
double conservative_cdf(const OrderedSample& z, const SortedUniformVector& u, double t);

/// One-based order-statistic index ceil(level * count), clamped to [1, count].
///
/// Products that land within a few ulps of an integer are snapped to it so
/// that e.g. 0.9 * 10 selects index 9.
std::size_t quantile_index(double level, std::size_t count);

/// Sorts values and returns the element at quantile_index(level, size).
/// Requires a non-empty input and level in (0, 1].
double empirical_quantile(std::vector<double> values, double level);

}  // namespace meanbound

#endif  // MEANBOUND_CORE_HPP
