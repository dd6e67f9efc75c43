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

#ifndef MEANBOUND_BOUND_HPP
#define MEANBOUND_BOUND_HPP

#include "meanbound/bound_result.hpp"
#include "meanbound/core.hpp"

#include <cstdint>
#include <vector>

namespace meanbound {

// The bound m_alpha(z) is the (1 - alpha)-quantile of the induced mean
// m(z, U) over uniform order statistics U. Two estimators are provided:
//
//  * Monte Carlo: draw l sorted uniform vectors, take the empirical quantile
//    of 1 - s.u (s = spacings). Deterministic given the seed.
//  * Exact: in spacing coordinates v_k = u_k - u_{k-1} the uniform order
//    statistics are uniform on the unit simplex and u.s = sum_k v_k (1 - z_k).
//    The fraction of the simplex above a cut is a divided difference of a
//    truncated power, evaluated by a recursion whose every step is a convex
//    combination (Varsi's algorithm). Bisection on the mean then gives the
//    bound. Repeated sample values need no special casing.

struct McConfig {
  std::int64_t samples = 10000;  // l
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: all hardware threads; output never depends on it
};

enum class Estimator { kExact, kMonteCarlo };

struct BoundOptions {
  Estimator estimator = Estimator::kExact;
  McConfig mc;
  double tolerance = 1e-10;
  int max_iterations = 200;
};

/// Algorithm 1. Diagnostics carry l, the seed and an estimated Monte Carlo
/// standard error of the returned quantile.
BoundResult mc_upper_bound(const VectorRef& x, double alpha, const McConfig& cfg);

/// Induced means 1 - s.u for l sorted uniform vectors, in repetition order.
/// Repetition i reads only stream (seed, i).
std::vector<double> mc_induced_means(const OrderedSample& z, const McConfig& cfg);

/// Standard error of the level-quantile of sorted draws, from the density
/// estimated by a symmetric finite difference of neighbouring order
/// statistics (window ~ sqrt(l)).
double quantile_std_error(const std::vector<double>& sorted, double level);

/// Coefficients of u.s in spacing coordinates: c_k = 1 - z_k.
Vector spacing_coefficients(const OrderedSample& z);

/// Fraction of the unit simplex {v >= 0, sum v <= 1} (equivalently of the
/// order-statistic simplex) on which sum_k c_k v_k >= t. The slack coordinate
/// implicitly has coefficient 0. c_k must lie in [0, 1].
double simplex_upper_fraction(const VectorRef& c, double t);

/// Smallest mu in [z_1, 1] (to within tol) with
/// simplex_upper_fraction(c, 1 - mu) >= 1 - alpha. Throws std::runtime_error
/// if bisection needs more than max_iterations.
BoundResult exact_upper_bound(const OrderedSample& z, double alpha, double tol = 1e-10,
                              int max_iterations = 200);

/// Upper bound with the estimator chosen in options.
BoundResult upper_bound(const VectorRef& x, double alpha, const BoundOptions& options);

/// 1 - m_alpha(1 - x).
BoundResult lower_bound(const VectorRef& x, double alpha, const BoundOptions& options);

struct Interval {
  double lower;
  double upper;
};

/// Lower and upper bound each at alpha / 2.
Interval two_sided_interval(const VectorRef& x, double alpha, const BoundOptions& options);

}  // namespace meanbound

#endif  // MEANBOUND_BOUND_HPP
