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

#ifndef MEANBOUND_BASELINES_HPP
#define MEANBOUND_BASELINES_HPP

#include "meanbound/core.hpp"

#include <cstdint>
#include <vector>

namespace meanbound {

// Comparison upper bounds for the mean of a [0, 1] variable. All functions
// return the raw formula value; clamping to [0, 1] happens in methods.hpp.

struct SampleStats {
  double mean = 0.0;
  double variance = 0.0;  // unbiased (divisor n - 1); 0 when n == 1
  std::int64_t n = 0;
};

SampleStats sample_stats(const VectorRef& x);

struct BootstrapConfig {
  int resamples = 2000;  // B
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// x_bar + sqrt(ln(1/alpha) / 2n). Requires 0 < alpha <= 1.
double hoeffding_upper(const VectorRef& x, double alpha);

/// x_bar + (1 - z_1) sqrt(ln(1/alpha) / 2n); valid for i.i.d. samples and
/// alpha <= 0.5 only, larger alpha is rejected.
double hoeffding_upper_tightened(const VectorRef& x, double alpha);

/// Empirical Bernstein bound of Maurer and Pontil:
/// x_bar + sqrt(2 Var ln(2/alpha) / n) + 7 ln(2/alpha) / (3 (n - 1)).
/// Requires n >= 2 and 0 < alpha <= 2.
double maurer_pontil_upper(const VectorRef& x, double alpha);

/// u_i = max(0, i/n - sqrt(ln(1/alpha) / 2n)), the DKW band with Massart's
/// constant. Requires alpha <= 0.5.
SortedUniformVector dkw_envelope(std::int64_t n, double alpha);

/// Anderson's bound: induced_mean(z, dkw_envelope(n, alpha)).
double anderson_upper(const OrderedSample& z, double alpha);
double anderson_upper(const VectorRef& x, double alpha);

/// x_bar + sqrt(Var / n) t_{1 - alpha, n - 1}. Requires n >= 2.
double student_t_upper(const VectorRef& x, double alpha);

/// Means of B resamples drawn with replacement; resample b reads stream (seed, b).
std::vector<double> bootstrap_means(const VectorRef& x, const BootstrapConfig& cfg);

double percentile_bootstrap_upper(const VectorRef& x, double alpha, const BootstrapConfig& cfg);

struct BcaResult {
  double value = 0.0;
  bool fallback = false;  // percentile bootstrap was used instead
  double bias_correction = 0.0;  // z0
  double acceleration = 0.0;     // a
  double adjusted_level = 0.0;
};

/// Jackknife acceleration sum d^3 / (6 (sum d^2)^{3/2}), d_i = mean(theta) - theta_(i).
/// Returns NaN when the denominator vanishes.
double jackknife_acceleration(const VectorRef& x);

/// BCa upper bound from precomputed resample means. Falls back to the
/// percentile bootstrap (fallback = true) when all samples are equal, when
/// every resample mean lies on one side of x_bar, when the jackknife
/// denominator is zero, or when the adjusted level is not a usable
/// probability.
BcaResult bca_from_replicates(const VectorRef& x, const std::vector<double>& means, double alpha);

BcaResult bca_upper(const VectorRef& x, double alpha, const BootstrapConfig& cfg);

}  // namespace meanbound

#endif  // MEANBOUND_BASELINES_HPP
