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

#ifndef MEANBOUND_HALF_BERNOULLI_HPP
#define MEANBOUND_HALF_BERNOULLI_HPP

#include "meanbound/core.hpp"

namespace meanbound {

// Exact analysis of the bound on two-point distributions with mass at k and 1
// ("half-Bernoulli"; k = 0 is the Bernoulli case). Samples from such a
// distribution are step samples [k x j, 1 x (n - j)], for which the induced
// mean collapses to 1 - (1 - k) U_j with U_j ~ Beta(j, n - j + 1).

/// (1 - mu) / (1 - k). Requires 0 <= k < 1 and k <= mu <= 1.
double pk_of(double k, double mu);

/// Half-Bernoulli distribution with mass p_k at k and 1 - p_k at 1, mean mu.
class HalfBernoulliSpec {
 public:
  /// Requires 0 <= k < 1 and k < mu <= 1.
  HalfBernoulliSpec(double k, double mu);

  double k() const noexcept { return k_; }
  double mu() const noexcept { return mu_; }
  double pk() const noexcept { return pk_; }

 private:
  double k_;
  double mu_;
  double pk_;
};

/// The sorted sample with j copies of k followed by n - j ones.
struct StepSample {
  int j;
  int n;
  double k;

  Vector values() const;
};

/// Closed form m_alpha(z_{j,n}) = 1 - (1 - k) beta_inv_cdf(alpha; j, n - j + 1).
/// Requires 1 <= j <= n; j = 0 (all ones) is rejected since its bound is 1.
double step_sample_bound(const StepSample& s, double alpha);

/// Smallest j in 1..n whose step sample has bound < mu, or n + 1 if none.
int j_min(const HalfBernoulliSpec& spec, int n, double alpha);

/// Pr(Binomial(n, p) >= j) summed term by term in log space.
double binomial_upper_tail(int j, int n, double p);

/// Pr(m_alpha(Z) < mu) for n draws from spec, as beta_cdf(p_k; j_min, n - j_min + 1).
double failure_probability(const HalfBernoulliSpec& spec, int n, double alpha);

/// The same probability as an explicit binomial sum from j_min to n.
double failure_probability_binomial_sum(const HalfBernoulliSpec& spec, int n, double alpha);

/// beta_inv_cdf(alpha; j, n - j + 1): the largest p_k for which j_min = j
/// still holds, which maximises the failure rate among those distributions.
double worst_case_pk(int j, int n, double alpha);

/// Failure rate of the worst-case distribution with j_min = j, i.e.
/// beta_cdf(worst_case_pk(j, n, alpha); j, n - j + 1). This is a supremum:
/// exactly at worst_case_pk the step sample z_{j,n} has bound equal to mu,
/// which counts as covered.
double worst_case_failure_probability(int j, int n, double alpha);

/// Exact Pr(m_alpha(Z) >= p) for Z a sorted sample of n Bernoulli(p) draws,
/// enumerating the count of zeros.
double exact_bernoulli_coverage(double p, int n, double alpha);

}  // namespace meanbound

#endif  // MEANBOUND_HALF_BERNOULLI_HPP
