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

#include "meanbound/half_bernoulli.hpp"

#include "meanbound/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace meanbound {

namespace {

void check_n_alpha(int n, double alpha, const char* where) {
  if (n < 1) throw std::invalid_argument(std::string(where) + ": n must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument(std::string(where) + ": alpha must lie in (0, 1)");
}

double log_binomial_pmf(int i, int n, double p) {
  return log_gamma(n + 1.0) - log_gamma(i + 1.0) - log_gamma(n - i + 1.0) + i * std::log(p) +
         (n - i) * std::log1p(-p);
}

}  // namespace

double pk_of(double k, double mu) {
  if (!(k >= 0.0 && k < 1.0)) throw std::invalid_argument("pk_of: k must lie in [0, 1)");
  if (!(mu >= k && mu <= 1.0)) throw std::invalid_argument("pk_of: mu must lie in [k, 1]");
  return (1.0 - mu) / (1.0 - k);
}

HalfBernoulliSpec::HalfBernoulliSpec(double k, double mu) : k_(k), mu_(mu), pk_(0.0) {
  if (!(mu > k)) throw std::invalid_argument("HalfBernoulliSpec: mu must exceed k");
  pk_ = pk_of(k, mu);
}

Vector StepSample::values() const {
  if (n < 1 || j < 0 || j > n) throw std::invalid_argument("StepSample: need 0 <= j <= n, n >= 1");
  Vector v = Vector::Ones(n);
  v.head(j).setConstant(k);
  return v;
}

double step_sample_bound(const StepSample& s, double alpha) {
  check_n_alpha(s.n, alpha, "step_sample_bound");
  if (s.j < 1 || s.j > s.n)
    throw std::invalid_argument("step_sample_bound: j must lie in 1..n (j = 0 is the all-ones sample)");
  if (!(s.k >= 0.0 && s.k < 1.0)) throw std::invalid_argument("step_sample_bound: k must lie in [0, 1)");
  return 1.0 - (1.0 - s.k) * beta_inv_cdf(alpha, BetaParams(s.j, s.n - s.j + 1));
}

int j_min(const HalfBernoulliSpec& spec, int n, double alpha) {
  check_n_alpha(n, alpha, "j_min");
  for (int j = 1; j <= n; ++j) {
    if (step_sample_bound({j, n, spec.k()}, alpha) < spec.mu()) return j;
  }
  return n + 1;
}

double binomial_upper_tail(int j, int n, double p) {
  if (j <= 0) return 1.0;
  if (j > n) return 0.0;
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  double sum = 0.0;
  for (int i = j; i <= n; ++i) sum += std::exp(log_binomial_pmf(i, n, p));
  return sum;
}

double failure_probability(const HalfBernoulliSpec& spec, int n, double alpha) {
  const int j = j_min(spec, n, alpha);
  if (j > n) return 0.0;
  return beta_cdf(spec.pk(), BetaParams(j, n - j + 1));
}

double failure_probability_binomial_sum(const HalfBernoulliSpec& spec, int n, double alpha) {
  return binomial_upper_tail(j_min(spec, n, alpha), n, spec.pk());
}

double worst_case_pk(int j, int n, double alpha) {
  check_n_alpha(n, alpha, "worst_case_pk");
  if (j < 1 || j > n) throw std::invalid_argument("worst_case_pk: j must lie in 1..n");
  return beta_inv_cdf(alpha, BetaParams(j, n - j + 1));
}

double worst_case_failure_probability(int j, int n, double alpha) {
  return beta_cdf(worst_case_pk(j, n, alpha), BetaParams(j, n - j + 1));
}

double exact_bernoulli_coverage(double p, int n, double alpha) {
  check_n_alpha(n, alpha, "exact_bernoulli_coverage");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("exact_bernoulli_coverage: p must lie in [0, 1]");
  if (p == 0.0 || p == 1.0) return 1.0;  // every sample is constant at the mean
  // j zeros out of n, probability Binomial(j; n, 1 - p); j = 0 has bound 1.
  double covered = std::exp(log_binomial_pmf(0, n, 1.0 - p));
  for (int j = 1; j <= n; ++j) {
    if (step_sample_bound({j, n, 0.0}, alpha) >= p) covered += std::exp(log_binomial_pmf(j, n, 1.0 - p));
  }
  return std::min(covered, 1.0);
}

}  // namespace meanbound
