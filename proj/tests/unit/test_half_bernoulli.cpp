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


#include "meanbound/bound.hpp"
#include "meanbound/half_bernoulli.hpp"
#include "meanbound/special_functions.hpp"

#include <boost/math/distributions/binomial.hpp>
#include <doctest.h>

#include <cmath>
#include <random>

using namespace meanbound;

TEST_SUITE("half_bernoulli") {

TEST_CASE("p_k") {
  CHECK(pk_of(0.0, 0.5) == 0.5);
  CHECK(pk_of(0.3, 1.0) == 0.0);
  CHECK(pk_of(0.5, 0.75) == 0.5);
  CHECK_THROWS_AS(pk_of(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(pk_of(0.5, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(HalfBernoulliSpec(0.5, 0.5), std::invalid_argument);
  CHECK(HalfBernoulliSpec(0.2, 0.6).pk() == doctest::Approx(0.5));
}

TEST_CASE("step sample bound") {
  CHECK(std::abs(step_sample_bound({4, 4, 0.0}, 0.05) - (1 - std::pow(0.05, 0.25))) <= 1e-10);
  CHECK(step_sample_bound({2, 5, 1 - 1e-12}, 0.05) == doctest::Approx(1.0));
  CHECK_THROWS_AS(step_sample_bound({0, 4, 0.0}, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(step_sample_bound({5, 4, 0.0}, 0.05), std::invalid_argument);
  CHECK(StepSample{2, 4, 0.3}.values() == (Vector(4) << 0.3, 0.3, 1, 1).finished());

  for (int n = 1; n <= 15; ++n) {
    for (double k : {0.0, 0.25, 0.8}) {
      double previous = 2.0;
      for (int j = 1; j <= n; ++j) {
        const double b = step_sample_bound({j, n, k}, 0.1);
        CHECK(b <= previous);
        previous = b;
        CHECK(std::abs(b - exact_upper_bound(OrderedSample(StepSample{j, n, k}.values()), 0.1).value) <= 1e-8);
      }
    }
  }
}

TEST_CASE("step sample bound agrees with Monte Carlo") {
  McConfig cfg;
  cfg.samples = 200000;
  for (const StepSample s : {StepSample{1, 3, 0.0}, StepSample{3, 5, 0.4}, StepSample{6, 6, 0.1}}) {
    cfg.seed = static_cast<std::uint64_t>(s.j * 100 + s.n);
    const BoundResult r = mc_upper_bound(s.values(), 0.05, cfg);
    CHECK(std::abs(r.value - step_sample_bound(s, 0.05)) <= 3 * *r.diagnostics.mc_std_error);
  }
}

TEST_CASE("j_min") {
  const HalfBernoulliSpec spec(0.0, 0.6);
  int expected = 5;
  for (int j = 1; j <= 4; ++j) {
    if (1 - beta_inv_cdf(0.05, BetaParams(j, 5 - j)) < 0.6) {
      expected = j;
      break;
    }
  }
  CHECK(j_min(spec, 4, 0.05) == expected);
  CHECK(j_min(HalfBernoulliSpec(0.0, 1e-6), 4, 0.05) == 5);
  // Every j at or beyond j_min is infeasible.
  for (double mu : {0.3, 0.6, 0.9}) {
    const HalfBernoulliSpec s(0.1, mu);
    const int jm = j_min(s, 12, 0.1);
    for (int j = 1; j <= 12; ++j) CHECK((step_sample_bound({j, 12, 0.1}, 0.1) < mu) == (j >= jm));
  }
}

TEST_CASE("failure probability forms agree") {
  CHECK(failure_probability(HalfBernoulliSpec(0.0, 1e-6), 4, 0.05) == 0.0);
  CHECK(failure_probability(HalfBernoulliSpec(0.0, 1.0), 4, 0.05) == 0.0);  // p_k = 0
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int rep = 0; rep < 2000; ++rep) {
    const double k = 0.9 * unif(rng);
    const double mu = k + (1 - k) * unif(rng);
    if (!(mu > k)) continue;
    const HalfBernoulliSpec s(k, mu);
    const int n = 1 + rep % 25;
    const double alpha = 0.01 + 0.5 * unif(rng);
    const double beta_form = failure_probability(s, n, alpha);
    CHECK(std::abs(beta_form - failure_probability_binomial_sum(s, n, alpha)) <= 1e-10);
    const int jm = j_min(s, n, alpha);
    if (jm <= n && s.pk() > 0) {
      const double boost_tail = boost::math::cdf(boost::math::complement(boost::math::binomial(n, s.pk()), jm - 1));
      CHECK(std::abs(beta_form - boost_tail) <= 1e-10);
    }
  }
}

TEST_CASE("worst case saturates at alpha") {
  CHECK(std::abs(worst_case_pk(1, 4, 0.05) - (1 - std::pow(0.95, 0.25))) <= 1e-10);
  for (int n = 1; n <= 10; ++n) CHECK(std::abs(worst_case_pk(n, n, 0.05) - std::pow(0.05, 1.0 / n)) <= 1e-10);
  CHECK(worst_case_pk(1, 1, 0.3) == doctest::Approx(0.3));
  CHECK_THROWS_AS(worst_case_pk(0, 4, 0.05), std::invalid_argument);

  for (int n = 1; n <= 20; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (double alpha : {0.01, 0.05, 0.1, 0.25, 0.5}) {
        CHECK(std::abs(worst_case_failure_probability(j, n, alpha) - alpha) <= 1e-8);
        // Just inside the worst case, the distribution itself attains alpha.
        const double pk = worst_case_pk(j, n, alpha) * (1 - 1e-11);
        for (double k : {0.0, 0.3}) {
          const HalfBernoulliSpec s(k, 1 - pk * (1 - k));
          CHECK(j_min(s, n, alpha) == j);
          CHECK(std::abs(failure_probability(s, n, alpha) - alpha) <= 1e-8);
        }
      }
    }
  }
}

TEST_CASE("random half-Bernoulli distributions never fail more than alpha") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  int checked = 0;
  while (checked < 10000) {
    const double k = unif(rng) * 0.99;
    const double mu = k + (1 - k) * unif(rng);
    if (!(mu > k)) continue;
    const int n = 1 + static_cast<int>(unif(rng) * 40);
    const double alpha = std::vector<double>{0.01, 0.05, 0.1, 0.25, 0.5, 0.9}[checked % 6];
    CHECK(failure_probability(HalfBernoulliSpec(k, mu), n, alpha) <= alpha + 1e-8);
    ++checked;
  }
}

TEST_CASE("exact Bernoulli coverage") {
  CHECK(exact_bernoulli_coverage(0.0, 5, 0.05) == 1.0);
  CHECK(exact_bernoulli_coverage(1.0, 5, 0.05) == 1.0);
  CHECK(exact_bernoulli_coverage(0.5, 4, 0.05) >= 0.95);
  // The all-zeros sample alone has probability 0.5^4 = 0.0625 > 0.05, yet it is covered.
  CHECK(step_sample_bound({4, 4, 0.0}, 0.05) > 0.5);
  for (double p = 0.01; p < 1.0; p += 0.01) {
    for (int n : {1, 2, 7, 20}) {
      for (double alpha : {0.05, 0.3}) {
        const double c = exact_bernoulli_coverage(p, n, alpha);
        CHECK(c >= 1 - alpha - 1e-8);
        CHECK(std::abs(c - (1 - failure_probability(HalfBernoulliSpec(0.0, p), n, alpha))) <= 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(exact_bernoulli_coverage(1.5, 4, 0.05), std::invalid_argument);
}

}
