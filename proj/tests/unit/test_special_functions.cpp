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


#include "meanbound/special_functions.hpp"

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace meanbound;

namespace {

// Composite Simpson rule for the t density on [0, q].
double t_mass_from_zero(double q, int dof) {
  const double nu = dof;
  const double c = std::exp(std::lgamma((nu + 1) / 2) - std::lgamma(nu / 2)) / std::sqrt(nu * std::numbers::pi);
  const auto f = [&](double t) { return c * std::pow(1 + t * t / nu, -(nu + 1) / 2); };
  const int m = 20000;
  const double h = q / m;
  double sum = f(0) + f(q);
  for (int i = 1; i < m; ++i) sum += (i % 2 ? 4 : 2) * f(i * h);
  return sum * h / 3;
}

}  // namespace

TEST_SUITE("special_functions") {

TEST_CASE("log gamma") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(std::abs(log_gamma(1.0)) < 1e-14);
  CHECK(std::abs(log_gamma(2.0)) < 1e-14);
  CHECK(log_gamma(10.0) == doctest::Approx(std::log(362880.0)).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma(0.0), std::invalid_argument);
  CHECK_THROWS_AS(log_gamma(-1.5), std::invalid_argument);

  double worst = 0.0;
  for (double e = -3.0; e <= 6.0; e += 0.01) {
    const double x = std::pow(10.0, e);
    const double expected = boost::math::lgamma(x);
    worst = std::max(worst, std::abs(log_gamma(x) - expected) / std::max(1.0, std::abs(expected)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("beta cdf closed forms and reference values") {
  CHECK(beta_cdf(0.5, BetaParams(1, 1)) == doctest::Approx(0.5));
  for (int n = 1; n <= 6; ++n) {
    for (double x = 0.0; x <= 1.0; x += 0.05) {
      CHECK(std::abs(beta_cdf(x, BetaParams(n, 1)) - std::pow(x, n)) <= 1e-12);
      CHECK(std::abs(beta_cdf(x, BetaParams(1, n)) - (1 - std::pow(1 - x, n))) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(beta_cdf(1.2, BetaParams(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(BetaParams(0, 1), std::invalid_argument);

  const std::vector<double> shapes{0.5, 1, 2, 5, 30, 100, 1000};
  double worst = 0.0;
  for (double a : shapes) {
    for (double b : shapes) {
      for (double x = 0.0; x <= 1.0; x += 0.01) {
        worst = std::max(worst, std::abs(beta_cdf(x, BetaParams(a, b)) - boost::math::ibeta(a, b, x)));
      }
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("beta cdf symmetry and monotonicity") {
  const std::vector<double> shapes{0.5, 1, 2, 5, 30};
  for (double a : shapes) {
    for (double b : shapes) {
      double previous = 0.0;
      for (double x = 0.0; x <= 1.0 + 1e-12; x += 0.002) {
        const double xx = std::min(x, 1.0);
        const double f = beta_cdf(xx, BetaParams(a, b));
        CHECK(f >= previous);
        previous = f;
        CHECK(std::abs(f - (1 - beta_cdf(1 - xx, BetaParams(b, a)))) <= 1e-12);
      }
    }
  }
}

TEST_CASE("beta inverse") {
  CHECK(beta_inv_cdf(0.5, BetaParams(1, 1)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(beta_inv_cdf(0.05, BetaParams(4, 1)) - std::pow(0.05, 0.25)) <= 1e-10);
  CHECK(std::abs(beta_inv_cdf(0.05, BetaParams(1, 4)) - (1 - std::pow(0.95, 0.25))) <= 1e-10);
  CHECK(beta_inv_cdf(0.0, BetaParams(2, 3)) == 0.0);
  CHECK(beta_inv_cdf(1.0, BetaParams(2, 3)) == 1.0);
  CHECK_THROWS_AS(beta_inv_cdf(1.5, BetaParams(2, 3)), std::invalid_argument);

  const std::vector<double> shapes{0.5, 1, 2, 5, 30};
  double worst = 0.0;
  for (double a : shapes) {
    for (double b : shapes) {
      for (int i = 1; i <= 999; ++i) {
        const double q = i / 1000.0;
        const double x = beta_inv_cdf(q, BetaParams(a, b));
        REQUIRE(x >= 0.0);
        REQUIRE(x <= 1.0);
        worst = std::max(worst, std::abs(beta_cdf(x, BetaParams(a, b)) - q));
      }
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("uniform order statistics follow Beta(j, n - j + 1)") {
  const int n = 6;
  const int reps = 100000;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::vector<double>> columns(n, std::vector<double>(reps));
  std::vector<double> u(n);
  for (int r = 0; r < reps; ++r) {
    for (double& v : u) v = unif(rng);
    std::sort(u.begin(), u.end());
    for (int j = 0; j < n; ++j) columns[j][r] = u[j];
  }
  for (int j = 1; j <= n; ++j) {
    std::vector<double>& c = columns[j - 1];
    std::sort(c.begin(), c.end());
    double d = 0.0;
    for (int r = 0; r < reps; ++r) {
      const double f = beta_cdf(c[r], BetaParams(j, n - j + 1));
      d = std::max({d, std::abs(f - r / double(reps)), std::abs(f - (r + 1) / double(reps))});
    }
    CHECK(d < 0.01);
  }
}

TEST_CASE("student t quantile") {
  for (int dof : {1, 2, 5, 30, 1000}) CHECK(std::abs(student_t_quantile(0.5, dof)) < 1e-12);
  CHECK(std::abs(student_t_quantile(0.975, 1) - std::tan(std::numbers::pi * 0.475)) <= 1e-8);
  const double q = student_t_quantile(0.95, 10);
  CHECK(std::abs(t_mass_from_zero(q, 10) - 0.45) <= 1e-8);

  for (int dof : {1, 2, 3, 4, 7, 10, 29, 100, 5000}) {
    const boost::math::students_t dist(dof);
    for (double level : {0.001, 0.01, 0.05, 0.2, 0.5, 0.8, 0.9, 0.95, 0.975, 0.99, 0.999}) {
      const double expected = boost::math::quantile(dist, level);
      CHECK(std::abs(student_t_quantile(level, dof) - expected) <= 1e-8 * std::max(1.0, std::abs(expected)));
    }
  }
  CHECK_THROWS_AS(student_t_quantile(0.95, 0), std::invalid_argument);
  CHECK_THROWS_AS(student_t_quantile(1.0, 3), std::invalid_argument);
}

TEST_CASE("t quantile decreases towards the normal quantile") {
  for (double level : {0.9, 0.95, 0.99}) {
    const double z = normal_quantile(level);
    double previous = student_t_quantile(level, 1);
    for (int dof = 2; dof <= 1024; dof = dof < 64 ? dof + 1 : dof * 2) {
      const double t = student_t_quantile(level, dof);
      CHECK(t < previous);
      CHECK(t > z);
      previous = t;
    }
    // Leading term of the Cornish-Fisher expansion at dof = 1024.
    CHECK(previous - z < 1.05 * z * (1 + z * z) / (4 * 1024));
  }
}

TEST_CASE("normal distribution") {
  const boost::math::normal dist;
  for (double level = 1e-6; level < 1.0; level += 0.0137) {
    CHECK(std::abs(normal_quantile(level) - boost::math::quantile(dist, level)) <= 1e-12 * std::max(1.0, std::abs(boost::math::quantile(dist, level))));
  }
  for (double x = -8.0; x <= 8.0; x += 0.25) CHECK(std::abs(normal_cdf(x) - boost::math::cdf(dist, x)) <= 1e-15);
}

}
