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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace meanbound;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

Vector sorted_uniform(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Vector v(n);
  for (double& x : v) x = unif(rng);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("order_statistics sorts and validates") {
  CHECK(order_statistics(vec({0.8, 0.3})).values() == vec({0.3, 0.8}));
  CHECK(order_statistics(vec({0.5})).values() == vec({0.5}));
  CHECK(order_statistics(vec({1, 1, 0, 0})).values() == vec({0, 0, 1, 1}));
  const std::vector<double> raw{0.2, 0.1};
  CHECK(order_statistics(std::span<const double>(raw)).values() == vec({0.1, 0.2}));

  CHECK_THROWS_AS(order_statistics(Vector()), std::invalid_argument);
  CHECK_THROWS_AS(order_statistics(vec({0.5, 1.5})), std::invalid_argument);
  CHECK_THROWS_AS(order_statistics(vec({-0.1})), std::invalid_argument);
  CHECK_THROWS_AS(order_statistics(vec({std::nan("")})), std::invalid_argument);
  CHECK_THROWS_AS(OrderedSample(vec({0.5, 0.2})), std::invalid_argument);
  CHECK_THROWS_AS(SortedUniformVector(vec({0.5, 0.2})), std::invalid_argument);
  CHECK_THROWS_AS(ConfidenceSpec(1.5), std::invalid_argument);
  CHECK(ConfidenceSpec(0.05).level() == doctest::Approx(0.95));
}

TEST_CASE("spacings") {
  const Vector s = spacings(order_statistics(vec({0.3, 0.8}))).values;
  CHECK(s[0] == doctest::Approx(0.5));
  CHECK(s[1] == doctest::Approx(0.2));
  CHECK(spacings(order_statistics(vec({1, 1}))).values == vec({0, 0}));
  CHECK(spacings(order_statistics(vec({0}))).values == vec({1}));

  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 100; ++rep) {
    const OrderedSample z(sorted_uniform(rng, 1 + rep % 12));
    const Vector sp = spacings(z).values;
    CHECK(sp.minCoeff() >= 0.0);
    CHECK(sp.sum() == doctest::Approx(1.0 - z.smallest()).epsilon(1e-12));
  }
}

TEST_CASE("induced mean examples") {
  const OrderedSample z(vec({0.3, 0.8}));
  CHECK(induced_mean(z, SortedUniformVector(vec({0.5, 0.5}))) == doctest::Approx(0.65));
  CHECK(induced_mean_horizontal(z, SortedUniformVector(vec({0.5, 0.5}))) == doctest::Approx(0.65));
  CHECK(induced_mean(z, SortedUniformVector(vec({0, 0}))) == 1.0);
  CHECK(induced_mean(z, SortedUniformVector(vec({1, 1}))) == doctest::Approx(0.3));
  CHECK_THROWS_AS(induced_mean(z, SortedUniformVector(vec({0.5}))), std::invalid_argument);
}

TEST_CASE("vertical and horizontal strip sums agree") {
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 1 + rep % 40;
    const OrderedSample z(sorted_uniform(rng, n));
    const SortedUniformVector u(sorted_uniform(rng, n));
    const double v = induced_mean(z, u);
    worst = std::max(worst, std::abs(v - induced_mean_horizontal(z, u)));
    CHECK(v >= z.smallest() - 1e-15);
    CHECK(v <= 1.0 + 1e-15);
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("induced mean decreases as u increases") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 1 + rep % 15;
    const OrderedSample z(sorted_uniform(rng, n));
    const Vector u = sorted_uniform(rng, n);
    // Raising each coordinate towards 1 by a common fraction keeps the order.
    const double f = unif(rng);
    const Vector u2 = u + f * (Vector::Ones(n) - u);
    CHECK(induced_mean(z, SortedUniformVector(u)) >= induced_mean(z, SortedUniformVector(u2)) - 1e-15);
  }
}

TEST_CASE("conservative cdf") {
  const OrderedSample z(vec({0.3, 0.8}));
  const SortedUniformVector u(vec({0.4, 0.7}));
  CHECK(conservative_cdf(z, u, 0.5) == 0.4);
  CHECK(conservative_cdf(z, u, 0.2) == 0.0);
  CHECK(conservative_cdf(z, u, 1.0) == 1.0);
  CHECK(conservative_cdf(z, u, 0.3) == 0.4);
  CHECK(conservative_cdf(z, u, 0.8) == 0.7);
  CHECK_THROWS_AS(conservative_cdf(z, u, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(conservative_cdf(z, u, -0.1), std::invalid_argument);

  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 1 + rep % 10;
    const OrderedSample zz(sorted_uniform(rng, n));
    const SortedUniformVector uu(sorted_uniform(rng, n));
    for (int i = 0; i < n; ++i) CHECK(conservative_cdf(zz, uu, zz[i]) == uu[i]);
    double previous = 0.0;
    for (int k = 0; k <= 1000; ++k) {
      const double f = conservative_cdf(zz, uu, k / 1000.0);
      CHECK(f >= previous);
      previous = f;
    }
  }
}

TEST_CASE("induced mean is the mean of the conservative completion") {
  std::mt19937_64 rng(21);
  const int grid = 1 << 21;
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 1 + rep % 8;
    const OrderedSample z(sorted_uniform(rng, n));
    const SortedUniformVector u(sorted_uniform(rng, n));
    // E[X] = integral of 1 - F over [0, 1] for X in [0, 1]; midpoint rule.
    double integral = 0.0;
    for (int k = 0; k < grid; ++k) integral += 1.0 - conservative_cdf(z, u, (k + 0.5) / grid);
    integral /= grid;
    CHECK(std::abs(integral - induced_mean(z, u)) < 1e-6);
  }
}

TEST_CASE("empirical quantile") {
  std::vector<double> ten(10);
  for (int i = 0; i < 10; ++i) ten[i] = 10 - i;
  CHECK(empirical_quantile(ten, 0.9) == 9);
  CHECK(empirical_quantile(ten, 0.05) == 1);
  CHECK(empirical_quantile(ten, 1.0) == 10);
  CHECK(empirical_quantile({7}, 0.3) == 7);
  CHECK_THROWS_AS(empirical_quantile({}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(empirical_quantile(ten, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(empirical_quantile(ten, 1.1), std::invalid_argument);

  CHECK(quantile_index(0.95, 10000) == 9500);
  CHECK(quantile_index(0.95, 10001) == 9501);
  CHECK(quantile_index(0.7, 10) == 7);
  CHECK(quantile_index(1e-9, 10) == 1);
}

}
