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

#include "meanbound/parallel.hpp"
#include "meanbound/random.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <stdexcept>

namespace meanbound {

namespace {

void check_alpha_open(double alpha, const char* where) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument(std::string(where) + ": alpha must lie in (0, 1)");
}

}  // namespace

std::vector<double> mc_induced_means(const OrderedSample& z, const McConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("McConfig: samples must be >= 1");
  const Vector s = spacings(z).values;
  const Eigen::Index n = z.size();
  std::vector<double> ms(static_cast<std::size_t>(cfg.samples));
  parallel_for(ms.size(), cfg.threads, [&](std::size_t begin, std::size_t end) {
    Vector u(n);
    for (std::size_t i = begin; i < end; ++i) {
      Stream stream(cfg.seed, i);
      for (Eigen::Index j = 0; j < n; ++j) u[j] = stream.uniform();
      std::sort(u.begin(), u.end());
      ms[i] = 1.0 - s.dot(u);
    }
  });
  return ms;
}

double quantile_std_error(const std::vector<double>& sorted, double level) {
  const std::size_t l = sorted.size();
  if (l < 2) return 0.0;
  const std::size_t k = quantile_index(level, l);
  const auto half_window =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(l)))));
  const std::size_t lo = k > half_window ? k - half_window : 1;
  const std::size_t hi = std::min(l, k + half_window);
  if (hi == lo) return 0.0;
  const double spread = sorted[hi - 1] - sorted[lo - 1];
  const double p = std::min(level, 1.0);
  // sqrt(p (1 - p) / l) / f with f ~ ((hi - lo) / l) / spread.
  return std::sqrt(p * (1.0 - p) / static_cast<double>(l)) * spread * static_cast<double>(l) /
         static_cast<double>(hi - lo);
}

BoundResult mc_upper_bound(const VectorRef& x, double alpha, const McConfig& cfg) {
  check_alpha_open(alpha, "mc_upper_bound");
  const OrderedSample z = order_statistics(x);
  std::vector<double> ms = mc_induced_means(z, cfg);
  std::sort(ms.begin(), ms.end());
  const double level = 1.0 - alpha;
  const double raw = ms[quantile_index(level, ms.size()) - 1];

  BoundResult result;
  result.value = std::clamp(raw, 0.0, 1.0);
  result.method = Method::kOursMonteCarlo;
  result.alpha = alpha;
  result.n = z.size();
  result.diagnostics.raw_value = raw;
  result.diagnostics.mc_samples = cfg.samples;
  result.diagnostics.seed = cfg.seed;
  result.diagnostics.mc_std_error = quantile_std_error(ms, level);
  return result;
}

Vector spacing_coefficients(const OrderedSample& z) {
  return Vector::Ones(z.size()) - z.values();
}

double simplex_upper_fraction(const VectorRef& c, double t) {
  if (t <= 0.0) return 1.0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (!(c[i] >= 0.0 && c[i] <= 1.0))
      throw std::invalid_argument("simplex_upper_fraction: coefficient outside [0, 1]");
  }
  // Knots at or below the threshold (including the slack coordinate's 0) and
  // strictly above it.
  std::vector<double> low{0.0};
  std::vector<double> high;
  for (Eigen::Index i = 0; i < c.size(); ++i) (c[i] > t ? high : low).push_back(c[i]);
  if (high.empty()) return 0.0;

  // row[j] holds Pr(sum over the first i low and first j high knots > t);
  // with no low knots every knot exceeds t, with no high knots none does.
  std::vector<double> row(high.size() + 1, 1.0);
  for (double lk : low) {
    row[0] = 0.0;
    for (std::size_t j = 1; j <= high.size(); ++j) {
      const double hk = high[j - 1];
      row[j] = ((hk - t) * row[j] + (t - lk) * row[j - 1]) / (hk - lk);
    }
  }
  return std::clamp(row.back(), 0.0, 1.0);
}

BoundResult exact_upper_bound(const OrderedSample& z, double alpha, double tol,
                              int max_iterations) {
  check_alpha_open(alpha, "exact_upper_bound");
  if (!(tol > 0.0)) throw std::invalid_argument("exact_upper_bound: tol must be positive");
  const Vector c = spacing_coefficients(z);
  const double target = 1.0 - alpha;
  const auto reaches = [&](double mu) { return simplex_upper_fraction(c, 1.0 - mu) >= target; };

  double lo = z.smallest();
  double hi = 1.0;
  int iterations = 0;
  if (reaches(lo)) {
    hi = lo;
  } else {
    while (hi - lo > tol) {
      if (++iterations > max_iterations)
        throw std::runtime_error("exact_upper_bound: bisection did not converge (tol too small?)");
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi)
        throw std::runtime_error("exact_upper_bound: tolerance below floating-point resolution");
      if (reaches(mid))
        hi = mid;
      else
        lo = mid;
    }
  }

  BoundResult result;
  result.value = std::clamp(hi, 0.0, 1.0);
  result.method = Method::kOursExact;
  result.alpha = alpha;
  result.n = z.size();
  result.diagnostics.raw_value = hi;
  result.diagnostics.iterations = iterations;
  return result;
}

BoundResult upper_bound(const VectorRef& x, double alpha, const BoundOptions& options) {
  if (options.estimator == Estimator::kMonteCarlo) return mc_upper_bound(x, alpha, options.mc);
  check_alpha_open(alpha, "upper_bound");
  return exact_upper_bound(order_statistics(x), alpha, options.tolerance, options.max_iterations);
}

BoundResult lower_bound(const VectorRef& x, double alpha, const BoundOptions& options) {
  const Vector reflected = Vector::Ones(x.size()) - x;
  BoundResult result = upper_bound(reflected, alpha, options);
  const double raw = 1.0 - *result.diagnostics.raw_value;
  result.diagnostics.raw_value = raw;
  result.value = std::clamp(raw, 0.0, 1.0);
  return result;
}

Interval two_sided_interval(const VectorRef& x, double alpha, const BoundOptions& options) {
  const double half = 0.5 * alpha;
  return {lower_bound(x, half, options).value, upper_bound(x, half, options).value};
}

}  // namespace meanbound
