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

#include "meanbound/baselines.hpp"

#include "meanbound/parallel.hpp"
#include "meanbound/random.hpp"
#include "meanbound/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace meanbound {

namespace {

constexpr double kTieTolerance = 1e-12;

void check_unit_sample(const VectorRef& x, const char* where) {
  if (x.size() == 0) throw std::invalid_argument(std::string(where) + ": empty sample");
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0 && x[i] <= 1.0))
      throw std::invalid_argument(std::string(where) + ": value outside [0, 1]");
  }
}

void check_massart_alpha(double alpha, const char* where) {
  if (!(alpha > 0.0 && alpha <= 0.5))
    throw std::invalid_argument(std::string(where) + ": requires 0 < alpha <= 0.5");
}

double hoeffding_slack(std::int64_t n, double alpha) {
  return std::sqrt(std::log(1.0 / alpha) / (2.0 * static_cast<double>(n)));
}

}  // namespace

SampleStats sample_stats(const VectorRef& x) {
  if (x.size() == 0) throw std::invalid_argument("sample_stats: empty sample");
  SampleStats stats;
  stats.n = x.size();
  stats.mean = x.mean();
  if (stats.n > 1)
    stats.variance = (x.array() - stats.mean).square().sum() / static_cast<double>(stats.n - 1);
  return stats;
}

double hoeffding_upper(const VectorRef& x, double alpha) {
  check_unit_sample(x, "hoeffding_upper");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("hoeffding_upper: requires 0 < alpha <= 1");
  return x.mean() + hoeffding_slack(x.size(), alpha);
}

double hoeffding_upper_tightened(const VectorRef& x, double alpha) {
  check_unit_sample(x, "hoeffding_upper_tightened");
  check_massart_alpha(alpha, "hoeffding_upper_tightened");
  return x.mean() + (1.0 - x.minCoeff()) * hoeffding_slack(x.size(), alpha);
}

double maurer_pontil_upper(const VectorRef& x, double alpha) {
  check_unit_sample(x, "maurer_pontil_upper");
  if (x.size() < 2) throw std::invalid_argument("maurer_pontil_upper: requires n >= 2");
  if (!(alpha > 0.0 && alpha <= 2.0))
    throw std::invalid_argument("maurer_pontil_upper: requires 0 < alpha <= 2");
  const SampleStats stats = sample_stats(x);
  const double n = static_cast<double>(stats.n);
  const double log_term = std::log(2.0 / alpha);
  return stats.mean + std::sqrt(2.0 * stats.variance * log_term / n) +
         7.0 * log_term / (3.0 * (n - 1.0));
}

SortedUniformVector dkw_envelope(std::int64_t n, double alpha) {
  if (n < 1) throw std::invalid_argument("dkw_envelope: n must be >= 1");
  check_massart_alpha(alpha, "dkw_envelope");
  const double slack = hoeffding_slack(n, alpha);
  Vector u(n);
  for (std::int64_t i = 0; i < n; ++i)
    u[i] = std::max(0.0, static_cast<double>(i + 1) / static_cast<double>(n) - slack);
  return SortedUniformVector(std::move(u));
}

double anderson_upper(const OrderedSample& z, double alpha) {
  return induced_mean(z, dkw_envelope(z.size(), alpha));
}

double anderson_upper(const VectorRef& x, double alpha) {
  return anderson_upper(order_statistics(x), alpha);
}

double student_t_upper(const VectorRef& x, double alpha) {
  check_unit_sample(x, "student_t_upper");
  if (x.size() < 2) throw std::invalid_argument("student_t_upper: requires n >= 2");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("student_t_upper: alpha must lie in (0, 1)");
  const SampleStats stats = sample_stats(x);
  const double t = student_t_quantile(1.0 - alpha, static_cast<int>(stats.n - 1));
  return stats.mean + std::sqrt(stats.variance / static_cast<double>(stats.n)) * t;
}

std::vector<double> bootstrap_means(const VectorRef& x, const BootstrapConfig& cfg) {
  check_unit_sample(x, "bootstrap_means");
  if (cfg.resamples < 1) throw std::invalid_argument("BootstrapConfig: resamples must be >= 1");
  const auto n = static_cast<std::uint64_t>(x.size());
  const double lo = x.minCoeff();
  const double hi = x.maxCoeff();
  std::vector<double> means(static_cast<std::size_t>(cfg.resamples));
  parallel_for(means.size(), cfg.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t b = begin; b < end; ++b) {
      Stream stream(cfg.seed, b);
      double sum = 0.0;
      for (std::uint64_t i = 0; i < n; ++i)
        sum += x[static_cast<Eigen::Index>(stream.uniform_index(n))];
      // Rounding can push a mean of identical values just past them.
      means[b] = std::clamp(sum / static_cast<double>(n), lo, hi);
    }
  });
  return means;
}

double percentile_bootstrap_upper(const VectorRef& x, double alpha, const BootstrapConfig& cfg) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("percentile_bootstrap_upper: alpha must lie in (0, 1)");
  return empirical_quantile(bootstrap_means(x, cfg), 1.0 - alpha);
}

double jackknife_acceleration(const VectorRef& x) {
  const auto n = x.size();
  if (n < 2) return std::nan("");
  const double total = x.sum();
  const Eigen::ArrayXd leave_one_out = (total - x.array()) / static_cast<double>(n - 1);
  const Eigen::ArrayXd d = leave_one_out.mean() - leave_one_out;
  const double denominator = 6.0 * std::pow(d.square().sum(), 1.5);
  if (!(denominator > 0.0)) return std::nan("");
  return d.cube().sum() / denominator;
}

BcaResult bca_from_replicates(const VectorRef& x, const std::vector<double>& means, double alpha) {
  check_unit_sample(x, "bca_upper");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("bca_upper: alpha must lie in (0, 1)");
  if (means.empty()) throw std::invalid_argument("bca_upper: no bootstrap replicates");

  BcaResult result;
  const auto fall_back = [&] {
    result.fallback = true;
    result.adjusted_level = 1.0 - alpha;
    result.value = empirical_quantile(means, 1.0 - alpha);
    return result;
  };

  if (x.minCoeff() == x.maxCoeff()) return fall_back();
  // Resample means equal to x_bar up to rounding count as ties, not "below".
  const double mean = x.mean();
  const auto below =
      std::count_if(means.begin(), means.end(), [&](double m) { return m < mean - kTieTolerance; });
  if (below == 0 || below == static_cast<std::ptrdiff_t>(means.size())) return fall_back();
  const double z0 = normal_quantile(static_cast<double>(below) / static_cast<double>(means.size()));
  const double a = jackknife_acceleration(x);
  if (!std::isfinite(a)) return fall_back();

  const double w = z0 + normal_quantile(1.0 - alpha);
  const double denominator = 1.0 - a * w;
  if (!(denominator > 0.0)) return fall_back();
  const double level = normal_cdf(z0 + w / denominator);
  if (!(level > 0.0 && level <= 1.0)) return fall_back();

  result.bias_correction = z0;
  result.acceleration = a;
  result.adjusted_level = level;
  result.value = empirical_quantile(means, level);
  return result;
}

BcaResult bca_upper(const VectorRef& x, double alpha, const BootstrapConfig& cfg) {
  return bca_from_replicates(x, bootstrap_means(x, cfg), alpha);
}

}  // namespace meanbound
