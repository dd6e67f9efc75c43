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

#ifndef MEANBOUND_SIMULATION_HPP
#define MEANBOUND_SIMULATION_HPP

#include "meanbound/core.hpp"
#include "meanbound/methods.hpp"
#include "meanbound/random.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace meanbound {

struct UniformDist {};
struct BetaDist {
  double a;
  double b;
};
struct BernoulliDist {
  double p;
};
struct HalfBernoulliDist {
  double k;
  double mu;
};
struct DiscreteDist {
  std::vector<double> support;
  std::vector<double> probabilities;
};

/// A distribution on [0, 1] with its analytic mean.
class DistributionSpec {
 public:
  using Kind = std::variant<UniformDist, BetaDist, BernoulliDist, HalfBernoulliDist, DiscreteDist>;

  static DistributionSpec uniform();
  static DistributionSpec beta(double a, double b);
  static DistributionSpec bernoulli(double p);
  static DistributionSpec half_bernoulli(double k, double mu);
  /// support must lie in [0, 1]; probabilities non-negative summing to 1 within 1e-12.
  static DistributionSpec discrete(std::vector<double> support, std::vector<double> probabilities,
                                   std::string id);

  const Kind& kind() const noexcept { return kind_; }
  const std::string& id() const noexcept { return id_; }
  double true_mean() const noexcept { return true_mean_; }

  double draw(Stream& stream) const;

 private:
  DistributionSpec(Kind kind, std::string id, double true_mean);

  Kind kind_;
  std::string id_;
  double true_mean_;
  std::vector<double> cumulative_;  // discrete only
};

/// Parses "uniform", "beta:a,b", "bernoulli:p", "half-bernoulli:k,mu" or "age-like".
DistributionSpec parse_distribution(std::string_view text);

/// n i.i.d. draws; beta variates by inverting beta_cdf.
Vector sample_distribution(const DistributionSpec& spec, int n, Stream& stream);

/// Version tag of the synthetic age table returned by age_like_spec().
inline constexpr std::string_view kAgeLikeVersion = "age-like/v1";

/// Synthetic stand-in for an age distribution on 0..84 years, rescaled to
/// [0, 1]: 85 equally spaced points with weights 1 - 0.6 (i / 84)^1.5, which
/// decline with age (mild right skew).
DistributionSpec age_like_spec();

struct ExperimentRow {
  std::string distribution;
  int n = 0;
  double alpha = 0.0;
  std::string method;
  std::int64_t trials = 0;
  std::string metric;  // "coverage", "mean_upper_bound" or "mean_upper_bound_clamped"
  double value = 0.0;
  double standard_error = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

struct ExperimentConfig {
  std::int64_t trials = 10000;
  std::vector<Method> methods{Method::kOurs};
  std::uint64_t seed = 0;
  unsigned threads = 0;
  MethodOptions options;  // seeds inside are replaced per trial
};

/// For each (alpha, method): fraction of trials whose raw bound is >= the
/// true mean, with binomial standard error. A method that rejects an alpha
/// (e.g. Anderson above 0.5) or n yields a row whose value is NaN.
std::vector<ExperimentRow> coverage_experiment(const DistributionSpec& spec, int n,
                                               const std::vector<double>& alphas,
                                               const ExperimentConfig& config);

/// For each (n, method): mean raw upper bound over trials (and the mean after
/// clamping to [0, 1]) with standard errors.
std::vector<ExperimentRow> tightness_experiment(const DistributionSpec& spec,
                                                const std::vector<int>& ns, double alpha,
                                                const ExperimentConfig& config);

}  // namespace meanbound

#endif  // MEANBOUND_SIMULATION_HPP
