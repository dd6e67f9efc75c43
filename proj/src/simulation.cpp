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

#include "meanbound/simulation.hpp"

#include "meanbound/parallel.hpp"
#include "meanbound/special_functions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace meanbound {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_parameter(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("bad number '" + std::string(token) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

// Per-trial seeds: the sample, the Monte Carlo bound and the bootstrap each
// read their own child of (seed, n, trial).
std::uint64_t trial_seed(std::uint64_t seed, int n, std::int64_t trial) {
  return derive_seed(derive_seed(seed, static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(trial));
}

MethodOptions options_for_trial(const MethodOptions& base, std::uint64_t seed) {
  MethodOptions options = base;
  options.bound.mc.seed = derive_seed(seed, 1);
  options.bound.mc.threads = 1;
  options.bootstrap.seed = derive_seed(seed, 2);
  options.bootstrap.threads = 1;
  return options;
}

// Raw bound, or NaN when the method rejects this (alpha, n).
double raw_bound_or_nan(Method method, const Vector& x, double alpha, const MethodOptions& options) {
  try {
    const BoundResult r = compute_bound(method, x, alpha, options);
    return r.diagnostics.raw_value.value_or(r.value);
  } catch (const std::invalid_argument&) {
    return kNaN;
  }
}

}  // namespace

DistributionSpec::DistributionSpec(Kind kind, std::string id, double true_mean)
    : kind_(std::move(kind)), id_(std::move(id)), true_mean_(true_mean) {}

DistributionSpec DistributionSpec::uniform() { return {UniformDist{}, "uniform", 0.5}; }

DistributionSpec DistributionSpec::beta(double a, double b) {
  BetaParams params(a, b);  // validates
  return {BetaDist{a, b}, "beta(" + format_parameter(a) + "," + format_parameter(b) + ")", a / (a + b)};
}

DistributionSpec DistributionSpec::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("bernoulli: p must lie in [0, 1]");
  return {BernoulliDist{p}, "bernoulli(" + format_parameter(p) + ")", p};
}

DistributionSpec DistributionSpec::half_bernoulli(double k, double mu) {
  if (!(k >= 0.0 && k < 1.0 && mu > k && mu <= 1.0))
    throw std::invalid_argument("half_bernoulli: need 0 <= k < mu <= 1");
  return {HalfBernoulliDist{k, mu},
          "half-bernoulli(" + format_parameter(k) + "," + format_parameter(mu) + ")", mu};
}

DistributionSpec DistributionSpec::discrete(std::vector<double> support,
                                            std::vector<double> probabilities, std::string id) {
  if (support.empty() || support.size() != probabilities.size())
    throw std::invalid_argument("discrete: support and probabilities must be non-empty and equal length");
  double total = 0.0;
  double mean = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (!(support[i] >= 0.0 && support[i] <= 1.0))
      throw std::invalid_argument("discrete: support point outside [0, 1]");
    if (!(probabilities[i] >= 0.0)) throw std::invalid_argument("discrete: negative probability");
    total += probabilities[i];
    mean += probabilities[i] * support[i];
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("discrete: probabilities must sum to 1");
  std::vector<double> cumulative(probabilities.size());
  std::partial_sum(probabilities.begin(), probabilities.end(), cumulative.begin());
  DistributionSpec spec(DiscreteDist{std::move(support), std::move(probabilities)}, std::move(id), mean);
  spec.cumulative_ = std::move(cumulative);
  return spec;
}

double DistributionSpec::draw(Stream& stream) const {
  const double u = stream.uniform();
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, UniformDist>) {
          return u;
        } else if constexpr (std::is_same_v<T, BetaDist>) {
          return beta_inv_cdf(u, BetaParams(d.a, d.b));
        } else if constexpr (std::is_same_v<T, BernoulliDist>) {
          return u < d.p ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, HalfBernoulliDist>) {
          return u < (1.0 - d.mu) / (1.0 - d.k) ? d.k : 1.0;
        } else {
          const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u * cumulative_.back());
          const auto index = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()),
                                                   d.support.size() - 1);
          return d.support[index];
        }
      },
      kind_);
}

DistributionSpec parse_distribution(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::vector<double> args =
      colon == std::string_view::npos ? std::vector<double>{} : parse_numbers(text.substr(colon + 1));
  const auto expect = [&](std::size_t count) {
    if (args.size() != count)
      throw std::invalid_argument("distribution '" + std::string(name) + "' expects " +
                                  std::to_string(count) + " parameter(s)");
  };
  if (name == "uniform") {
    expect(0);
    return DistributionSpec::uniform();
  }
  if (name == "beta") {
    expect(2);
    return DistributionSpec::beta(args[0], args[1]);
  }
  if (name == "bernoulli") {
    expect(1);
    return DistributionSpec::bernoulli(args[0]);
  }
  if (name == "half-bernoulli") {
    expect(2);
    return DistributionSpec::half_bernoulli(args[0], args[1]);
  }
  if (name == "age-like") {
    expect(0);
    return age_like_spec();
  }
  throw std::invalid_argument("unknown distribution '" + std::string(text) + "'");
}

Vector sample_distribution(const DistributionSpec& spec, int n, Stream& stream) {
  if (n < 1) throw std::invalid_argument("sample_distribution: n must be >= 1");
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = spec.draw(stream);
  return x;
}

DistributionSpec age_like_spec() {
  constexpr int kPoints = 85;
  std::vector<double> support(kPoints);
  std::vector<double> weights(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    support[i] = static_cast<double>(i) / (kPoints - 1);
    weights[i] = 1.0 - 0.6 * std::pow(support[i], 1.5);
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;
  return DistributionSpec::discrete(std::move(support), std::move(weights), std::string(kAgeLikeVersion));
}

std::vector<ExperimentRow> coverage_experiment(const DistributionSpec& spec, int n,
                                               const std::vector<double>& alphas,
                                               const ExperimentConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("coverage_experiment: trials must be >= 1");
  const std::size_t combos = alphas.size() * config.methods.size();
  const auto trials = static_cast<std::size_t>(config.trials);
  // 1 covered, 0 not covered, -1 method rejected the input.
  std::vector<signed char> outcome(trials * combos);
  const double mu = spec.true_mean();

  parallel_for(trials, config.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      const std::uint64_t seed = trial_seed(config.seed, n, static_cast<std::int64_t>(t));
      Stream stream(seed, 0);
      const Vector x = sample_distribution(spec, n, stream);
      const MethodOptions options = options_for_trial(config.options, seed);
      std::size_t c = 0;
      for (double alpha : alphas) {
        for (Method m : config.methods) {
          const double raw = raw_bound_or_nan(m, x, alpha, options);
          outcome[t * combos + c++] = std::isnan(raw) ? -1 : (raw >= mu ? 1 : 0);
        }
      }
    }
  });

  std::vector<ExperimentRow> rows;
  rows.reserve(combos);
  std::size_t c = 0;
  for (double alpha : alphas) {
    for (Method m : config.methods) {
      std::int64_t covered = 0;
      bool rejected = false;
      for (std::size_t t = 0; t < trials; ++t) {
        const signed char o = outcome[t * combos + c];
        rejected = rejected || o < 0;
        covered += o > 0 ? 1 : 0;
      }
      ExperimentRow row{spec.id(), n, alpha, std::string(method_name(m)), config.trials, "coverage",
                        kNaN, kNaN, config.seed};
      if (!rejected) {
        const double rate = static_cast<double>(covered) / static_cast<double>(trials);
        row.value = rate;
        row.standard_error = std::sqrt(rate * (1.0 - rate) / static_cast<double>(trials));
      }
      rows.push_back(std::move(row));
      ++c;
    }
  }
  return rows;
}

std::vector<ExperimentRow> tightness_experiment(const DistributionSpec& spec,
                                                const std::vector<int>& ns, double alpha,
                                                const ExperimentConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("tightness_experiment: trials must be >= 1");
  const std::size_t methods = config.methods.size();
  const auto trials = static_cast<std::size_t>(config.trials);
  std::vector<ExperimentRow> rows;

  for (int n : ns) {
    std::vector<double> bounds(trials * methods);
    parallel_for(trials, config.threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t t = begin; t < end; ++t) {
        const std::uint64_t seed = trial_seed(config.seed, n, static_cast<std::int64_t>(t));
        Stream stream(seed, 0);
        const Vector x = sample_distribution(spec, n, stream);
        const MethodOptions options = options_for_trial(config.options, seed);
        for (std::size_t m = 0; m < methods; ++m)
          bounds[t * methods + m] = raw_bound_or_nan(config.methods[m], x, alpha, options);
      }
    });

    for (std::size_t m = 0; m < methods; ++m) {
      for (const bool clamped : {false, true}) {
        double sum = 0.0;
        double sum_sq = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
          double v = bounds[t * methods + m];
          if (clamped) v = std::clamp(v, 0.0, 1.0);
          sum += v;
          sum_sq += v * v;
        }
        const double count = static_cast<double>(trials);
        const double mean = sum / count;
        const double variance = trials > 1 ? std::max(0.0, (sum_sq - count * mean * mean) / (count - 1.0)) : 0.0;
        rows.push_back({spec.id(), n, alpha, std::string(method_name(config.methods[m])), config.trials,
                        clamped ? "mean_upper_bound_clamped" : "mean_upper_bound", mean,
                        std::isnan(mean) ? kNaN : std::sqrt(variance / count), config.seed});
      }
    }
  }
  return rows;
}

}  // namespace meanbound
