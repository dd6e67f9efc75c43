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


#include "cli.hpp"

#include "meanbound/half_bernoulli.hpp"
#include "meanbound/methods.hpp"
#include "meanbound/results_io.hpp"
#include "meanbound/simulation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace meanbound::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_datum(std::string_view token, std::size_t line) {
  token = trim(token);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(v))
    throw std::invalid_argument("line " + std::to_string(line) + ": not a finite number: '" +
                                std::string(token) + "'");
  return v;
}

struct GlobalOptions {
  double alpha = 0.05;
  std::string method = "ours-exact";
  std::uint64_t seed = 0;
  std::int64_t mc_samples = 10000;
  bool json = false;
  unsigned threads = 0;
  int resamples = 2000;
  Eigen::Index exact_max_n = 50;
};

MethodOptions method_options(const GlobalOptions& g) {
  MethodOptions options;
  options.bound.mc.samples = g.mc_samples;
  options.bound.mc.seed = g.seed;
  options.bound.mc.threads = g.threads;
  options.bootstrap.resamples = g.resamples;
  options.bootstrap.seed = g.seed;
  options.bootstrap.threads = g.threads;
  options.exact_max_n = g.exact_max_n;
  return options;
}

bool uses_monte_carlo(Method m, Eigen::Index n, const MethodOptions& options) {
  return m == Method::kOursMonteCarlo || (m == Method::kOurs && n > options.exact_max_n);
}

void warn_small_alpha(double alpha, std::int64_t samples, std::ostream& err) {
  if (alpha < 0.02 && static_cast<double>(samples) < 200.0 / alpha) {
    err << "warning: alpha " << format_number(alpha) << " with " << samples
        << " Monte Carlo samples; consider --mc-samples >= "
        << static_cast<std::int64_t>(std::ceil(200.0 / alpha)) << '\n';
  }
}

// Numbers in JSON go through format_number so text and JSON agree.
Json number_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return Json::parse(format_number(v));
}

Json diagnostics_json(const Diagnostics& d, const RescaleSpec& scale) {
  Json j = Json::object();
  if (d.raw_value) j["raw_value"] = number_json(scale.from_unit(*d.raw_value));
  if (d.mc_samples) j["mc_samples"] = *d.mc_samples;
  if (d.mc_std_error) j["mc_std_error"] = number_json(*d.mc_std_error * (scale.hi() - scale.lo()));
  if (d.seed) j["seed"] = *d.seed;
  if (d.bootstrap_resamples) j["bootstrap_resamples"] = *d.bootstrap_resamples;
  if (d.iterations) j["iterations"] = *d.iterations;
  if (d.fallback) j["fallback"] = true;
  return j;
}


struct BoundArgs {
  std::string data = "-";
  std::optional<int> column;
  bool skip_header = false;
  double lo = 0.0;
  double hi = 1.0;
  std::string side = "upper";
};

int cmd_bound(const GlobalOptions& g, const BoundArgs& a, std::ostream& out, std::ostream& err) {
  const RescaleSpec scale(a.lo, a.hi);
  const Method method = parse_method(g.method);
  const std::vector<double> raw =
      a.data == "-" ? read_data(std::cin, a.column, a.skip_header) : read_data(a.data, a.column, a.skip_header);
  if (raw.empty()) throw std::invalid_argument("no data values");
  Vector x(static_cast<Eigen::Index>(raw.size()));
  for (std::size_t i = 0; i < raw.size(); ++i) x[static_cast<Eigen::Index>(i)] = scale.to_unit(raw[i]);

  const MethodOptions options = method_options(g);
  const bool two_sided = a.side == "two-sided";
  const double side_alpha = two_sided ? 0.5 * g.alpha : g.alpha;
  if (uses_monte_carlo(method, x.size(), options)) warn_small_alpha(side_alpha, g.mc_samples, err);

  std::vector<std::pair<std::string, BoundResult>> results;
  if (a.side == "upper" || two_sided)
    results.emplace_back("upper", compute_bound(method, x, side_alpha, options, Side::kUpper));
  if (a.side == "lower" || two_sided)
    results.emplace_back("lower", compute_bound(method, x, side_alpha, options, Side::kLower));
  if (two_sided) std::swap(results[0], results[1]);

  if (g.json) {
    Json j{{"method", g.method}, {"side", a.side}, {"alpha", number_json(g.alpha)},
           {"n", x.size()}, {"lo", number_json(a.lo)}, {"hi", number_json(a.hi)}};
    for (const auto& [name, r] : results) {
      j[name] = number_json(scale.from_unit(r.value));
      j["diagnostics"][name] = diagnostics_json(r.diagnostics, scale);
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [name, r] : results) out << name << ' ' << format_number(scale.from_unit(r.value)) << '\n';
  }
  return 0;
}

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<Method> methods;
  for (const std::string& name : names) methods.push_back(parse_method(name));
  if (methods.empty()) throw std::invalid_argument("no methods given");
  return methods;
}

struct ExperimentArgs {
  std::string distribution = "uniform";
  std::string discrete_file;
  double lo = 0.0;
  double hi = 1.0;
  std::vector<int> ns;
  std::vector<double> alphas;
  std::int64_t trials = 0;
  std::vector<std::string> methods{"ours"};
  std::string output;
  std::string format = "csv";
};

DistributionSpec load_discrete_file(const std::string& path, const RescaleSpec& scale) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<double> support;
  std::vector<double> probs;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    const std::vector<std::string> f = split_csv_record(line);
    if (f.size() != 2) throw std::invalid_argument("line " + std::to_string(number) + ": expected value,probability");
    support.push_back(scale.to_unit(parse_datum(f[0], number)));
    probs.push_back(parse_datum(f[1], number));
  }
  double total = 0.0;
  for (double p : probs) total += p;
  if (!(std::abs(total - 1.0) <= 1e-6))
    throw std::invalid_argument("discrete probabilities sum to " + format_number(total) + ", not 1");
  for (double& p : probs) p /= total;
  return DistributionSpec::discrete(std::move(support), std::move(probs),
                                    "file:" + std::filesystem::path(path).filename().string());
}

DistributionSpec experiment_distribution(const ExperimentArgs& a) {
  if (!a.discrete_file.empty()) return load_discrete_file(a.discrete_file, RescaleSpec(a.lo, a.hi));
  return parse_distribution(a.distribution);
}

ResultFormat parse_format(const std::string& f) {
  if (f == "csv") return ResultFormat::kCsv;
  if (f == "json") return ResultFormat::kJson;
  throw std::invalid_argument("unknown format '" + f + "'");
}

void emit_rows(const std::vector<ExperimentRow>& rows, const GlobalOptions& g, const ExperimentArgs& a,
               std::ostream& out) {
  if (!a.output.empty()) write_results(rows, std::filesystem::path(a.output), parse_format(a.format));
  if (g.json) {
    write_results(rows, out, ResultFormat::kJson);
    return;
  }
  out << "distribution n alpha method metric value stderr\n";
  for (const ExperimentRow& r : rows) {
    out << r.distribution << ' ' << r.n << ' ' << format_number(r.alpha) << ' ' << r.method << ' ' << r.metric
        << ' ' << format_number(r.value) << ' ' << format_number(r.standard_error) << '\n';
  }
}

ExperimentConfig experiment_config(const GlobalOptions& g, const ExperimentArgs& a) {
  ExperimentConfig config;
  config.trials = a.trials;
  config.methods = parse_methods(a.methods);
  config.seed = g.seed;
  config.threads = g.threads;
  config.options = method_options(g);
  return config;
}

int cmd_coverage(const GlobalOptions& g, ExperimentArgs a, std::ostream& out) {
  if (a.ns.empty()) a.ns = {10};
  if (a.alphas.empty()) a.alphas = {0.05, 0.1, 0.2, 0.3, 0.4, 0.5};
  const DistributionSpec spec = experiment_distribution(a);
  const ExperimentConfig config = experiment_config(g, a);
  std::vector<ExperimentRow> rows;
  for (int n : a.ns) {
    std::vector<ExperimentRow> part = coverage_experiment(spec, n, a.alphas, config);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  emit_rows(rows, g, a, out);
  return 0;
}

int cmd_tightness(const GlobalOptions& g, ExperimentArgs a, std::ostream& out) {
  if (a.ns.empty()) a.ns = {10, 100, 1000};
  const DistributionSpec spec = experiment_distribution(a);
  const ExperimentConfig config = experiment_config(g, a);
  emit_rows(tightness_experiment(spec, a.ns, g.alpha, config), g, a, out);
  return 0;
}

struct WorstcaseArgs {
  int n = 0;
  double k = 0.0;
  std::optional<double> mu;
};

int cmd_worstcase(const GlobalOptions& g, const WorstcaseArgs& a, std::ostream& out) {
  if (a.mu) {
    const HalfBernoulliSpec spec(a.k, *a.mu);
    const int j = j_min(spec, a.n, g.alpha);
    const double failure = failure_probability(spec, a.n, g.alpha);
    if (g.json) {
      out << Json{{"n", a.n}, {"alpha", number_json(g.alpha)}, {"k", number_json(a.k)},
                  {"mu", number_json(*a.mu)}, {"p_k", number_json(spec.pk())}, {"j_min", j},
                  {"failure_probability", number_json(failure)}}
                 .dump(2)
          << '\n';
    } else {
      out << "n " << a.n << "\nalpha " << format_number(g.alpha) << "\nk " << format_number(a.k) << "\nmu "
          << format_number(*a.mu) << "\np_k " << format_number(spec.pk()) << "\nj_min " << j
          << "\nfailure_probability " << format_number(failure) << '\n';
    }
    return 0;
  }
  Json rows = Json::array();
  if (!g.json) out << "j p_k k mu failure_probability\n";
  for (int j = 1; j <= a.n; ++j) {
    const double pk = worst_case_pk(j, a.n, g.alpha);
    const double mu = 1.0 - pk * (1.0 - a.k);
    const double failure = worst_case_failure_probability(j, a.n, g.alpha);
    if (g.json) {
      rows.push_back({{"j", j}, {"p_k", number_json(pk)}, {"k", number_json(a.k)}, {"mu", number_json(mu)},
                      {"failure_probability", number_json(failure)}});
    } else {
      out << j << ' ' << format_number(pk) << ' ' << format_number(a.k) << ' ' << format_number(mu) << ' '
          << format_number(failure) << '\n';
    }
  }
  if (g.json) out << rows.dump(2) << '\n';
  return 0;
}

// Expands "--config FILE": each key=value line becomes "--key=value" right
// after the subcommand, unless the same flag is also given explicitly.
std::vector<std::string> expand_config(std::vector<std::string> args,
                                       const std::vector<std::string>& subcommands) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");

  const auto given = [&](const std::string& key) {
    for (const std::string& arg : args)
      if (arg == "--" + key || arg.rfind("--" + key + "=", 0) == 0) return true;
    return false;
  };
  std::vector<std::string> extra;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(number) + ": expected key=value");
    const std::string key(trim(t.substr(0, eq)));
    const std::string value(trim(t.substr(eq + 1)));
    if (key.empty() || given(key)) continue;
    if (value == "true") {
      extra.push_back("--" + key);
    } else if (value != "false") {
      extra.push_back("--" + key + "=" + value);
    }
  }
  auto at = args.end();
  for (auto it = args.begin() + 1; it != args.end(); ++it) {
    if (std::find(subcommands.begin(), subcommands.end(), *it) != subcommands.end()) {
      at = it + 1;
      break;
    }
  }
  args.insert(at, extra.begin(), extra.end());
  return args;
}

void add_experiment_options(CLI::App& sub, ExperimentArgs& a, std::int64_t default_trials) {
  a.trials = default_trials;
  sub.add_option("--distribution", a.distribution,
                 "uniform | beta:a,b | bernoulli:p | half-bernoulli:k,mu | age-like")
      ->capture_default_str();
  sub.add_option("--discrete-file", a.discrete_file, "two-column CSV: value,probability");
  sub.add_option("--lo", a.lo, "lower end of the support of --discrete-file")->capture_default_str();
  sub.add_option("--hi", a.hi, "upper end of the support of --discrete-file")->capture_default_str();
  sub.add_option("--n", a.ns, "sample sizes")->delimiter(',');
  sub.add_option("--trials", a.trials, "trials per grid point")->capture_default_str()->check(CLI::PositiveNumber);
  sub.add_option("--methods", a.methods, "methods to compare")->delimiter(',')->capture_default_str();
  sub.add_option("--output", a.output, "result file");
  sub.add_option("--format", a.format, "csv | json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

RescaleSpec::RescaleSpec(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
    throw std::invalid_argument("rescale: need finite lo < hi");
}

double RescaleSpec::to_unit(double x) const {
  if (!(x >= lo_ && x <= hi_))
    throw std::invalid_argument("value " + format_number(x) + " outside [" + format_number(lo_) + ", " +
                                format_number(hi_) + "]");
  return std::clamp((x - lo_) / (hi_ - lo_), 0.0, 1.0);
}

std::vector<double> read_data(std::istream& in, std::optional<int> column, bool skip_header) {
  if (column && *column < 1) throw std::invalid_argument("--column is 1-based");
  std::vector<double> values;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (skip_header && number == 1) continue;
    if (trim(line).empty()) continue;
    if (!column) {
      values.push_back(parse_datum(line, number));
      continue;
    }
    const std::vector<std::string> fields = split_csv_record(line);
    if (static_cast<std::size_t>(*column) > fields.size())
      throw std::invalid_argument("line " + std::to_string(number) + ": no column " + std::to_string(*column));
    values.push_back(parse_datum(fields[static_cast<std::size_t>(*column - 1)], number));
  }
  return values;
}

std::vector<double> read_data(const std::filesystem::path& path, std::optional<int> column, bool skip_header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return read_data(in, column, skip_header);
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Confidence bounds on the mean of a bounded random variable", "meanbound"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--alpha", g.alpha, "failure rate")->capture_default_str();
  app.add_option("--method", g.method, "bound method")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--mc-samples", g.mc_samples, "Monte Carlo repetitions l")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--threads", g.threads, "worker threads, 0 = all cores")->capture_default_str();
  app.add_option("--resamples", g.resamples, "bootstrap resamples")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--exact-max-n", g.exact_max_n, "largest n for which 'ours' is computed exactly")
      ->capture_default_str();
  app.add_option("--config", "flat key=value file mirroring the flags");

  BoundArgs bound_args;
  CLI::App* bound = app.add_subcommand("bound", "bound the mean of a data file");
  bound->add_option("data", bound_args.data, "data file, '-' for stdin")->capture_default_str();
  bound->add_option("--column", bound_args.column, "1-based CSV column");
  bound->add_flag("--skip-header", bound_args.skip_header, "ignore the first line");
  bound->add_option("--lo", bound_args.lo, "lower end of the support")->capture_default_str();
  bound->add_option("--hi", bound_args.hi, "upper end of the support")->capture_default_str();
  bound->add_option("--side", bound_args.side, "upper | lower | two-sided")
      ->capture_default_str()
      ->check(CLI::IsMember({"upper", "lower", "two-sided"}));

  ExperimentArgs coverage_args;
  CLI::App* coverage = app.add_subcommand("coverage", "estimate coverage by simulation");
  add_experiment_options(*coverage, coverage_args, 10000);
  coverage->add_option("--alphas", coverage_args.alphas, "failure rates")->delimiter(',');

  ExperimentArgs tightness_args;
  CLI::App* tightness = app.add_subcommand("tightness", "mean upper bound by simulation");
  add_experiment_options(*tightness, tightness_args, 1000);

  WorstcaseArgs worst_args;
  CLI::App* worstcase = app.add_subcommand("worstcase", "worst-case two-point distributions");
  worstcase->add_option("--n", worst_args.n, "sample size")->required()->check(CLI::PositiveNumber);
  worstcase->add_option("--k", worst_args.k, "low support point")->capture_default_str();
  worstcase->add_option("--mu", worst_args.mu, "evaluate a single mean instead of the table");

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = expand_config(std::move(args), {"bound", "coverage", "tightness", "worstcase"});
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(std::move(reversed));

    if (bound->parsed()) return cmd_bound(g, bound_args, out, err);
    if (coverage->parsed()) return cmd_coverage(g, coverage_args, out);
    if (tightness->parsed()) return cmd_tightness(g, tightness_args, out);
    return cmd_worstcase(g, worst_args, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid_argument: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: runtime: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace meanbound::cli
