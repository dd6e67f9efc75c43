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


#include "meanbound/results_io.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>

using namespace meanbound;

namespace {

bool same(const ExperimentRow& a, const ExperimentRow& b) {
  const auto eq = [](double x, double y) { return x == y || (std::isnan(x) && std::isnan(y)); };
  return a.distribution == b.distribution && a.n == b.n && eq(a.alpha, b.alpha) && a.method == b.method &&
         a.trials == b.trials && a.metric == b.metric && eq(a.value, b.value) &&
         eq(a.standard_error, b.standard_error) && a.seed == b.seed;
}

std::vector<ExperimentRow> sample_rows() {
  return {
      {"beta(1,5)", 10, 0.05, "ours", 10000, "coverage", 0.9512, 0.0021467, 42},
      {"say \"hi\"", 3, 0.1 + 0.2, "anderson", 1, "coverage", std::numeric_limits<double>::quiet_NaN(),
       std::numeric_limits<double>::quiet_NaN(), 18446744073709551615ull},
      {"uniform", 1000, 1.0 / 3.0, "hoeffding", 7, "mean_upper_bound", 1.0 / 7.0, 1e-300, 0},
  };
}

}  // namespace

TEST_SUITE("results_io") {

TEST_CASE("csv layout") {
  std::ostringstream empty;
  write_results({}, empty, ResultFormat::kCsv);
  CHECK(empty.str() == "distribution,n,alpha,method,trials,metric,value,stderr,seed\r\n");

  std::ostringstream one;
  write_results({sample_rows()[0]}, one, ResultFormat::kCsv);
  CHECK(one.str() ==
        "distribution,n,alpha,method,trials,metric,value,stderr,seed\r\n"
        "\"beta(1,5)\",10,0.050000000000000003,ours,10000,coverage,0.95120000000000005,0.0021467000000000001,42\r\n");
}

TEST_CASE("csv round trip") {
  std::stringstream buffer;
  write_results(sample_rows(), buffer, ResultFormat::kCsv);
  const auto back = read_results_csv(buffer);
  REQUIRE(back.size() == 3);
  for (std::size_t i = 0; i < back.size(); ++i) CHECK(same(back[i], sample_rows()[i]));

  const auto path = std::filesystem::temp_directory_path() / "meanbound_rows.csv";
  write_results(sample_rows(), path, ResultFormat::kCsv);
  const auto from_file = read_results_csv(path);
  REQUIRE(from_file.size() == 3);
  CHECK(same(from_file[1], sample_rows()[1]));
  std::filesystem::remove(path);
}

TEST_CASE("csv field splitting") {
  CHECK(split_csv_record("a,\"b,c\",\"d\"\"e\",") == std::vector<std::string>{"a", "b,c", "d\"e", ""});
  CHECK_THROWS(split_csv_record("\"open"));
}

TEST_CASE("json layout") {
  std::ostringstream out;
  write_results(sample_rows(), out, ResultFormat::kJson);
  const auto j = nlohmann::json::parse(out.str());
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0]["distribution"] == "beta(1,5)");
  CHECK(j[0]["value"].get<double>() == 0.9512);
  CHECK(j[1]["value"].is_null());
  CHECK(j[1]["seed"].get<std::uint64_t>() == 18446744073709551615ull);
  const std::vector<std::string> keys{"distribution", "n", "alpha", "method", "trials", "metric", "value", "stderr", "seed"};
  const auto ordered = nlohmann::ordered_json::parse(out.str());
  std::vector<std::string> seen;
  for (const auto& item : ordered[0].items()) seen.push_back(item.key());
  CHECK(seen == keys);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(write_results(sample_rows(), std::filesystem::path("/nonexistent-dir/x.csv"), ResultFormat::kCsv),
                  std::runtime_error);
  std::istringstream bad_header("a,b\r\n");
  CHECK_THROWS_AS(read_results_csv(bad_header), std::runtime_error);
  std::istringstream short_row("distribution,n,alpha,method,trials,metric,value,stderr,seed\r\nx,1\r\n");
  CHECK_THROWS_AS(read_results_csv(short_row), std::runtime_error);
}

}
