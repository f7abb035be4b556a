// Copyright 2026 The divbound authors
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

#include <doctest.h>
#include <limits>
#include <stdexcept>
#include <string>

#include "divbound/io.hpp"
#include "divbound/quantum.hpp"

using namespace divbound;

TEST_SUITE("io") {

TEST_CASE("number formatting") {
  CHECK(io::format_number(0.875) == "0.875");
  CHECK(io::format_number(0.272669390368018) == "0.27266939");
  CHECK(io::format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(io::format_number(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("distribution json round trip") {
  const Distribution p = io::parse_distribution_json("[0.5, 0.3, 0.2]");
  CHECK(p.size() == 3);
  const Distribution back = io::parse_distribution_json(io::distribution_to_json(p));
  CHECK(back.probs() == p.probs());
}

TEST_CASE("distribution parsers enforce the invariants") {
  CHECK_THROWS_WITH_AS(io::parse_distribution_json("[0.5, 0.6]"),
                       doctest::Contains("sum to 1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(io::parse_distribution_json("[1.5, -0.5]"),
                       doctest::Contains("negative"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_distribution_json("not json"), std::runtime_error);
  CHECK_THROWS_AS(io::parse_distribution_json("{\"a\": 1}"), std::runtime_error);
  CHECK_THROWS_WITH_AS(io::parse_distribution_csv("0.5\n0.6\n"),
                       doctest::Contains("sum to 1"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_distribution_csv("0.5\noops\n"), std::runtime_error);
}

TEST_CASE("distribution csv round trip") {
  const Distribution p = io::parse_distribution_csv("0.5\n0.3\n0.2\n");
  CHECK(p.size() == 3);
  CHECK(io::parse_distribution_csv(io::distribution_to_csv(p)).probs() == p.probs());
}

TEST_CASE("source parsing") {
  const auto src = io::parse_source_csv("symbol,probability\nu1,0.5\nu2,0.3\nu3,0.2\n");
  CHECK(src.size() == 3);
  CHECK(src.labels[0] == "u1");
  const auto bare = io::parse_source_csv("a,0.5\nb,0.5\n");
  CHECK(bare.size() == 2);
  CHECK_THROWS_WITH_AS(io::parse_source_json("[0.5, 0.5, 0.0]"),
                       doctest::Contains("zero probability"), std::invalid_argument);
  const auto with_labels =
      io::parse_source_json(R"({"probs": [0.5, 0.5], "labels": ["x", "y"]})");
  CHECK(with_labels.labels[1] == "y");
}

TEST_CASE("code parsing") {
  const auto code = io::parse_code_json(R"({"d": 2, "lengths": [1, 2, 3]})");
  CHECK(code.d == 2);
  CHECK(coding::kraft_sum(code) == 0.875);
  CHECK(io::parse_code_json(io::code_to_json(code)).lengths == code.lengths);
  CHECK_THROWS_AS(io::parse_code_json(R"({"d": 2})"), std::runtime_error);
  CHECK_THROWS_WITH_AS(io::parse_code_json(R"({"d": 2, "lengths": [0]})"),
                       doctest::Contains("positive"), std::invalid_argument);
}

TEST_CASE("density matrix json round trip") {
  const quantum::DensityMatrix rho = quantum::random_density_matrix(3, 2, 21);
  const quantum::DensityMatrix back =
      io::parse_density_matrix_json(io::density_matrix_to_json(rho));
  CHECK((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-15);

  CHECK_THROWS_WITH_AS(io::parse_density_matrix_json(
                           R"({"n": 2, "re": [[0.6, 0], [0, 0.6]], "im": [[0, 0], [0, 0]]})"),
                       doctest::Contains("unit trace"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(io::parse_density_matrix_json(
                           R"({"n": 2, "re": [[0.5, 0.1], [0.2, 0.5]], "im": [[0, 0], [0, 0]]})"),
                       doctest::Contains("Hermitian"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_density_matrix_json(R"({"n": 2, "re": [[1, 0]], "im": []})"),
                  std::runtime_error);
}

TEST_CASE("report serialization") {
  std::vector<BoundReport> reports;
  reports.push_back(make_bound_report("alpha", 1.25, 1.0, 1e-9, "cafe"));
  reports.push_back(make_bound_report("beta", 0.5,
                                      std::numeric_limits<double>::infinity(), 1e-9, ""));
  const std::string csv = io::reports_to_csv(reports);
  CHECK(csv == "name,lhs,rhs,slack,holds\n"
               "alpha,1.25,1,0.25,true\n"
               "beta,0.5,inf,-inf,false\n");
  const std::string json = io::reports_to_json(reports);
  CHECK(json.find("\"rhs\": \"inf\"") != std::string::npos);
  CHECK(json.find("\"inputs_digest\": \"cafe\"") != std::string::npos);

  // a fixed input always digests to the same tag
  CHECK(digest_string("abc") == digest_string("abc"));
  CHECK(digest_string("abc") != digest_string("abd"));
}

TEST_CASE("equality reports") {
  const auto eq = make_equality_report("gamma", 2.0, 2.0, 0.0, "");
  CHECK(eq.holds);
  CHECK(eq.slack == 0.0);
  CHECK_FALSE(std::signbit(eq.slack));
  CHECK_FALSE(make_equality_report("gamma", 2.0, 2.5, 0.1, "").holds);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(make_equality_report("inf", inf, inf, 0.0, "").holds);
  CHECK_FALSE(make_equality_report("inf", inf, 2.0, 0.0, "").holds);
}

}  // TEST_SUITE
