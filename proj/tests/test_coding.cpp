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

#include <cmath>
#include <doctest.h>
#include <stdexcept>

#include "divbound/coding.hpp"
#include "divbound/divergence.hpp"
#include "divbound/q_functions.hpp"
#include "divbound/rng.hpp"
#include "oracles.hpp"

using divbound::Distribution;
using namespace divbound::coding;

namespace {
const Source kRemarkSource{Distribution({0.5, 0.3, 0.2})};
const Code kRemarkCode{{1, 2, 3}, 2};
}  // namespace

TEST_SUITE("coding") {

TEST_CASE("type validation") {
  CHECK_THROWS_AS(Source(Distribution({1.0, 0.0})), std::invalid_argument);
  CHECK_THROWS_AS(Code({0, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Code({1, 2}, 1), std::invalid_argument);
  CHECK(kRemarkCode.kraft_feasible());
  CHECK_FALSE(Code({1, 1, 1}, 2).kraft_feasible());
}

TEST_CASE("kraft sums") {
  CHECK(kraft_sum(kRemarkCode) == 0.875);  // 7/8 exactly
  CHECK(kraft_sum(Code({1, 1}, 2)) == 1.0);
  CHECK(kraft_sum(Code({2, 2, 2, 2}, 2)) == 1.0);
}

TEST_CASE("q-deformed kraft sum") {
  divbound::Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> lengths;
    for (int i = 0; i < 5; ++i) lengths.push_back(1 + static_cast<int>(rng.integer(8)));
    const Code code{lengths, 2 + static_cast<int>(rng.integer(2))};
    CHECK(std::abs(kraft_sum_q(code, 1.0) - kraft_sum(code)) <= 1e-14);
  }
  CHECK(std::abs(kraft_sum_q(kRemarkCode, 1.5) - oracles::kKraftQ15) <= 1e-10);
  // independent route: sum of q-exponentials
  double direct = 0.0;
  for (int l : kRemarkCode.lengths) direct += divbound::q_exp(-l * std::log(2.0), 1.5);
  CHECK(std::abs(kraft_sum_q(kRemarkCode, 1.5) - direct) <= 1e-15);
  // cutoff kills long codewords for q < 1, not for q > 1
  CHECK(kraft_sum_q(Code({10}, 2), 0.5) == 0.0);
  CHECK(std::abs(kraft_sum_q(Code({10}, 2), 3.0) - oracles::kQExpNeg10Ln2Q3) <= 1e-12);
}

TEST_CASE("induced distributions") {
  const Distribution q1 = induced_distribution(kRemarkCode, 1.0, BoundVariant::Theorem1);
  CHECK(std::abs(q1[0] - 4.0 / 7) <= 1e-15);
  CHECK(std::abs(q1[1] - 2.0 / 7) <= 1e-15);
  CHECK(std::abs(q1[2] - 1.0 / 7) <= 1e-15);

  const Distribution u = induced_distribution(Code({1, 1}, 2), 1.0, BoundVariant::PropA);
  CHECK(u[0] == 0.5);

  // the two variants coincide at q = 1
  const Distribution qa = induced_distribution(kRemarkCode, 1.0, BoundVariant::PropA);
  for (std::size_t i = 0; i < qa.size(); ++i) CHECK(std::abs(qa[i] - q1[i]) <= 1e-14);

  // every weight cut off -> no distribution
  CHECK_THROWS_AS(induced_distribution(Code({10, 12}, 2), 0.5, BoundVariant::PropA),
                  std::runtime_error);
}

TEST_CASE("base-d entropy") {
  CHECK(std::abs(tsallis_entropy_base_d(kRemarkSource, 2, 1.0) - oracles::kEntropyBits) <= 1e-10);
  CHECK(std::abs(tsallis_entropy_base_d(kRemarkSource, 2, 1.0) -
                 oracles::shannon_bits(kRemarkSource.dist.span())) <= 1e-12);
  const Source uniform2{Distribution({0.5, 0.5})};
  CHECK(std::abs(tsallis_entropy_base_d(uniform2, 2, 1.0) - 1.0) <= 1e-15);
  const Source degenerate{Distribution({1.0})};
  CHECK(tsallis_entropy_base_d(degenerate, 2, 1.0) == 0.0);
  CHECK(tsallis_entropy_base_d(degenerate, 2, 2.0) == 0.0);
}

TEST_CASE("q-average code length") {
  for (auto variant : {BoundVariant::Theorem1, BoundVariant::PropA}) {
    CHECK(std::abs(avg_codelength_q(kRemarkSource, kRemarkCode, 1.0, variant) - 1.7) <= 1e-14);
  }
  CHECK(std::abs(avg_codelength_q(kRemarkSource, kRemarkCode, 1.5, BoundVariant::PropA) -
                 oracles::kNbarQ15PropA) <= 1e-10);
  CHECK(std::abs(avg_codelength_q(kRemarkSource, kRemarkCode, 1.5, BoundVariant::Theorem1) -
                 oracles::kNbarQ15Theorem1) <= 1e-10);
  CHECK_THROWS_AS(avg_codelength_q(kRemarkSource, Code({1, 1}, 2), 1.0, BoundVariant::Theorem1),
                  std::invalid_argument);
}

TEST_CASE("redundancy gap and bound") {
  CHECK(std::abs(delta_dq(kRemarkSource, kRemarkCode, 1.0, BoundVariant::Theorem1) -
                 oracles::kDeltaQ1) <= 1e-10);
  CHECK(std::abs(delta_dq(kRemarkSource, kRemarkCode, 1.5, BoundVariant::Theorem1) -
                 oracles::kDeltaQ15) <= 1e-10);
  CHECK(std::abs(redundancy_bound(kRemarkSource, kRemarkCode, 1.0, BoundVariant::Theorem1) -
                 oracles::kBoundQ1) <= 1e-10);
  CHECK(std::abs(redundancy_bound(kRemarkSource, kRemarkCode, 1.5, BoundVariant::Theorem1) -
                 oracles::kBoundQ15) <= 1e-10);

  // a code matched to a dyadic source has no redundancy at all
  const Source dyadic{Distribution({0.5, 0.25, 0.25})};
  const Code matched{{1, 2, 2}, 2};
  CHECK(std::abs(delta_dq(dyadic, matched, 1.0, BoundVariant::Theorem1)) <= 1e-14);
  CHECK(redundancy_bound(dyadic, matched, 1.0, BoundVariant::Theorem1) <= 1e-7);
  CHECK(l1_deviation(dyadic, matched, 1.0, BoundVariant::Theorem1) <= 1e-14);
}

TEST_CASE("redundancy bound preconditions") {
  CHECK_THROWS_AS(redundancy_bound(kRemarkSource, kRemarkCode, 0.5, BoundVariant::Theorem1),
                  std::invalid_argument);
  const Source s3{Distribution({0.4, 0.3, 0.3})};
  CHECK_THROWS_AS(redundancy_bound(s3, Code({1, 1, 1}, 2), 1.5, BoundVariant::Theorem1),
                  std::invalid_argument);
  // q-deformed Kraft sum of the worked example exceeds 1 at q = 1.5
  CHECK(kraft_sum_q(kRemarkCode, 1.5) > 1.0);
  CHECK_THROWS_AS(redundancy_bound(kRemarkSource, kRemarkCode, 1.5, BoundVariant::PropA),
                  std::invalid_argument);
}

TEST_CASE("shannon-fano lengths") {
  CHECK(shannon_fano_lengths(kRemarkSource, 2).lengths == std::vector<int>{1, 2, 3});
  const Source quarters{Distribution({0.25, 0.25, 0.25, 0.25})};
  CHECK(shannon_fano_lengths(quarters, 2).lengths == std::vector<int>{2, 2, 2, 2});
  const Source thirds{Distribution({1.0 / 3, 1.0 / 3, 1.0 / 3})};
  CHECK(shannon_fano_lengths(thirds, 3).lengths == std::vector<int>{1, 1, 1});
}

TEST_CASE("huffman lengths") {
  CHECK(huffman_lengths(Source{Distribution({0.5, 0.25, 0.25})}).lengths ==
        std::vector<int>{1, 2, 2});
  CHECK(huffman_lengths(kRemarkSource).lengths == std::vector<int>{1, 2, 2});
  CHECK(huffman_lengths(Source{Distribution({0.25, 0.25, 0.25, 0.25})}).lengths ==
        std::vector<int>{2, 2, 2, 2});
  CHECK(huffman_lengths(Source{Distribution({0.9, 0.1})}).lengths ==
        std::vector<int>{1, 1});
  CHECK_THROWS_AS(huffman_lengths(Source{Distribution({1.0})}), std::invalid_argument);
}

TEST_CASE("code constructions satisfy their kraft guarantees") {
  divbound::Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 11;
    const Source source{Distribution(rng.simplex(n))};
    const int d = 2 + static_cast<int>(rng.integer(2));
    CHECK(kraft_sum(shannon_fano_lengths(source, d)) <= 1.0 + 1e-12);
    CHECK(kraft_sum(huffman_lengths(source)) == 1.0);  // complete binary tree
  }
}

TEST_CASE("redundancy bound dominates the l1 deviation") {
  divbound::Rng rng(19);
  int prop_a_checked = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + t % 9;
    const int d = 2 + t % 2;
    const Source source{Distribution(rng.simplex(n))};
    const Code code = shannon_fano_lengths(source, d);
    for (double q : {1.0, 1.25, 1.5, 2.0}) {
      CHECK(l1_deviation(source, code, q, BoundVariant::Theorem1) <=
            redundancy_bound(source, code, q, BoundVariant::Theorem1) + 1e-12);
      if (kraft_sum_q(code, q) <= 1.0 + 1e-12) {
        ++prop_a_checked;
        CHECK(l1_deviation(source, code, q, BoundVariant::PropA) <=
              redundancy_bound(source, code, q, BoundVariant::PropA) + 1e-12);
      }
    }
  }
  CHECK(prop_a_checked > 300);  // q = 1 always qualifies, plus skewed small alphabets
}

TEST_CASE("variants coincide at q = 1") {
  divbound::Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 9;
    const Source source{Distribution(rng.simplex(n))};
    const Code code = shannon_fano_lengths(source, 2);
    CHECK(std::abs(avg_codelength_q(source, code, 1.0, BoundVariant::Theorem1) -
                   avg_codelength_q(source, code, 1.0, BoundVariant::PropA)) <= 1e-12);
    CHECK(std::abs(delta_dq(source, code, 1.0, BoundVariant::Theorem1) -
                   delta_dq(source, code, 1.0, BoundVariant::PropA)) <= 1e-12);
    CHECK(std::abs(redundancy_bound(source, code, 1.0, BoundVariant::Theorem1) -
                   redundancy_bound(source, code, 1.0, BoundVariant::PropA)) <= 1e-12);
    const Distribution a = induced_distribution(code, 1.0, BoundVariant::Theorem1);
    const Distribution b = induced_distribution(code, 1.0, BoundVariant::PropA);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-12);
  }
}

TEST_CASE("delta monotonicity for complete codes") {
  auto reports = prop3_check(kRemarkSource, huffman_lengths(kRemarkSource),
                             std::vector<double>{1.0, 1.5, 2.0, 3.0});
  CHECK(divbound::all_hold(reports));
  CHECK(std::abs(reports[0].slack) <= 1e-15);  // q = 1 compares delta1 with itself

  divbound::Rng rng(47);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 9;
    const Source source{Distribution(rng.simplex(n))};
    const Code huff = huffman_lengths(source);
    CHECK(divbound::all_hold(
        prop3_check(source, huff, std::vector<double>{1.1, 1.5, 2.0, 3.0, 4.0})));
  }

  // incomplete codes are outside the claim
  CHECK_THROWS_AS(prop3_check(kRemarkSource, kRemarkCode, std::vector<double>{1.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(prop3_check(kRemarkSource, huffman_lengths(kRemarkSource),
                              std::vector<double>{0.5}),
                  std::invalid_argument);
}

TEST_CASE("a deformed bound can beat the classical one when kraft < 1") {
  const Code sf = shannon_fano_lengths(kRemarkSource, 2);
  CHECK(kraft_sum(sf) < 1.0);
  CHECK(redundancy_bound(kRemarkSource, sf, 1.5, BoundVariant::Theorem1) <
        redundancy_bound(kRemarkSource, sf, 1.0, BoundVariant::Theorem1));
}

TEST_CASE("classical-limit regression") {
  divbound::Rng rng(53);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + t % 6;
    const Source source{Distribution(rng.simplex(n))};
    const Code code = shannon_fano_lengths(source, 2);
    for (double dq : {1e-6, -1e-6}) {
      const double q = 1.0 + dq;
      CHECK(std::abs(kraft_sum_q(code, q) - kraft_sum(code)) <= 1e-4);
      CHECK(std::abs(tsallis_entropy_base_d(source, 2, q) -
                     tsallis_entropy_base_d(source, 2, 1.0)) <= 1e-4);
      for (auto variant : {BoundVariant::Theorem1, BoundVariant::PropA}) {
        CHECK(std::abs(avg_codelength_q(source, code, q, variant) -
                       avg_codelength_q(source, code, 1.0, variant)) <= 1e-4);
      }
      if (dq > 0 || kraft_sum_q(code, q) <= 1.0 + 1e-12) {
        CHECK(std::abs(redundancy_bound(source, code, std::max(q, 1.0), BoundVariant::Theorem1) -
                       redundancy_bound(source, code, 1.0, BoundVariant::Theorem1)) <= 1e-4);
      }
    }
  }
}

}  // TEST_SUITE
