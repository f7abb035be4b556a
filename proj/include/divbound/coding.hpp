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

#pragma once

#include <span>
#include <string>
#include <vector>

#include "divbound/distribution.hpp"
#include "divbound/q_functions.hpp"
#include "divbound/report.hpp"

namespace divbound::coding {

/// Memoryless source: strictly positive symbol probabilities, optional labels.
struct Source {
  explicit Source(Distribution dist, std::vector<std::string> labels = {});

  Distribution dist;
  std::vector<std::string> labels;

  std::size_t size() const { return dist.size(); }
};

/// Codeword length profile over a d-letter code alphabet. Lengths are in
/// code symbols; no actual codeword strings are kept.
struct Code {
  Code(std::vector<int> lengths, int d);

  std::vector<int> lengths;
  int d;

  std::size_t size() const { return lengths.size(); }
  /// Kraft-McMillan feasibility (holds for every uniquely decodable code).
  bool kraft_feasible() const;
};

/// Selects which average-length / induced-distribution family is used:
/// Theorem1 is the d^{-l} family, PropA replaces d^{-l} with
/// exp_q(-l ln d) and uses the plain weighted length sum.
enum class BoundVariant { Theorem1, PropA };

/// c_{d,l} = sum d^{-l(u)}.
double kraft_sum(const Code& code);

/// c_{d,l,q} = sum exp_q(-l(u) ln d); equals kraft_sum at q = 1.
double kraft_sum_q(const Code& code, QParam q);

/// Theorem1: d^{-l(u)} / c_{d,l}; PropA: exp_q(-l(u) ln d) / c_{d,l,q}.
/// Throws when every weight is cut off to zero.
Distribution induced_distribution(const Code& code, QParam q, BoundVariant variant);

/// H_{d,q} = -(1/ln d) sum p(u)^q ln_q p(u); Shannon entropy in base-d units
/// at q = 1.
double tsallis_entropy_base_d(const Source& source, int d, QParam q);

/// Theorem1: -(c_{d,l})^{q-1}/ln d * sum p(u)^q ln_q d^{-l(u)};
/// PropA: sum p(u)^q l(u). Both reduce to sum p(u) l(u) at q = 1.
double avg_codelength_q(const Source& source, const Code& code, QParam q,
                        BoundVariant variant);

/// avg_codelength_q - tsallis_entropy_base_d.
double delta_dq(const Source& source, const Code& code, QParam q, BoundVariant variant);

/// min{1, sqrt(delta * ln d / 2)}; upper-bounds (1/2) sum |p - Q| for the
/// variant's induced distribution. Requires q >= 1 and the variant's Kraft
/// hypothesis (c <= 1 resp. c_q <= 1).
double redundancy_bound(const Source& source, const Code& code, QParam q,
                        BoundVariant variant);

/// (1/2) sum |p(u) - Q(u)| against the variant's induced distribution.
double l1_deviation(const Source& source, const Code& code, QParam q,
                    BoundVariant variant);

/// l(u) = ceil(-log_d p(u)), exact powers of d mapping to the exact integer.
Code shannon_fano_lengths(const Source& source, int d);

/// Optimal binary prefix-code lengths by the standard merge procedure.
/// Ties merge the smallest symbol index first, then earliest created node.
/// The resulting Kraft sum is exactly 1.
Code huffman_lengths(const Source& source);

/// For each q in the grid (q >= 1), reports delta(q=1) <= delta(q) for the
/// Theorem1 variant. Requires a complete code (Kraft sum = 1 within 1e-12).
std::vector<BoundReport> prop3_check(const Source& source, const Code& code,
                                     std::span<const double> q_grid,
                                     double tol = 1e-9);

}  // namespace divbound::coding
