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

#include <functional>
#include <span>
#include <string>
#include <utility>

#include "divbound/distribution.hpp"
#include "divbound/q_functions.hpp"

namespace divbound {

/// A Csiszar f-divergence generator: convex f with f(1) = 0.
/// symmetry_constant is the c of the symmetry condition
/// f(u) = u f(1/u) + c (u - 1); it is only meaningful for generators that
/// pass satisfies_symmetry_condition().
struct DivergenceSpec {
  std::string name;
  std::function<double(double)> generator;
  double derivative_at_one = 0.0;
  double symmetry_constant = 0.0;
};

// Generators of the divergences used in this library. The Tsallis generator
// is -t ln_q(1/t); the other two are the generators whose f-divergence equals
// the Jensen-Shannon-Tsallis and Jeffrey-Tsallis sums.
DivergenceSpec tsallis_spec(QParam q);
DivergenceSpec jensen_shannon_tsallis_spec(QParam q);
DivergenceSpec jeffrey_tsallis_spec(QParam q);

bool generator_vanishes_at_one(const DivergenceSpec& spec, double tol = 1e-12);
/// Checks f(u) - u f(1/u) - c (u-1) = 0 on u in {0.1, 0.5, 2, 10}.
bool satisfies_symmetry_condition(const DivergenceSpec& spec, double tol = 1e-9);

/// d_TV(P,Q) = (1/2) sum |P(x) - Q(x)|, in [0, 1].
double total_variation(const Distribution& p, const Distribution& q);

/// sum Q(x) f(P(x)/Q(x)). Terms with Q(x) = 0 < P(x) contribute
/// P(x) * lim_{u->inf} f(u)/u (possibly +inf); 0 * f(0/0) = 0.
double f_divergence(const Distribution& p, const Distribution& q,
                    const DivergenceSpec& spec);

/// Tsallis divergence D_q(P||Q) = sum (P - P^q Q^{1-q})/(1-q); KL at q = 1.
/// Returns +inf when q >= 1 and P is not absolutely continuous w.r.t. Q.
double tsallis_divergence(const Distribution& p, const Distribution& q, QParam qp);

/// Jensen-Shannon-Tsallis sum D_q(P||M) + D_q(Q||M), M = (P+Q)/2. Finite.
double jensen_shannon_tsallis(const Distribution& p, const Distribution& q, QParam qp);

/// Jeffrey-Tsallis divergence (D_q(P||Q) + D_q(Q||P)) / 2.
double jeffrey_tsallis(const Distribution& p, const Distribution& q, QParam qp);

/// Coarse-grains both distributions to the event A = {x : P(x) > Q(x)}:
/// returns ((P(A), 1-P(A)), (Q(A), 1-Q(A))). P(A) - Q(A) = d_TV(P,Q).
std::pair<Distribution, Distribution> binary_reduction(const Distribution& p,
                                                       const Distribution& q);

namespace detail {

// Span kernels used by the public operations and by grid searches that
// cannot afford per-sample validation.
double total_variation(std::span<const double> p, std::span<const double> q);
double tsallis(std::span<const double> p, std::span<const double> q, double qv);
double jensen_shannon_tsallis(std::span<const double> p, std::span<const double> q,
                              double qv);
double jeffrey(std::span<const double> p, std::span<const double> q, double qv);

// Limit of a sequence sampled at three geometrically spaced arguments:
// extrapolates contracting tails, returns +/-inf for diverging ones.
double limit_sequence(double v1, double v2, double v3);
double generator_limit_at_zero(const std::function<double(double)>& f);
double generator_slope_at_infinity(const std::function<double(double)>& f);

}  // namespace detail

}  // namespace divbound
