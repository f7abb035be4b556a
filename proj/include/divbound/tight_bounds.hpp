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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "divbound/divergence.hpp"
#include "divbound/report.hpp"

namespace divbound::bounds {

/// Target total variation distance for a constrained minimum, in [0, 1].
class ConstraintEps {
 public:
  ConstraintEps(double eps);  // implicit on purpose
  double value() const { return eps_; }

 private:
  double eps_;
};

/// Constrained infimum of a symmetric f-divergence at d_TV = eps:
/// (1-eps) f((1+eps)/(1-eps)) - 2 f'(1) eps. At eps = 1 the limit is
/// evaluated numerically and may be +inf. Rejects non-symmetric specs.
double gilardoni_infimum(const DivergenceSpec& spec, ConstraintEps eps);

/// The two-point pair ((1-eps)/2, (1+eps)/2) and its swap, which attains the
/// constrained minima. Its total variation distance equals eps.
std::pair<Distribution, Distribution> extremal_pair(ConstraintEps eps);

/// min of the Jensen-Shannon-Tsallis sum over pairs at d_TV = eps:
/// -(1-e) ln_q(1/(1-e)) - (1+e) ln_q(1/(1+e)).
double jst_min(ConstraintEps eps, QParam q);

/// min of the Jeffrey-Tsallis divergence over pairs at d_TV = eps:
/// -((1+e) ln_q((1-e)/(1+e)) + (1-e) ln_q((1+e)/(1-e))) / 2.
/// +inf at eps = 1 for q >= 1.
double jeffrey_min(ConstraintEps eps, QParam q);

/// D_q(P||Q) - 2 d_TV(P,Q)^2, i.e. the slack of the (proof-strength)
/// q-Pinsker inequality. Nonnegative for q >= 1; may be negative for q < 1.
double q_pinsker_gap(const Distribution& p, const Distribution& q, QParam qp);

struct Counterexample {
  Distribution p;
  Distribution q;
  double gap;
};

/// Searches for a q-Pinsker violation (gap < -1e-9) with 0 < q < 1:
/// a deterministic sweep of two-point pairs followed by seeded random
/// pairs on supports 2-5. Returns the first hit within the trial budget.
/// Trials are independent; a concurrent evaluation is allowed as long as the
/// reduction stays first-by-trial-index.
std::optional<Counterexample> counterexample_search(QParam q, std::size_t trials,
                                                    std::uint64_t seed);

enum class MinimizedDivergence { JensenShannonTsallis, JeffreyTsallis };

/// Grid minimization over pairs with d_TV exactly eps on supports 2 or 3,
/// with local refinement. Feasible-point sampling only, so the result is an
/// upper bound of the true constrained minimum converging as grid grows.
/// Grid cells are independent; a concurrent scan with a min-reduction yields
/// the same result.
double brute_force_min(MinimizedDivergence which, QParam q, ConstraintEps eps,
                       int support, int grid);

/// Reports: JST sum >= jst_min(d_TV, q), Jeffrey >= jeffrey_min(d_TV, q),
/// and (for q >= 1) the q-Pinsker gap >= 0.
std::vector<BoundReport> verify_classical_bounds(const Distribution& p,
                                                 const Distribution& q, QParam qp,
                                                 double tol = 1e-9);

}  // namespace divbound::bounds
