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

#include <utility>
#include <vector>

#include "divbound/density_matrix.hpp"
#include "divbound/divergence.hpp"
#include "divbound/report.hpp"

namespace divbound::quantum {

/// d(rho, sigma) = (1/2) Tr |rho - sigma|, in [0, 1].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// F(rho, sigma) = Tr |rho^{1/2} sigma^{1/2}| = Tr sqrt(sigma^{1/2} rho sigma^{1/2}).
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Tr[rho^{1/2} sigma^{1/2}] (no absolute value); at most fidelity.
double affinity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Tr[rho^s sigma^{1-s}] with matrix powers restricted to the supports, so
/// s = 0 and s = 1 use support projectors rather than the identity.
double chernoff_overlap(const DensityMatrix& rho, const DensityMatrix& sigma, double s);

struct ChernoffResult {
  double value;        // -log of the minimized overlap, +inf when it vanishes
  double s_star;       // minimizing exponent in [0, 1]
  double overlap_min;  // min_s Tr[rho^s sigma^{1-s}]
};

/// Golden-section minimization of the overlap over s in [0, 1] (width 1e-10),
/// endpoints compared explicitly to cover rank-deficient states.
ChernoffResult chernoff_minimize(const DensityMatrix& rho, const DensityMatrix& sigma);

/// C_Q(rho, sigma) = -log(min_{0<=s<=1} Tr[rho^s sigma^{1-s}]).
double chernoff_information(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Constrained minimum of C_Q at trace distance eps:
/// -(1/2) log(1 - eps^2) for eps in [0, 1), +inf at eps = 1.
double chernoff_min_closed_form(double eps);

/// D(rho|sigma) = Tr[rho (log rho - log sigma)] on the supports; +inf when
/// rho has weight outside the support of sigma.
double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// J(rho|sigma) = (D(rho|sigma) + D(sigma|rho)) / 2.
double quantum_jeffrey(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Quantum f-divergence by the spectral formula
/// sum_{i,j} f(sigma_i / rho_j) rho_j |<s_i|r_j>|^2. Requires full-rank rho
/// (the underlying relative modular operator needs rho^{-1}).
double quantum_f_divergence(const DensityMatrix& rho, const DensityMatrix& sigma,
                            const DivergenceSpec& spec);

/// Measures both states in an eigenbasis of rho - sigma. The outcome
/// distributions (P, Q) satisfy ||P - Q||_1 = Tr |rho - sigma|.
std::pair<Distribution, Distribution> dominance_measurement(const DensityMatrix& rho,
                                                            const DensityMatrix& sigma);

/// Reports the trace-distance/fidelity sandwich, the Chernoff lower bound,
/// both relative-entropy chains, the Jeffrey trace bound, monotonicity under
/// the dominance measurement, and l1 preservation of that measurement.
std::vector<BoundReport> verify_quantum_bounds(const DensityMatrix& rho,
                                               const DensityMatrix& sigma,
                                               double tol = 1e-9);

}  // namespace divbound::quantum
