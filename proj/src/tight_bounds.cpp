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

#include "divbound/tight_bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <sstream>
#include <stdexcept>

#include "divbound/rng.hpp"

namespace divbound::bounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGapThreshold = -1e-9;

std::string digest_pair(std::span<const double> p, std::span<const double> q, double qv) {
  std::ostringstream os;
  os.precision(17);
  os << "q=" << qv << ";P=";
  for (double x : p) os << x << ",";
  os << ";Q=";
  for (double x : q) os << x << ",";
  return digest_string(os.str());
}

double golden_section_min(const std::function<double(double)>& f, double lo,
                          double hi, double width) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > width) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  return std::min(f(mid), std::min(fc, fd));
}

using Kernel = std::function<double(std::span<const double>, std::span<const double>)>;

Kernel make_kernel(MinimizedDivergence which, double qv) {
  if (which == MinimizedDivergence::JensenShannonTsallis) {
    return [qv](std::span<const double> a, std::span<const double> b) {
      return detail::jensen_shannon_tsallis(a, b, qv);
    };
  }
  return [qv](std::span<const double> a, std::span<const double> b) {
    return detail::jeffrey(a, b, qv);
  };
}

double brute_force_support2(const Kernel& kernel, double eps, int grid) {
  auto eval = [&](double x, double s) {
    const double y = x + s * eps;
    if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) return kInf;
    const std::array<double, 2> p{x, 1.0 - x};
    const std::array<double, 2> q{y, 1.0 - y};
    return kernel(p, q);
  };
  double best = kInf, best_x = 0.0, best_s = 1.0;
  for (int i = 0; i <= grid; ++i) {
    const double x = static_cast<double>(i) / grid;
    for (double s : {1.0, -1.0}) {
      const double v = eval(x, s);
      if (v < best) {
        best = v;
        best_x = x;
        best_s = s;
      }
    }
  }
  // local refinement around the best cell, staying feasible
  const double h = 1.0 / grid;
  double lo = std::max(best_x - h, best_s > 0 ? 0.0 : eps);
  double hi = std::min(best_x + h, best_s > 0 ? 1.0 - eps : 1.0);
  if (lo < hi) {
    const double s = best_s;
    best = std::min(best, golden_section_min([&](double x) { return eval(x, s); },
                                             lo, hi, 1e-10));
  }
  return best;
}

// Perturbation directions with zero sum and l1 norm 2*eps on support 3,
// parametrized by an angle in the zero-sum plane.
struct Direction3 {
  std::array<double, 3> v;
};

Direction3 direction3(double theta, double eps) {
  constexpr double inv_sqrt2 = 0.7071067811865476;
  constexpr double inv_sqrt6 = 0.4082482904638630;
  const double c = std::cos(theta), s = std::sin(theta);
  std::array<double, 3> w{c * inv_sqrt2 + s * inv_sqrt6,
                          -c * inv_sqrt2 + s * inv_sqrt6,
                          -2.0 * s * inv_sqrt6};
  const double l1 = std::abs(w[0]) + std::abs(w[1]) + std::abs(w[2]);
  const double scale = 2.0 * eps / l1;
  return Direction3{{w[0] * scale, w[1] * scale, w[2] * scale}};
}

// Builds the pair (P, P + v(theta)); infeasible samples are rejected.
bool make_pair3(double p1, double p2, const Direction3& dir,
                std::array<double, 3>& p, std::array<double, 3>& q) {
  const double p3 = 1.0 - p1 - p2;
  if (p1 < 0.0 || p2 < 0.0 || p3 < 0.0) return false;
  p = {p1, p2, p3};
  for (int k = 0; k < 3; ++k) {
    const double val = p[k] + dir.v[k];
    if (val < -1e-15) return false;
    q[k] = std::max(val, 0.0);
  }
  return true;
}

double brute_force_support3(const Kernel& kernel, double eps, int grid) {
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<Direction3> dirs(static_cast<std::size_t>(grid));
  for (int t = 0; t < grid; ++t) {
    dirs[static_cast<std::size_t>(t)] = direction3(two_pi * t / grid, eps);
  }

  double best = kInf;
  double best_p1 = 1.0 / 3, best_p2 = 1.0 / 3, best_theta = 0.0;
  std::array<double, 3> p{}, q{};
  for (int t = 0; t < grid; ++t) {
    const Direction3& dir = dirs[static_cast<std::size_t>(t)];
    for (int i = 0; i <= grid; ++i) {
      const double p1 = static_cast<double>(i) / grid;
      for (int j = 0; j <= grid - i; ++j) {
        const double p2 = static_cast<double>(j) / grid;
        if (!make_pair3(p1, p2, dir, p, q)) continue;
        const double v = kernel(p, q);
        if (v < best) {
          best = v;
          best_p1 = p1;
          best_p2 = p2;
          best_theta = two_pi * t / grid;
        }
      }
    }
  }

  // pattern-search refinement in (p1, p2, theta)
  auto eval = [&](double p1, double p2, double theta) {
    const Direction3 dir = direction3(theta, eps);
    return make_pair3(p1, p2, dir, p, q) ? kernel(p, q) : kInf;
  };
  double hp = 1.0 / grid;
  double ht = two_pi / grid;
  for (int iter = 0; iter < 400 && hp > 1e-10; ++iter) {
    bool improved = false;
    const std::array<std::array<double, 3>, 6> moves{{{hp, 0, 0},
                                                      {-hp, 0, 0},
                                                      {0, hp, 0},
                                                      {0, -hp, 0},
                                                      {0, 0, ht},
                                                      {0, 0, -ht}}};
    for (const auto& m : moves) {
      const double v = eval(best_p1 + m[0], best_p2 + m[1], best_theta + m[2]);
      if (v < best) {
        best = v;
        best_p1 += m[0];
        best_p2 += m[1];
        best_theta += m[2];
        improved = true;
      }
    }
    if (!improved) {
      hp *= 0.5;
      ht *= 0.5;
    }
  }
  return best;
}

}  // namespace

ConstraintEps::ConstraintEps(double eps) : eps_(eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("total variation constraint must be in [0, 1] (got " +
                                std::to_string(eps) + ")");
  }
}

double gilardoni_infimum(const DivergenceSpec& spec, ConstraintEps eps) {
  if (!generator_vanishes_at_one(spec)) {
    throw std::invalid_argument("generator of '" + spec.name + "' does not vanish at 1");
  }
  if (!satisfies_symmetry_condition(spec)) {
    throw std::invalid_argument("generator of '" + spec.name +
                                "' fails the symmetry condition f(u) = u f(1/u) + c (u-1)");
  }
  const double e = eps.value();
  if (e == 1.0) {
    auto h = [&](double u) { return 2.0 * spec.generator(u) / (u + 1.0); };
    const double lim = detail::limit_sequence(h(1e6), h(1e9), h(1e12));
    if (!std::isfinite(lim)) return kInf;
    return lim - 2.0 * spec.derivative_at_one;
  }
  const double u = (1.0 + e) / (1.0 - e);
  return (1.0 - e) * spec.generator(u) - 2.0 * spec.derivative_at_one * e;
}

std::pair<Distribution, Distribution> extremal_pair(ConstraintEps eps) {
  const double lo = (1.0 - eps.value()) / 2.0;
  const double hi = 1.0 - lo;
  return {Distribution({lo, hi}), Distribution({hi, lo})};
}

double jst_min(ConstraintEps eps, QParam q) {
  const double e = eps.value();
  return q_xlogx(1.0 - e, q) + q_xlogx(1.0 + e, q);
}

double jeffrey_min(ConstraintEps eps, QParam q) {
  const double e = eps.value();
  if (e == 1.0) {
    return q.value() >= 1.0 ? kInf : 1.0 / (1.0 - q.value());
  }
  const double a = 1.0 - e, b = 1.0 + e;
  return -0.5 * (b * q_log(a / b, q) + a * q_log(b / a, q));
}

double q_pinsker_gap(const Distribution& p, const Distribution& q, QParam qp) {
  const double d = total_variation(p, q);
  const double dq = tsallis_divergence(p, q, qp);
  if (dq == kInf) return kInf;
  return dq - 2.0 * d * d;
}

std::optional<Counterexample> counterexample_search(QParam q, std::size_t trials,
                                                    std::uint64_t seed) {
  const double qv = q.value();
  if (!(qv < 1.0)) {
    throw std::invalid_argument("counterexample search requires 0 < q < 1 (got " +
                                std::to_string(qv) + ")");
  }
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  auto gap_of = [qv](std::span<const double> p, std::span<const double> r) {
    const double d = detail::total_variation(p, r);
    return detail::tsallis(p, r, qv) - 2.0 * d * d;
  };

  // Phase 1: deterministic sweep of two-point pairs. The binary inequality
  // behind the bound is where violations are easiest to locate.
  const std::size_t sweep_budget = (trials + 1) / 2;
  const std::size_t side =
      std::max<std::size_t>(2, static_cast<std::size_t>(std::sqrt(static_cast<double>(sweep_budget))));
  std::size_t used = 0;
  for (std::size_t i = 0; i < side && used < sweep_budget; ++i) {
    for (std::size_t j = 0; j < side && used < sweep_budget; ++j) {
      ++used;
      if (i == j) continue;
      const double x = (static_cast<double>(i) + 0.5) / static_cast<double>(side);
      const double y = (static_cast<double>(j) + 0.5) / static_cast<double>(side);
      const std::array<double, 2> p{x, 1.0 - x};
      const std::array<double, 2> r{y, 1.0 - y};
      const double gap = gap_of(p, r);
      if (gap < kGapThreshold) {
        return Counterexample{Distribution({p[0], p[1]}), Distribution({r[0], r[1]}), gap};
      }
    }
  }

  // Phase 2: seeded random pairs on supports 2-5.
  Rng rng(seed);
  for (std::size_t t = used; t < trials; ++t) {
    const std::size_t n = 2 + (t % 4);
    const std::vector<double> p = rng.simplex(n);
    const std::vector<double> r = rng.simplex(n);
    const double gap = gap_of(p, r);
    if (gap < kGapThreshold) {
      return Counterexample{Distribution(p), Distribution(r), gap};
    }
  }
  return std::nullopt;
}

double brute_force_min(MinimizedDivergence which, QParam q, ConstraintEps eps,
                       int support, int grid) {
  if (support != 2 && support != 3) {
    throw std::invalid_argument("brute-force minimization supports alphabet sizes 2 and 3 only");
  }
  if (grid < 50) {
    throw std::invalid_argument("grid resolution must be at least 50");
  }
  const Kernel kernel = make_kernel(which, q.value());
  return support == 2 ? brute_force_support2(kernel, eps.value(), grid)
                      : brute_force_support3(kernel, eps.value(), grid);
}

std::vector<BoundReport> verify_classical_bounds(const Distribution& p,
                                                 const Distribution& q, QParam qp,
                                                 double tol) {
  const double qv = qp.value();
  const double d = total_variation(p, q);
  const std::string digest = digest_pair(p.span(), q.span(), qv);

  std::vector<BoundReport> reports;
  reports.push_back(make_bound_report("jst_lower_bound", jensen_shannon_tsallis(p, q, qp),
                                      jst_min(d, qp), tol, digest));
  reports.push_back(make_bound_report("jeffrey_lower_bound", jeffrey_tsallis(p, q, qp),
                                      jeffrey_min(d, qp), tol, digest));
  if (qv >= 1.0) {
    reports.push_back(
        make_bound_report("q_pinsker", q_pinsker_gap(p, q, qp), 0.0, tol, digest));
  }
  return reports;
}

}  // namespace divbound::bounds
