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

#include "divbound/divergence.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace divbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_same_support(std::size_t np, std::size_t nq) {
  if (np != nq) {
    throw std::invalid_argument("support size mismatch (" + std::to_string(np) +
                                " vs " + std::to_string(nq) + ")");
  }
}

std::string q_label(double q) {
  std::string s = std::to_string(q);
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

// One Tsallis summand -p ln_q(m/p) for p > 0, m > 0.
inline double tsallis_term(double p, double m, double qv) {
  if (qv == 1.0) return p * std::log(p / m);
  const double om = 1.0 - qv;
  return -p * std::expm1(om * std::log(m / p)) / om;
}

}  // namespace

DivergenceSpec tsallis_spec(QParam q) {
  const double qv = q.value();
  return DivergenceSpec{
      "tsallis(q=" + q_label(qv) + ")",
      [qv](double t) { return q_xlogx(t, qv); },
      1.0,
      0.0,
  };
}

DivergenceSpec jensen_shannon_tsallis_spec(QParam q) {
  const double qv = q.value();
  return DivergenceSpec{
      "jensen_shannon_tsallis(q=" + q_label(qv) + ")",
      [qv](double t) {
        return -t * q_log((t + 1.0) / (2.0 * t), qv) - q_log((t + 1.0) / 2.0, qv);
      },
      0.0,
      0.0,
  };
}

DivergenceSpec jeffrey_tsallis_spec(QParam q) {
  const double qv = q.value();
  return DivergenceSpec{
      "jeffrey_tsallis(q=" + q_label(qv) + ")",
      [qv](double t) { return 0.5 * (std::pow(t, qv) - 1.0) * q_log(t, qv); },
      0.0,
      0.0,
  };
}

bool generator_vanishes_at_one(const DivergenceSpec& spec, double tol) {
  return std::abs(spec.generator(1.0)) <= tol;
}

bool satisfies_symmetry_condition(const DivergenceSpec& spec, double tol) {
  for (double u : {0.1, 0.5, 2.0, 10.0}) {
    const double resid = spec.generator(u) - u * spec.generator(1.0 / u) -
                         spec.symmetry_constant * (u - 1.0);
    if (!(std::abs(resid) <= tol)) return false;
  }
  return true;
}

namespace detail {

double total_variation(std::span<const double> p, std::span<const double> q) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += std::abs(p[i] - q[i]);
  return 0.5 * acc;
}

double tsallis(std::span<const double> p, std::span<const double> q, double qv) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p[i];
    if (pi == 0.0) continue;  // 0 * f(0/0) = 0
    const double qi = q[i];
    if (qi == 0.0) {
      // P^q Q^{1-q} -> 0 for q < 1, the sum diverges for q >= 1
      if (qv >= 1.0) return kInf;
      acc += pi / (1.0 - qv);
      continue;
    }
    acc += tsallis_term(pi, qi, qv);
  }
  return acc;
}

double jensen_shannon_tsallis(std::span<const double> p, std::span<const double> q,
                              double qv) {
  // the two directions accumulate separately so the sum is exactly symmetric
  double acc_p = 0.0, acc_q = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    if (p[i] > 0.0) acc_p += tsallis_term(p[i], m, qv);
    if (q[i] > 0.0) acc_q += tsallis_term(q[i], m, qv);
  }
  return acc_p + acc_q;
}

double jeffrey(std::span<const double> p, std::span<const double> q, double qv) {
  const double a = tsallis(p, q, qv);
  if (a == kInf) return kInf;
  const double b = tsallis(q, p, qv);
  if (b == kInf) return kInf;
  return 0.5 * (a + b);
}

double limit_sequence(double v1, double v2, double v3) {
  if (std::isinf(v3) || std::isnan(v3)) return v3 > 0 ? kInf : -kInf;
  const double d1 = v2 - v1;
  const double d2 = v3 - v2;
  if (std::abs(d2) <= 1e-12 * std::max(1.0, std::abs(v3))) return v3;
  if (std::abs(d2) < 0.95 * std::abs(d1)) {
    const double r = d2 / d1;
    return v3 + d2 * r / (1.0 - r);  // geometric tail
  }
  return d2 > 0 ? kInf : -kInf;
}

double generator_limit_at_zero(const std::function<double(double)>& f) {
  return limit_sequence(f(1e-6), f(1e-9), f(1e-12));
}

double generator_slope_at_infinity(const std::function<double(double)>& f) {
  return limit_sequence(f(1e6) / 1e6, f(1e9) / 1e9, f(1e12) / 1e12);
}

}  // namespace detail

double total_variation(const Distribution& p, const Distribution& q) {
  check_same_support(p.size(), q.size());
  return detail::total_variation(p.span(), q.span());
}

double f_divergence(const Distribution& p, const Distribution& q,
                    const DivergenceSpec& spec) {
  check_same_support(p.size(), q.size());
  const auto& f = spec.generator;
  std::optional<double> f_at_zero;
  std::optional<double> slope_inf;
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p[i], qi = q[i];
    if (qi > 0.0) {
      if (pi == 0.0) {
        if (!f_at_zero) f_at_zero = detail::generator_limit_at_zero(f);
        if (*f_at_zero == kInf) return kInf;
        acc += qi * *f_at_zero;
      } else {
        acc += qi * f(pi / qi);
      }
    } else {
      if (pi == 0.0) continue;
      if (!slope_inf) slope_inf = detail::generator_slope_at_infinity(f);
      if (*slope_inf == kInf) return kInf;
      acc += pi * *slope_inf;
    }
  }
  return acc;
}

double tsallis_divergence(const Distribution& p, const Distribution& q, QParam qp) {
  check_same_support(p.size(), q.size());
  return detail::tsallis(p.span(), q.span(), qp.value());
}

double jensen_shannon_tsallis(const Distribution& p, const Distribution& q, QParam qp) {
  check_same_support(p.size(), q.size());
  return detail::jensen_shannon_tsallis(p.span(), q.span(), qp.value());
}

double jeffrey_tsallis(const Distribution& p, const Distribution& q, QParam qp) {
  check_same_support(p.size(), q.size());
  return detail::jeffrey(p.span(), q.span(), qp.value());
}

std::pair<Distribution, Distribution> binary_reduction(const Distribution& p,
                                                       const Distribution& q) {
  check_same_support(p.size(), q.size());
  double pa = 0.0, qa = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > q[i]) {
      pa += p[i];
      qa += q[i];
    }
  }
  return {Distribution({pa, 1.0 - pa}), Distribution({qa, 1.0 - qa})};
}

}  // namespace divbound
