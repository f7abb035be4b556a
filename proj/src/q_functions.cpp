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

#include "divbound/q_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace divbound {

QParam::QParam(double q) : q_(q) {
  if (!(q > 0.0)) {
    throw std::invalid_argument("deformation parameter q must be positive (got " +
                                std::to_string(q) + ")");
  }
}

namespace detail {

double q_log_from_ln(double ln_x, double q) {
  if (q == 1.0) return ln_x;
  const double om = 1.0 - q;
  // expm1 keeps the q -> 1 limit numerically exact
  return std::expm1(om * ln_x) / om;
}

}  // namespace detail

double q_log(double x, QParam q) {
  if (!(x > 0.0)) {
    throw std::domain_error("q_log requires a positive argument (got " +
                            std::to_string(x) + ")");
  }
  return detail::q_log_from_ln(std::log(x), q.value());
}

double q_exp(double x, QParam q) {
  if (q.classical()) return std::exp(x);
  const double om = 1.0 - q.value();
  const double base = 1.0 + om * x;
  if (base <= 0.0) return 0.0;
  return std::exp(std::log1p(om * x) / om);
}

double q_xlogx(double t, QParam q) {
  if (t == 0.0) return 0.0;
  if (q.classical()) return t * std::log(t);
  return std::pow(t, q.value()) * q_log(t, q);
}

}  // namespace divbound
