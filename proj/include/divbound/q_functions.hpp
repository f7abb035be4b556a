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

namespace divbound {

/// Deformation parameter of the q-logarithm/q-exponential family.
/// q = 1 selects the classical (natural log / exp) branch.
class QParam {
 public:
  QParam(double q);  // implicit on purpose; validates q > 0
  double value() const { return q_; }
  bool classical() const { return q_ == 1.0; }

 private:
  double q_;
};

/// ln_q(x) = (x^{1-q} - 1)/(1-q) for q != 1, ln(x) at q = 1.
/// Throws std::domain_error for x <= 0. Continuous in q at q = 1.
double q_log(double x, QParam q);

/// exp_q(x) = (1 + (1-q)x)^{1/(1-q)} when the base is positive, 0 otherwise;
/// exp(x) at q = 1. Total function, inverse of q_log where positive.
double q_exp(double x, QParam q);

/// t^q * ln_q(t), extended continuously by 0 at t = 0.
/// Equals -t ln_q(1/t); at q = 1 this is t ln t.
double q_xlogx(double t, QParam q);

namespace detail {
// ln_q(e^{ln_x}); avoids forming e^{ln_x} so very small arguments stay exact.
double q_log_from_ln(double ln_x, double q);
}  // namespace detail

}  // namespace divbound
