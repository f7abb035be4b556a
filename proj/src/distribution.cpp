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

#include "divbound/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace divbound {

namespace detail {

double kahan_sum(std::span<const double> xs) {
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace detail

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("distribution must have at least one entry");
  }
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!(probs_[i] >= 0.0)) {  // also rejects NaN
      throw std::invalid_argument("distribution entry " + std::to_string(i) +
                                  " is negative or NaN (" + std::to_string(probs_[i]) + ")");
    }
  }
  const double sum = detail::kahan_sum(probs_);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("distribution entries must sum to 1 within 1e-12 (sum = " +
                                std::to_string(sum) + ")");
  }
}

}  // namespace divbound
