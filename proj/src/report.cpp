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

#include "divbound/report.hpp"

#include <cmath>
#include <limits>

namespace divbound {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

BoundReport make_bound_report(std::string name, double lhs, double rhs,
                              double tolerance, std::string inputs_digest) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  r.inputs_digest = std::move(inputs_digest);
  if (lhs == kInf) {
    r.slack = (rhs == kInf) ? 0.0 : kInf;
  } else if (rhs == kInf) {
    r.slack = -kInf;
  } else {
    r.slack = lhs - rhs;
  }
  r.holds = !std::isnan(r.slack) && r.slack >= -tolerance;
  return r;
}

BoundReport make_equality_report(std::string name, double lhs, double rhs,
                                 double tolerance, std::string inputs_digest) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  r.inputs_digest = std::move(inputs_digest);
  if (std::isinf(lhs) && std::isinf(rhs) && std::signbit(lhs) == std::signbit(rhs)) {
    r.slack = 0.0;
  } else {
    const double diff = std::abs(lhs - rhs);
    r.slack = diff > 0.0 ? -diff : 0.0;
  }
  r.holds = !std::isnan(r.slack) && r.slack >= -tolerance;
  return r;
}

bool all_hold(std::span<const BoundReport> reports) {
  for (const auto& r : reports) {
    if (!r.holds) return false;
  }
  return true;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_string(std::string_view rendered) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a(rendered);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace divbound
