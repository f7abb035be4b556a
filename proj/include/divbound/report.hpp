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
#include <span>
#include <string>
#include <string_view>

namespace divbound {

/// Record of one checked inequality. Slack is oriented as lhs - rhs, so
/// holds <=> slack >= -tolerance. Equality reports store -|lhs - rhs| as
/// slack so the same convention applies.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool holds = false;
  std::string inputs_digest;
};

/// Checks lhs >= rhs - tolerance, with +inf on either side handled:
/// an infinite lhs always holds, an infinite rhs requires an infinite lhs.
BoundReport make_bound_report(std::string name, double lhs, double rhs,
                              double tolerance, std::string inputs_digest);

/// Checks |lhs - rhs| <= tolerance (two infinities of the same sign agree).
BoundReport make_equality_report(std::string name, double lhs, double rhs,
                                 double tolerance, std::string inputs_digest);

bool all_hold(std::span<const BoundReport> reports);

std::uint64_t fnv1a(std::string_view bytes);

/// Short hex digest of a printable rendering of some inputs.
std::string digest_string(std::string_view rendered);

}  // namespace divbound
