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

#include <filesystem>
#include <span>
#include <string>

#include "divbound/coding.hpp"
#include "divbound/density_matrix.hpp"
#include "divbound/distribution.hpp"
#include "divbound/report.hpp"

namespace divbound::io {

/// Numbers render with 9 significant digits everywhere ("%.9g");
/// infinities render as "inf"/"-inf".
std::string format_number(double x);

// Parsers. Each returns a fully validated value; failures throw with a
// message naming the violated invariant.
Distribution parse_distribution_json(const std::string& text);
Distribution parse_distribution_csv(const std::string& text);
coding::Source parse_source_json(const std::string& text);
coding::Source parse_source_csv(const std::string& text);
coding::Code parse_code_json(const std::string& text);
quantum::DensityMatrix parse_density_matrix_json(const std::string& text);

// File loaders dispatching on extension (.json vs .csv).
Distribution load_distribution(const std::filesystem::path& path);
coding::Source load_source(const std::filesystem::path& path);
coding::Code load_code(const std::filesystem::path& path);
quantum::DensityMatrix load_density_matrix(const std::filesystem::path& path);

// Serializers.
std::string distribution_to_json(const Distribution& p);
std::string distribution_to_csv(const Distribution& p);
std::string code_to_json(const coding::Code& code);
std::string density_matrix_to_json(const quantum::DensityMatrix& dm);

/// CSV with header "name,lhs,rhs,slack,holds".
std::string reports_to_csv(std::span<const BoundReport> reports);
/// JSON array with all report fields; non-finite numbers become strings.
std::string reports_to_json(std::span<const BoundReport> reports);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace divbound::io
