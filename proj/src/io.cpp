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

#include "divbound/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace divbound::io {

namespace {

using nlohmann::json;

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::runtime_error("input is not valid JSON");
  return j;
}

std::vector<double> number_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw std::runtime_error(what + " must be a JSON array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw std::runtime_error(what + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) fields.push_back(field);
  return fields;
}

bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

json number_or_string(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

Distribution parse_distribution_json(const std::string& text) {
  return Distribution(number_array(parse_json_text(text), "distribution"));
}

Distribution parse_distribution_csv(const std::string& text) {
  std::vector<double> probs;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    double x;
    if (!parse_double(line, x)) {
      throw std::runtime_error("line " + std::to_string(lineno) +
                               " is not a number; distribution CSV is a single column");
    }
    probs.push_back(x);
  }
  return Distribution(std::move(probs));
}

coding::Source parse_source_json(const std::string& text) {
  const json j = parse_json_text(text);
  if (j.is_array()) return coding::Source(Distribution(number_array(j, "source")));
  if (!j.is_object() || !j.contains("probs")) {
    throw std::runtime_error("source JSON must be an array or an object with 'probs'");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& v : j["labels"]) labels.push_back(v.get<std::string>());
  }
  return coding::Source(Distribution(number_array(j["probs"], "source probs")),
                        std::move(labels));
}

coding::Source parse_source_csv(const std::string& text) {
  std::vector<double> probs;
  std::vector<std::string> labels;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 2) {
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": source CSV rows are 'symbol,probability'");
    }
    double x;
    if (!parse_double(fields[1], x)) {
      if (lineno == 1) continue;  // header row
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": probability is not a number");
    }
    labels.push_back(fields[0]);
    probs.push_back(x);
  }
  return coding::Source(Distribution(std::move(probs)), std::move(labels));
}

coding::Code parse_code_json(const std::string& text) {
  const json j = parse_json_text(text);
  if (!j.is_object() || !j.contains("d") || !j.contains("lengths")) {
    throw std::runtime_error("code JSON must be an object {d, lengths}");
  }
  if (!j["d"].is_number_integer()) {
    throw std::runtime_error("code alphabet size d must be an integer");
  }
  std::vector<int> lengths;
  for (const auto& v : j["lengths"]) {
    if (!v.is_number_integer()) {
      throw std::runtime_error("codeword lengths must be integers");
    }
    lengths.push_back(v.get<int>());
  }
  return coding::Code(std::move(lengths), j["d"].get<int>());
}

quantum::DensityMatrix parse_density_matrix_json(const std::string& text) {
  const json j = parse_json_text(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("re") || !j.contains("im")) {
    throw std::runtime_error("density matrix JSON must be an object {n, re, im}");
  }
  const auto n = j["n"].get<Eigen::Index>();
  if (n < 1) throw std::runtime_error("density matrix dimension must be >= 1");
  auto read_part = [n](const json& part, const std::string& what) {
    if (!part.is_array() || static_cast<Eigen::Index>(part.size()) != n) {
      throw std::runtime_error(what + " must be an n x n array");
    }
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto row = number_array(part[static_cast<std::size_t>(i)], what + " row");
      if (static_cast<Eigen::Index>(row.size()) != n) {
        throw std::runtime_error(what + " must be an n x n array");
      }
      for (Eigen::Index k = 0; k < n; ++k) m(i, k) = row[static_cast<std::size_t>(k)];
    }
    return m;
  };
  const Eigen::MatrixXd re = read_part(j["re"], "re");
  const Eigen::MatrixXd im = read_part(j["im"], "im");
  Eigen::MatrixXcd m(n, n);
  m.real() = re;
  m.imag() = im;
  return quantum::DensityMatrix(std::move(m));
}

namespace {

bool has_extension(const std::filesystem::path& path, const char* ext) {
  return path.extension() == ext;
}

}  // namespace

Distribution load_distribution(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return has_extension(path, ".csv") ? parse_distribution_csv(text)
                                     : parse_distribution_json(text);
}

coding::Source load_source(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return has_extension(path, ".csv") ? parse_source_csv(text) : parse_source_json(text);
}

coding::Code load_code(const std::filesystem::path& path) {
  return parse_code_json(read_file(path));
}

quantum::DensityMatrix load_density_matrix(const std::filesystem::path& path) {
  return parse_density_matrix_json(read_file(path));
}

std::string distribution_to_json(const Distribution& p) {
  json j = json::array();
  for (double x : p) j.push_back(x);
  return j.dump();
}

std::string distribution_to_csv(const Distribution& p) {
  std::string out;
  for (double x : p) {
    out += format_number(x);
    out += '\n';
  }
  return out;
}

std::string code_to_json(const coding::Code& code) {
  json j;
  j["d"] = code.d;
  j["lengths"] = code.lengths;
  return j.dump();
}

std::string density_matrix_to_json(const quantum::DensityMatrix& dm) {
  const Eigen::Index n = dm.dim();
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < n; ++i) {
    json rrow = json::array(), irow = json::array();
    for (Eigen::Index k = 0; k < n; ++k) {
      rrow.push_back(dm.matrix()(i, k).real());
      irow.push_back(dm.matrix()(i, k).imag());
    }
    re.push_back(rrow);
    im.push_back(irow);
  }
  json j;
  j["n"] = n;
  j["re"] = re;
  j["im"] = im;
  return j.dump();
}

std::string reports_to_csv(std::span<const BoundReport> reports) {
  std::string out = "name,lhs,rhs,slack,holds\n";
  for (const auto& r : reports) {
    out += r.name;
    out += ',';
    out += format_number(r.lhs);
    out += ',';
    out += format_number(r.rhs);
    out += ',';
    out += format_number(r.slack);
    out += ',';
    out += r.holds ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string reports_to_json(std::span<const BoundReport> reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json j;
    j["name"] = r.name;
    j["lhs"] = number_or_string(r.lhs);
    j["rhs"] = number_or_string(r.rhs);
    j["slack"] = number_or_string(r.slack);
    j["tolerance"] = r.tolerance;
    j["holds"] = r.holds;
    j["inputs_digest"] = r.inputs_digest;
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out << content;
}

}  // namespace divbound::io
