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

#include "divbound/coding.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "divbound/divergence.hpp"

namespace divbound::coding {

namespace {

constexpr double kKraftTol = 1e-12;

void check_aligned(const Source& source, const Code& code) {
  if (source.size() != code.size()) {
    throw std::invalid_argument("source and code sizes differ (" +
                                std::to_string(source.size()) + " vs " +
                                std::to_string(code.size()) + ")");
  }
}

std::string digest_coding(const Source& source, const Code& code, double qv) {
  std::ostringstream os;
  os.precision(17);
  os << "d=" << code.d << ";q=" << qv << ";p=";
  for (double x : source.dist) os << x << ",";
  os << ";l=";
  for (int l : code.lengths) os << l << ",";
  return digest_string(os.str());
}

}  // namespace

Source::Source(Distribution d, std::vector<std::string> lbls)
    : dist(std::move(d)), labels(std::move(lbls)) {
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (!(dist[i] > 0.0)) {
      throw std::invalid_argument("source symbol " + std::to_string(i) +
                                  " has zero probability; zero-probability symbols "
                                  "are not codable");
    }
  }
  if (!labels.empty() && labels.size() != dist.size()) {
    throw std::invalid_argument("label count does not match alphabet size");
  }
}

Code::Code(std::vector<int> ls, int alphabet) : lengths(std::move(ls)), d(alphabet) {
  if (d < 2) throw std::invalid_argument("code alphabet size must be >= 2");
  if (lengths.empty()) throw std::invalid_argument("code must have at least one length");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 1) {
      throw std::invalid_argument("codeword length " + std::to_string(i) +
                                  " must be a positive integer");
    }
  }
}

bool Code::kraft_feasible() const { return kraft_sum(*this) <= 1.0 + kKraftTol; }

double kraft_sum(const Code& code) {
  double acc = 0.0;
  for (int l : code.lengths) acc += std::pow(static_cast<double>(code.d), -l);
  return acc;
}

double kraft_sum_q(const Code& code, QParam q) {
  const double ln_d = std::log(static_cast<double>(code.d));
  double acc = 0.0;
  for (int l : code.lengths) acc += q_exp(-l * ln_d, q);
  return acc;
}

Distribution induced_distribution(const Code& code, QParam q, BoundVariant variant) {
  const double ln_d = std::log(static_cast<double>(code.d));
  std::vector<double> w(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) {
    w[i] = variant == BoundVariant::Theorem1
               ? std::pow(static_cast<double>(code.d), -code.lengths[i])
               : q_exp(-code.lengths[i] * ln_d, q);
  }
  const double c = divbound::detail::kahan_sum(w);
  if (!(c > 0.0)) {
    throw std::runtime_error("induced distribution undefined: every codeword weight "
                             "vanished (q-exponential cutoff)");
  }
  for (double& x : w) x /= c;
  return Distribution(std::move(w));
}

double tsallis_entropy_base_d(const Source& source, int d, QParam q) {
  if (d < 2) throw std::invalid_argument("entropy base must be >= 2");
  double acc = 0.0;
  for (double p : source.dist) acc += q_xlogx(p, q);
  return -acc / std::log(static_cast<double>(d));
}

double avg_codelength_q(const Source& source, const Code& code, QParam q,
                        BoundVariant variant) {
  check_aligned(source, code);
  const double qv = q.value();
  if (variant == BoundVariant::PropA) {
    double acc = 0.0;
    for (std::size_t i = 0; i < source.size(); ++i) {
      acc += std::pow(source.dist[i], qv) * code.lengths[i];
    }
    return acc;
  }
  const double ln_d = std::log(static_cast<double>(code.d));
  double acc = 0.0;
  for (std::size_t i = 0; i < source.size(); ++i) {
    // ln_q(d^{-l}) from the exponent, safe for long codewords
    acc += std::pow(source.dist[i], qv) *
           divbound::detail::q_log_from_ln(-code.lengths[i] * ln_d, qv);
  }
  return -std::pow(kraft_sum(code), qv - 1.0) / ln_d * acc;
}

double delta_dq(const Source& source, const Code& code, QParam q, BoundVariant variant) {
  return avg_codelength_q(source, code, q, variant) -
         tsallis_entropy_base_d(source, code.d, q);
}

double redundancy_bound(const Source& source, const Code& code, QParam q,
                        BoundVariant variant) {
  check_aligned(source, code);
  if (q.value() < 1.0) {
    throw std::invalid_argument("redundancy bound requires q >= 1 (got " +
                                std::to_string(q.value()) + ")");
  }
  if (variant == BoundVariant::Theorem1) {
    if (!code.kraft_feasible()) {
      throw std::invalid_argument("Kraft-McMillan sum exceeds 1; the code is not "
                                  "uniquely decodable");
    }
  } else if (kraft_sum_q(code, q) > 1.0 + kKraftTol) {
    throw std::invalid_argument("q-deformed Kraft sum exceeds 1; hypothesis of the "
                                "q-exponential bound fails");
  }
  double delta = delta_dq(source, code, q, variant);
  if (delta < 0.0) delta = 0.0;  // roundoff on entropy-achieving codes
  const double ln_d = std::log(static_cast<double>(code.d));
  return std::min(1.0, std::sqrt(delta * ln_d / 2.0));
}

double l1_deviation(const Source& source, const Code& code, QParam q,
                    BoundVariant variant) {
  check_aligned(source, code);
  return total_variation(source.dist, induced_distribution(code, q, variant));
}

Code shannon_fano_lengths(const Source& source, int d) {
  if (d < 2) throw std::invalid_argument("code alphabet size must be >= 2");
  const double ln_d = std::log(static_cast<double>(d));
  std::vector<int> lengths(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    const double p = source.dist[i];
    const double x = -std::log(p) / ln_d;
    const auto r = static_cast<long>(std::llround(x));
    int l;
    if (r >= 0 && std::abs(std::pow(static_cast<double>(d), -static_cast<double>(r)) - p) <=
                      1e-12 * p) {
      l = static_cast<int>(r);  // exact power of d
    } else {
      l = static_cast<int>(std::ceil(x - 1e-12));
    }
    lengths[i] = std::max(l, 1);
  }
  return Code(std::move(lengths), d);
}

Code huffman_lengths(const Source& source) {
  const std::size_t n = source.size();
  if (n < 2) {
    throw std::invalid_argument("Huffman construction needs at least 2 symbols");
  }
  struct Node {
    double prob;
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;
  nodes.reserve(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) nodes.push_back({source.dist[i]});

  // min-heap on (prob, node id): equal probabilities resolve to the smaller
  // id, i.e. smallest symbol index, then earliest created internal node
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (std::size_t i = 0; i < n; ++i) heap.emplace(nodes[i].prob, static_cast<int>(i));
  while (heap.size() > 1) {
    const auto [pa, a] = heap.top();
    heap.pop();
    const auto [pb, b] = heap.top();
    heap.pop();
    nodes.push_back({pa + pb, a, b});
    heap.emplace(pa + pb, static_cast<int>(nodes.size()) - 1);
  }

  std::vector<int> lengths(n, 0);
  std::vector<std::pair<int, int>> stack{{static_cast<int>(nodes.size()) - 1, 0}};
  while (!stack.empty()) {
    const auto [id, depth] = stack.back();
    stack.pop_back();
    const Node& node = nodes[static_cast<std::size_t>(id)];
    if (node.left < 0) {
      lengths[static_cast<std::size_t>(id)] = std::max(depth, 1);
      continue;
    }
    stack.emplace_back(node.left, depth + 1);
    stack.emplace_back(node.right, depth + 1);
  }
  return Code(std::move(lengths), 2);
}

std::vector<BoundReport> prop3_check(const Source& source, const Code& code,
                                     std::span<const double> q_grid, double tol) {
  check_aligned(source, code);
  if (std::abs(kraft_sum(code) - 1.0) > kKraftTol) {
    throw std::invalid_argument("delta monotonicity check requires a complete code "
                                "(Kraft sum = 1); got Kraft sum = " +
                                std::to_string(kraft_sum(code)));
  }
  const double delta1 = delta_dq(source, code, 1.0, BoundVariant::Theorem1);
  std::vector<BoundReport> reports;
  reports.reserve(q_grid.size());
  for (double qv : q_grid) {
    if (qv < 1.0) {
      throw std::invalid_argument("delta monotonicity is only claimed for q >= 1");
    }
    const double dq = delta_dq(source, code, qv, BoundVariant::Theorem1);
    std::ostringstream name;
    name << "delta_monotone(q=" << qv << ")";
    reports.push_back(make_bound_report(name.str(), dq, delta1, tol,
                                        digest_coding(source, code, qv)));
  }
  return reports;
}

}  // namespace divbound::coding
