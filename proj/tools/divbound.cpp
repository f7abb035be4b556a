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

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "divbound/coding.hpp"
#include "divbound/divergence.hpp"
#include "divbound/io.hpp"
#include "divbound/quantum.hpp"
#include "divbound/report.hpp"
#include "divbound/rng.hpp"
#include "divbound/tight_bounds.hpp"

namespace {

using divbound::BoundReport;
using divbound::Distribution;

struct CommonOpts {
  std::string out;
  bool json = false;
  double tol = 1e-9;
  std::uint64_t seed = 1;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DIVBOUND_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::runtime_error("DIVBOUND_SEED is not an unsigned integer");
    }
  }
  return 1;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out, "Write output to a file instead of stdout");
  cmd->add_flag("--json", opts.json, "Emit JSON instead of CSV");
  cmd->add_option("--tol", opts.tol, "Report tolerance")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", opts.seed, "Seed for all randomness");
}

void write_output(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    divbound::io::write_file(opts.out, text);
  }
}

int emit_reports(const CommonOpts& opts, const std::vector<BoundReport>& reports) {
  write_output(opts, opts.json ? divbound::io::reports_to_json(reports)
                               : divbound::io::reports_to_csv(reports));
  if (divbound::all_hold(reports)) return 0;
  std::cerr << "failing bounds:\n";
  for (const auto& r : reports) {
    if (!r.holds) {
      std::cerr << "  " << r.name << ": lhs=" << divbound::io::format_number(r.lhs)
                << " rhs=" << divbound::io::format_number(r.rhs)
                << " slack=" << divbound::io::format_number(r.slack) << "\n";
    }
  }
  return 1;
}

// Keeps only the worst (smallest-slack) report per name; the batch verifiers
// emit one row per checked bound rather than one per trial.
class WorstCase {
 public:
  void add(const BoundReport& r) {
    auto it = worst_.find(r.name);
    if (it == worst_.end() || r.slack < it->second.slack) worst_[r.name] = r;
  }
  void add_all(const std::vector<BoundReport>& rs) {
    for (const auto& r : rs) add(r);
  }
  std::vector<BoundReport> reports() const {
    std::vector<BoundReport> out;
    out.reserve(worst_.size());
    for (const auto& [_, r] : worst_) out.push_back(r);
    return out;
  }

 private:
  std::map<std::string, BoundReport> worst_;
};

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  out += '\n';
  return out;
}

std::string fmt(double x) { return divbound::io::format_number(x); }

// ---------------------------------------------------------------------------
// divergence

struct DivergenceArgs {
  std::string measure;
  std::string p_file, q_file;
  double q = 1.0;
};

int run_divergence(const DivergenceArgs& args, const CommonOpts& opts) {
  const Distribution p = divbound::io::load_distribution(args.p_file);
  const Distribution q = divbound::io::load_distribution(args.q_file);
  double value;
  if (args.measure == "tv") {
    value = divbound::total_variation(p, q);
  } else if (args.measure == "tsallis") {
    value = divbound::tsallis_divergence(p, q, args.q);
  } else if (args.measure == "jst") {
    value = divbound::jensen_shannon_tsallis(p, q, args.q);
  } else if (args.measure == "jeffrey") {
    value = divbound::jeffrey_tsallis(p, q, args.q);
  } else {
    throw std::runtime_error("unknown measure: " + args.measure);
  }
  if (opts.json) {
    std::ostringstream os;
    os << "{\"measure\":\"" << args.measure << "\",\"q\":" << fmt(args.q)
       << ",\"value\":\"" << fmt(value) << "\"}\n";
    write_output(opts, os.str());
  } else {
    std::string out = "measure,q,value\n";
    out += csv_row({args.measure, fmt(args.q), fmt(value)});
    write_output(opts, out);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// coding table

struct CodingArgs {
  std::string source_file;
  std::string code_file;
  bool shannon_fano = false;
  bool huffman = false;
  int d = 2;
  std::vector<double> q_grid{1.0};
  std::string variant = "theorem1";
};

int run_coding(const CodingArgs& args, const CommonOpts& opts) {
  namespace coding = divbound::coding;
  const coding::Source source = divbound::io::load_source(args.source_file);
  const coding::Code code = [&]() {
    if (!args.code_file.empty()) return divbound::io::load_code(args.code_file);
    if (args.huffman) return coding::huffman_lengths(source);
    return coding::shannon_fano_lengths(source, args.d);
  }();
  const auto variant = args.variant == "prop_a" ? coding::BoundVariant::PropA
                                                : coding::BoundVariant::Theorem1;

  std::string out = "q,n_bar_q,H_dq,delta_dq,bound,l1_deviation,variant\n";
  for (double q : args.q_grid) {
    std::string bound = "n/a";
    try {
      bound = fmt(coding::redundancy_bound(source, code, q, variant));
    } catch (const std::invalid_argument&) {
      // hypothesis failed for this q; the rest of the row is still defined
    }
    out += csv_row({fmt(q), fmt(coding::avg_codelength_q(source, code, q, variant)),
                    fmt(coding::tsallis_entropy_base_d(source, code.d, q)),
                    fmt(coding::delta_dq(source, code, q, variant)), bound,
                    fmt(coding::l1_deviation(source, code, q, variant)), args.variant});
  }
  write_output(opts, out);
  return 0;
}

// ---------------------------------------------------------------------------
// quantum reports

struct QuantumArgs {
  std::string rho_file, sigma_file;
  int dim = 0;
  int rank = 0;
  int trials = 1;
};

int run_quantum(const QuantumArgs& args, const CommonOpts& opts) {
  namespace quantum = divbound::quantum;
  std::vector<BoundReport> reports;
  if (!args.rho_file.empty() || !args.sigma_file.empty()) {
    if (args.rho_file.empty() || args.sigma_file.empty()) {
      throw std::runtime_error("provide both --rho and --sigma state files");
    }
    const auto rho = divbound::io::load_density_matrix(args.rho_file);
    const auto sigma = divbound::io::load_density_matrix(args.sigma_file);
    reports = quantum::verify_quantum_bounds(rho, sigma, opts.tol);
  } else {
    if (args.dim < 1) {
      throw std::runtime_error("provide either state files or --dim");
    }
    const int rank = args.rank > 0 ? args.rank : args.dim;
    for (int t = 0; t < args.trials; ++t) {
      const auto rho = quantum::random_density_matrix(
          args.dim, rank, opts.seed + 2 * static_cast<std::uint64_t>(t));
      const auto sigma = quantum::random_density_matrix(
          args.dim, rank, opts.seed + 2 * static_cast<std::uint64_t>(t) + 1);
      auto rs = quantum::verify_quantum_bounds(rho, sigma, opts.tol);
      reports.insert(reports.end(), rs.begin(), rs.end());
    }
  }
  return emit_reports(opts, reports);
}

// ---------------------------------------------------------------------------
// verify suites

struct VerifyArgs {
  int trials = 1000;
};

int run_verify_classical(const VerifyArgs& args, const CommonOpts& opts) {
  divbound::Rng rng(opts.seed);
  WorstCase worst;
  for (int support = 2; support <= 6; ++support) {
    for (double q : {1.0, 1.5, 2.0}) {
      for (int t = 0; t < args.trials; ++t) {
        const Distribution p(rng.simplex(static_cast<std::size_t>(support)));
        const Distribution r(rng.simplex(static_cast<std::size_t>(support)));
        worst.add_all(divbound::bounds::verify_classical_bounds(p, r, q, opts.tol));
      }
    }
  }
  return emit_reports(opts, worst.reports());
}

int run_verify_quantum(const VerifyArgs& args, const CommonOpts& opts) {
  namespace quantum = divbound::quantum;
  WorstCase worst;
  std::uint64_t ctr = opts.seed;
  for (int dim = 2; dim <= 6; ++dim) {
    for (int t = 0; t < args.trials; ++t) {
      const auto rho = quantum::random_density_matrix(dim, dim, ctr++);
      const auto sigma = quantum::random_density_matrix(dim, dim, ctr++);
      worst.add_all(quantum::verify_quantum_bounds(rho, sigma, opts.tol));
    }
  }
  return emit_reports(opts, worst.reports());
}

int run_verify_coding(const VerifyArgs& args, const CommonOpts& opts) {
  namespace coding = divbound::coding;
  divbound::Rng rng(opts.seed);
  WorstCase worst;
  for (int t = 0; t < args.trials; ++t) {
    const auto n = static_cast<std::size_t>(2 + rng.integer(9));  // sizes 2..10
    const int d = 2 + static_cast<int>(rng.integer(2));
    const coding::Source source{Distribution(rng.simplex(n))};
    const coding::Code sf = coding::shannon_fano_lengths(source, d);
    for (double q : {1.0, 1.5, 2.0}) {
      const double l1 = coding::l1_deviation(source, sf, q, coding::BoundVariant::Theorem1);
      const double bound =
          coding::redundancy_bound(source, sf, q, coding::BoundVariant::Theorem1);
      worst.add(divbound::make_bound_report("theorem1_bound(q=" + fmt(q) + ")", bound,
                                            l1, opts.tol, ""));
      if (coding::kraft_sum_q(sf, q) <= 1.0 + 1e-12) {
        const double l1a = coding::l1_deviation(source, sf, q, coding::BoundVariant::PropA);
        const double ba =
            coding::redundancy_bound(source, sf, q, coding::BoundVariant::PropA);
        worst.add(divbound::make_bound_report("prop_a_bound(q=" + fmt(q) + ")", ba, l1a,
                                              opts.tol, ""));
      }
    }
    const coding::Code huff = coding::huffman_lengths(source);
    const std::vector<double> q_grid{1.1, 1.5, 2.0, 3.0, 4.0};
    worst.add_all(coding::prop3_check(source, huff, q_grid, opts.tol));
  }
  return emit_reports(opts, worst.reports());
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string quantity;
  std::vector<double> eps_grid;
  std::vector<double> q_grid{1.0};
  bool oracle = false;
  int grid = 2000;
  int support = 2;
};

int run_sweep(const SweepArgs& args, const CommonOpts& opts) {
  namespace bounds = divbound::bounds;
  namespace quantum = divbound::quantum;
  if (args.eps_grid.empty() || args.q_grid.empty()) {
    throw std::runtime_error("sweep grids must be nonempty");
  }
  std::string out = args.oracle ? "quantity,eps,q,value,oracle,slack\n"
                                : "quantity,eps,q,value\n";
  for (double eps : args.eps_grid) {
    for (double q : args.q_grid) {
      double value;
      std::optional<double> oracle;
      if (args.quantity == "jst_min" || args.quantity == "jeffrey_min") {
        const bool jst = args.quantity == "jst_min";
        value = jst ? bounds::jst_min(eps, q) : bounds::jeffrey_min(eps, q);
        if (args.oracle) {
          oracle = bounds::brute_force_min(
              jst ? bounds::MinimizedDivergence::JensenShannonTsallis
                  : bounds::MinimizedDivergence::JeffreyTsallis,
              q, eps, args.support, args.grid);
        }
      } else if (args.quantity == "chernoff_min") {
        value = quantum::chernoff_min_closed_form(eps);
        if (args.oracle) {
          const auto [p, r] = bounds::extremal_pair(eps);
          oracle = quantum::chernoff_information(quantum::DensityMatrix::diagonal(p),
                                                 quantum::DensityMatrix::diagonal(r));
        }
      } else {
        throw std::runtime_error("unknown sweep quantity: " + args.quantity);
      }
      std::vector<std::string> row{args.quantity, fmt(eps), fmt(q), fmt(value)};
      if (args.oracle) {
        row.push_back(fmt(*oracle));
        row.push_back(fmt(*oracle - value));
      }
      out += csv_row(row);
    }
  }
  write_output(opts, out);
  return 0;
}

// ---------------------------------------------------------------------------
// counterexample

struct CounterexampleArgs {
  double q = 0.5;
  std::size_t trials = 100000;
};

int run_counterexample(const CounterexampleArgs& args, const CommonOpts& opts) {
  const auto found =
      divbound::bounds::counterexample_search(args.q, args.trials, opts.seed);
  std::string out = "found,q,gap,p,q_dist\n";
  auto join = [](const Distribution& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i) s += ';';
      s += fmt(d[i]);
    }
    return s;
  };
  if (found) {
    out += csv_row({"true", fmt(args.q), fmt(found->gap), join(found->p), join(found->q)});
  } else {
    out += csv_row({"false", fmt(args.q), "", "", ""});
  }
  write_output(opts, out);
  return 0;
}

// ---------------------------------------------------------------------------
// remark1: the built-in worked coding example for the source (0.5, 0.3, 0.2)

int run_remark1(const CommonOpts& opts) {
  namespace coding = divbound::coding;
  const coding::Source source{Distribution({0.5, 0.3, 0.2})};
  const coding::Code code = coding::shannon_fano_lengths(source, 2);

  std::vector<BoundReport> reports;
  const std::vector<int> expected{1, 2, 3};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    reports.push_back(divbound::make_equality_report(
        "shannon_fano_length_" + std::to_string(i + 1), code.lengths[i], expected[i],
        0.0, ""));
  }
  reports.push_back(divbound::make_equality_report("kraft_sum", coding::kraft_sum(code),
                                                   0.875, 0.0, ""));
  const double b1 =
      coding::redundancy_bound(source, code, 1.0, coding::BoundVariant::Theorem1);
  const double b15 =
      coding::redundancy_bound(source, code, 1.5, coding::BoundVariant::Theorem1);
  reports.push_back(divbound::make_equality_report("bound_q1", b1, 0.272669, 1e-5, ""));
  reports.push_back(divbound::make_equality_report("bound_q1.5", b15, 0.225793, 1e-5, ""));
  reports.push_back(divbound::make_bound_report("q_bound_tighter", b1, b15, 0.0, ""));
  return emit_reports(opts, reports);
}

int run_app(int argc, char** argv) {
  CLI::App app{"divergence measures, tight bounds, and their numerical verification"};
  app.require_subcommand(1);

  CommonOpts opts;
  opts.seed = default_seed();

  DivergenceArgs div_args;
  auto* div_cmd = app.add_subcommand("divergence", "Compute one divergence measure");
  div_cmd->add_option("measure", div_args.measure, "tv | tsallis | jst | jeffrey")
      ->required();
  div_cmd->add_option("P", div_args.p_file, "First distribution file")->required();
  div_cmd->add_option("Q", div_args.q_file, "Second distribution file")->required();
  div_cmd->add_option("--q", div_args.q, "Deformation parameter");
  add_common(div_cmd, opts);

  CodingArgs coding_args;
  auto* coding_cmd = app.add_subcommand("coding", "Code-length bound table for a source");
  coding_cmd->add_option("--source", coding_args.source_file, "Source file (CSV or JSON)")
      ->required();
  coding_cmd->add_option("--code", coding_args.code_file, "Code file {d, lengths}");
  coding_cmd->add_flag("--shannon-fano", coding_args.shannon_fano,
                       "Use Shannon-Fano lengths (default)");
  coding_cmd->add_flag("--huffman", coding_args.huffman, "Use binary Huffman lengths");
  coding_cmd->add_option("--d", coding_args.d, "Code alphabet size for Shannon-Fano");
  coding_cmd->add_option("--q", coding_args.q_grid, "Deformation parameters")
      ->delimiter(',');
  coding_cmd->add_option("--variant", coding_args.variant, "theorem1 | prop_a")
      ->check(CLI::IsMember({"theorem1", "prop_a"}));
  add_common(coding_cmd, opts);

  QuantumArgs quantum_args;
  auto* quantum_cmd = app.add_subcommand("quantum", "Density-matrix bound reports");
  quantum_cmd->add_option("--rho", quantum_args.rho_file, "First state file (JSON)");
  quantum_cmd->add_option("--sigma", quantum_args.sigma_file, "Second state file (JSON)");
  quantum_cmd->add_option("--dim", quantum_args.dim,
                          "Generate random states of this dimension");
  quantum_cmd->add_option("--rank", quantum_args.rank, "Rank of generated states");
  quantum_cmd->add_option("--trials", quantum_args.trials, "Number of generated pairs");
  add_common(quantum_cmd, opts);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run a randomized verification suite");
  verify_cmd->require_subcommand(1);
  auto* vc = verify_cmd->add_subcommand("classical", "Classical lower bounds");
  auto* vq = verify_cmd->add_subcommand("quantum", "Quantum bounds");
  auto* vk = verify_cmd->add_subcommand("coding", "Code-length bounds");
  for (auto* cmd : {vc, vq, vk}) {
    cmd->add_option("--trials", verify_args.trials, "Trials per configuration");
    add_common(cmd, opts);
  }

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate closed-form constrained minima");
  sweep_cmd->add_option("--quantity", sweep_args.quantity,
                        "jst_min | jeffrey_min | chernoff_min")
      ->required();
  sweep_cmd->add_option("--eps", sweep_args.eps_grid, "Total variation grid")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--q", sweep_args.q_grid, "Deformation parameters")->delimiter(',');
  sweep_cmd->add_flag("--oracle", sweep_args.oracle, "Add a brute-force oracle column");
  sweep_cmd->add_option("--grid", sweep_args.grid, "Oracle grid resolution");
  sweep_cmd->add_option("--support", sweep_args.support, "Oracle support size (2 or 3)");
  add_common(sweep_cmd, opts);

  CounterexampleArgs cex_args;
  auto* cex_cmd = app.add_subcommand(
      "counterexample", "Search for a q-Pinsker violation with 0 < q < 1");
  cex_cmd->add_option("--q", cex_args.q, "Deformation parameter (must be < 1)")->required();
  cex_cmd->add_option("--trials", cex_args.trials, "Trial budget");
  add_common(cex_cmd, opts);

  auto* remark_cmd = app.add_subcommand(
      "remark1", "Reproduce the built-in worked coding example end to end");
  add_common(remark_cmd, opts);

  CLI11_PARSE(app, argc, argv);

  if (div_cmd->parsed()) return run_divergence(div_args, opts);
  if (coding_cmd->parsed()) return run_coding(coding_args, opts);
  if (quantum_cmd->parsed()) return run_quantum(quantum_args, opts);
  if (verify_cmd->parsed()) {
    if (vc->parsed()) return run_verify_classical(verify_args, opts);
    if (vq->parsed()) return run_verify_quantum(verify_args, opts);
    return run_verify_coding(verify_args, opts);
  }
  if (sweep_cmd->parsed()) return run_sweep(sweep_args, opts);
  if (cex_cmd->parsed()) return run_counterexample(cex_args, opts);
  if (remark_cmd->parsed()) return run_remark1(opts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
