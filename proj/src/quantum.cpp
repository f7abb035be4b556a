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

#include "divbound/quantum.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace divbound::quantum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("state dimension mismatch (" + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()) + ")");
  }
}

std::string digest_states(const DensityMatrix& a, const DensityMatrix& b) {
  std::ostringstream os;
  os.precision(17);
  os << "rho=";
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    for (Eigen::Index j = 0; j < a.dim(); ++j) {
      os << a.matrix()(i, j).real() << "," << a.matrix()(i, j).imag() << ";";
    }
  }
  os << "sigma=";
  for (Eigen::Index i = 0; i < b.dim(); ++i) {
    for (Eigen::Index j = 0; j < b.dim(); ++j) {
      os << b.matrix()(i, j).real() << "," << b.matrix()(i, j).imag() << ";";
    }
  }
  return digest_string(os.str());
}

// Positive eigenvalues of both states plus the squared eigenvector overlaps,
// the data every spectral two-state formula runs on.
struct StatePairSpectra {
  std::vector<double> lam;  // rho, positive only
  std::vector<double> mu;   // sigma, positive only
  Eigen::MatrixXd overlap;  // overlap(i, j) = |<r_i|s_j>|^2
};

StatePairSpectra pair_spectra(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const SpectralDecomposition sr = spectral(rho.matrix());
  const SpectralDecomposition ss = spectral(sigma.matrix());
  StatePairSpectra out;
  std::vector<Eigen::Index> ri, si;
  for (Eigen::Index i = 0; i < sr.eigenvalues.size(); ++i) {
    if (sr.eigenvalues(i) > kSupportCutoff) {
      out.lam.push_back(sr.eigenvalues(i));
      ri.push_back(i);
    }
  }
  for (Eigen::Index j = 0; j < ss.eigenvalues.size(); ++j) {
    if (ss.eigenvalues(j) > kSupportCutoff) {
      out.mu.push_back(ss.eigenvalues(j));
      si.push_back(j);
    }
  }
  out.overlap.resize(static_cast<Eigen::Index>(ri.size()),
                     static_cast<Eigen::Index>(si.size()));
  for (std::size_t i = 0; i < ri.size(); ++i) {
    for (std::size_t j = 0; j < si.size(); ++j) {
      const std::complex<double> ip =
          sr.eigenvectors.col(ri[i]).dot(ss.eigenvectors.col(si[j]));
      out.overlap(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::norm(ip);
    }
  }
  return out;
}

double overlap_at(const StatePairSpectra& sp, double s) {
  double acc = 0.0;
  for (std::size_t i = 0; i < sp.lam.size(); ++i) {
    const double ll = std::log(sp.lam[i]);
    for (std::size_t j = 0; j < sp.mu.size(); ++j) {
      const double w = sp.overlap(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (w == 0.0) continue;
      acc += w * std::exp(s * ll + (1.0 - s) * std::log(sp.mu[j]));
    }
  }
  return acc;
}

}  // namespace

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_dim(rho, sigma);
  const SpectralDecomposition sd = spectral(rho.matrix() - sigma.matrix());
  return 0.5 * sd.eigenvalues.cwiseAbs().sum();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_dim(rho, sigma);
  const Eigen::MatrixXcd s = psd_sqrt(sigma.matrix());
  const SpectralDecomposition sd = spectral(s * rho.matrix() * s);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
    if (sd.eigenvalues(i) > kSupportCutoff) acc += std::sqrt(sd.eigenvalues(i));
  }
  return acc;
}

double affinity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_dim(rho, sigma);
  return (psd_sqrt(rho.matrix()) * psd_sqrt(sigma.matrix())).trace().real();
}

double chernoff_overlap(const DensityMatrix& rho, const DensityMatrix& sigma, double s) {
  check_same_dim(rho, sigma);
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::invalid_argument("overlap exponent must lie in [0, 1]");
  }
  return overlap_at(pair_spectra(rho, sigma), s);
}

ChernoffResult chernoff_minimize(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_dim(rho, sigma);
  const StatePairSpectra sp = pair_spectra(rho, sigma);
  auto g = [&sp](double s) { return overlap_at(sp, s); };

  // golden-section on the convex objective, endpoints checked afterwards
  constexpr double inv_phi = 0.6180339887498949;
  double a = 0.0, b = 1.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = g(c), fd = g(d);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = g(d);
    }
  }
  double best_s = 0.5 * (a + b);
  double best = g(best_s);
  for (double s : {0.0, 1.0}) {
    const double v = g(s);
    if (v < best) {
      best = v;
      best_s = s;
    }
  }
  const double value = best > 0.0 ? -std::log(best) : kInf;
  return ChernoffResult{value, best_s, best};
}

double chernoff_information(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return chernoff_minimize(rho, sigma).value;
}

double chernoff_min_closed_form(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("trace distance must lie in [0, 1] (got " +
                                std::to_string(eps) + ")");
  }
  if (eps == 1.0) return kInf;
  return -0.5 * std::log1p(-eps * eps);
}

double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_dim(rho, sigma);
  const StatePairSpectra sp = pair_spectra(rho, sigma);
  double acc = 0.0;
  double leak = 0.0;  // rho-mass outside the support of sigma
  for (std::size_t i = 0; i < sp.lam.size(); ++i) {
    const double li = sp.lam[i];
    acc += li * std::log(li);
    double inside = 0.0;
    for (std::size_t j = 0; j < sp.mu.size(); ++j) {
      const double w = sp.overlap(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      inside += w;
      if (w != 0.0) acc -= li * w * std::log(sp.mu[j]);
    }
    leak += li * std::max(0.0, 1.0 - inside);
  }
  if (leak > 1e-10) return kInf;
  if (acc < 0.0 && acc > -1e-10) acc = 0.0;  // roundoff at rho = sigma
  return acc;
}

double quantum_jeffrey(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double a = quantum_relative_entropy(rho, sigma);
  if (a == kInf) return kInf;
  const double b = quantum_relative_entropy(sigma, rho);
  if (b == kInf) return kInf;
  return 0.5 * (a + b);
}

double quantum_f_divergence(const DensityMatrix& rho, const DensityMatrix& sigma,
                            const DivergenceSpec& spec) {
  check_same_dim(rho, sigma);
  const SpectralDecomposition sr = spectral(rho.matrix());
  if (sr.eigenvalues.minCoeff() <= kSupportCutoff) {
    throw std::domain_error("quantum f-divergence needs full-rank rho; the relative "
                            "modular operator involves rho^{-1}");
  }
  const SpectralDecomposition ss = spectral(sigma.matrix());
  const auto& f = spec.generator;
  std::optional<double> f_at_zero;
  double acc = 0.0;
  for (Eigen::Index j = 0; j < sr.eigenvalues.size(); ++j) {
    const double rj = sr.eigenvalues(j);
    for (Eigen::Index i = 0; i < ss.eigenvalues.size(); ++i) {
      const double w = std::norm(ss.eigenvectors.col(i).dot(sr.eigenvectors.col(j)));
      if (w == 0.0) continue;
      const double si = ss.eigenvalues(i) > kSupportCutoff ? ss.eigenvalues(i) : 0.0;
      double fv;
      if (si == 0.0) {
        if (!f_at_zero) f_at_zero = divbound::detail::generator_limit_at_zero(f);
        fv = *f_at_zero;
        if (fv == kInf) return kInf;
      } else {
        fv = f(si / rj);
      }
      acc += rj * w * fv;
    }
  }
  return acc;
}

std::pair<Distribution, Distribution> dominance_measurement(const DensityMatrix& rho,
                                                            const DensityMatrix& sigma) {
  check_same_dim(rho, sigma);
  const SpectralDecomposition sd = spectral(rho.matrix() - sigma.matrix());
  const Eigen::Index n = rho.dim();
  std::vector<double> p(static_cast<std::size_t>(n)), q(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::VectorXcd v = sd.eigenvectors.col(k);
    p[static_cast<std::size_t>(k)] = std::max(0.0, (v.adjoint() * rho.matrix() * v)(0).real());
    q[static_cast<std::size_t>(k)] = std::max(0.0, (v.adjoint() * sigma.matrix() * v)(0).real());
  }
  return {Distribution(std::move(p)), Distribution(std::move(q))};
}

std::vector<BoundReport> verify_quantum_bounds(const DensityMatrix& rho,
                                               const DensityMatrix& sigma, double tol) {
  check_same_dim(rho, sigma);
  const std::string digest = digest_states(rho, sigma);

  const double d = trace_distance(rho, sigma);
  const double fid = fidelity(rho, sigma);
  const double cq = chernoff_information(rho, sigma);
  const double dre = quantum_relative_entropy(rho, sigma);
  const double aff = affinity(rho, sigma);
  const double jeff = quantum_jeffrey(rho, sigma);
  const auto [mp, mq] = dominance_measurement(rho, sigma);

  std::vector<BoundReport> reports;
  reports.push_back(make_bound_report("fuchs_van_de_graaf_lower", fid, 1.0 - d,
                                      tol, digest));
  reports.push_back(make_bound_report("fuchs_van_de_graaf_upper",
                                      std::sqrt(std::max(0.0, 1.0 - d * d)), fid, tol,
                                      digest));
  reports.push_back(make_bound_report("chernoff_lower_bound", cq,
                                      chernoff_min_closed_form(std::min(d, 1.0)),
                                      std::max(tol, 1e-8), digest));
  reports.push_back(make_bound_report("pinsker_relative_entropy", dre, 2.0 * d * d,
                                      tol, digest));
  const double neg_two_log_aff = aff > 0.0 ? -2.0 * std::log(aff) : kInf;
  reports.push_back(make_bound_report("relative_entropy_vs_affinity", dre,
                                      neg_two_log_aff, tol, digest));
  const Eigen::MatrixXcd root_gap = psd_sqrt(rho.matrix()) - psd_sqrt(sigma.matrix());
  reports.push_back(make_bound_report("affinity_vs_hellinger", neg_two_log_aff,
                                      root_gap.squaredNorm(), tol, digest));
  const double jeffrey_rhs = d < 1.0 ? d * std::log((1.0 + d) / (1.0 - d)) : kInf;
  reports.push_back(make_bound_report("jeffrey_trace_bound", jeff, jeffrey_rhs, tol,
                                      digest));
  reports.push_back(make_bound_report("jeffrey_measurement_monotone", jeff,
                                      jeffrey_tsallis(mp, mq, 1.0), tol, digest));
  reports.push_back(make_equality_report("dominance_l1_preserved", 2.0 * d,
                                         divbound::detail::total_variation(mp.span(), mq.span()) * 2.0,
                                         1e-10, digest));
  return reports;
}

}  // namespace divbound::quantum
