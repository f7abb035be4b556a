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

#include "divbound/density_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "divbound/rng.hpp"

namespace divbound::quantum {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() < 1 || m_.rows() != m_.cols()) {
    throw std::invalid_argument("density matrix must be square and nonempty");
  }
  const double herm_err = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > 1e-12) {
    throw std::invalid_argument("density matrix must be Hermitian (max |A - A*| = " +
                                std::to_string(herm_err) + ")");
  }
  const std::complex<double> tr = m_.trace();
  if (std::abs(tr - std::complex<double>(1.0, 0.0)) > 1e-12) {
    throw std::invalid_argument("density matrix must have unit trace (Tr = " +
                                std::to_string(tr.real()) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -1e-10) {
    throw std::invalid_argument("density matrix must be positive semidefinite "
                                "(min eigenvalue = " + std::to_string(min_eig) + ")");
  }
}

DensityMatrix DensityMatrix::diagonal(const Distribution& p) {
  const auto n = static_cast<Eigen::Index>(p.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = p[static_cast<std::size_t>(i)];
  return DensityMatrix(std::move(m));
}

SpectralDecomposition spectral(const Eigen::MatrixXcd& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition failed to converge");
  }
  const Eigen::Index n = hermitian.rows();
  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues(i) = es.eigenvalues()(n - 1 - i);
    out.eigenvectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return out;
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& hermitian) {
  const SpectralDecomposition sd = spectral(hermitian);
  Eigen::VectorXd roots(sd.eigenvalues.size());
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    // the cutoff keeps sqrt from amplifying eigenvalue roundoff into 1e-8 noise
    roots(i) = sd.eigenvalues(i) > kSupportCutoff ? std::sqrt(sd.eigenvalues(i)) : 0.0;
  }
  return sd.eigenvectors * roots.asDiagonal() * sd.eigenvectors.adjoint();
}

DensityMatrix random_density_matrix(int n, int rank, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  if (rank < 1 || rank > n) {
    throw std::invalid_argument("rank must be between 1 and the dimension");
  }
  Rng rng(seed);
  Eigen::MatrixXcd g(n, rank);
  for (int j = 0; j < rank; ++j) {
    for (int i = 0; i < n; ++i) {
      g(i, j) = std::complex<double>(rng.normal(), rng.normal());
    }
  }
  Eigen::MatrixXcd m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(std::move(m));
}

}  // namespace divbound::quantum
