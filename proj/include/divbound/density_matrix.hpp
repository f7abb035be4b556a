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

#include <Eigen/Dense>
#include <cstdint>

#include "divbound/distribution.hpp"

namespace divbound::quantum {

/// Eigenvalues below this threshold count as zero: the state (or matrix)
/// has no support there.
constexpr double kSupportCutoff = 1e-12;

/// Complex Hermitian positive-semidefinite unit-trace matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd m);

  Eigen::Index dim() const { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  /// State that is diagonal in the computation basis with the given pmf.
  static DensityMatrix diagonal(const Distribution& p);

 private:
  Eigen::MatrixXcd m_;
};

/// Full Hermitian eigendecomposition, eigenvalues descending with aligned
/// orthonormal eigenvector columns.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

SpectralDecomposition spectral(const Eigen::MatrixXcd& hermitian);

/// Hermitian PSD square root through the spectrum (negative roundoff clamped).
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& hermitian);

/// G G* / Tr(G G*) with G an n x rank matrix of seeded complex Gaussians.
DensityMatrix random_density_matrix(int n, int rank, std::uint64_t seed);

}  // namespace divbound::quantum
