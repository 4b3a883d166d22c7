// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#include "edgewire/fock.hpp"

namespace edgewire {

bool is_density_matrix(const DensityMatrix& rho, double tol) {
  if (!is_hermitian(rho, tol)) return false;
  if (std::abs(rho.trace() - Complex(1, 0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(rho, Eigen::EigenvaluesOnly);
  return solver.info() == Eigen::Success && solver.eigenvalues()(0) >= -tol;
}

}  // namespace edgewire
