// Copyright 2026 the usdisc authors
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

#include "usdisc/operators.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace usdisc {

namespace {

void require_square(const Matrix& m, const char* where) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(where) + ": matrix is " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw Error(std::string(where) + ": non-finite entries");
  }
}

}  // namespace

void require_hermitian(const Matrix& h, double tol) {
  require_square(h, "require_hermitian");
  const double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol) {
    throw HermiticityError("operator deviates from self-adjointness by " +
                           std::to_string(dev));
  }
}

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
}

SpectralDecomposition spectral_decompose(const Matrix& h, double tol_rank,
                                         double tol_herm) {
  require_hermitian(h, tol_herm);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition failed to converge");
  }
  const Eigen::Index n = h.rows();
  SpectralDecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  const double largest =
      out.eigenvalues.size() == 0 ? 0.0 : out.eigenvalues.cwiseAbs().maxCoeff();
  out.rank = 0;
  if (largest > 0.0) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(out.eigenvalues(i)) > tol_rank * largest) ++out.rank;
    }
  }
  return out;
}

bool psd_check(const Matrix& h, double tol_psd) {
  const SpectralDecomposition d = spectral_decompose(h, Tolerances{}.rank);
  if (d.eigenvalues.size() == 0) return true;
  const double largest = d.eigenvalues.cwiseAbs().maxCoeff();
  const double threshold = tol_psd * std::max(largest, 1.0);
  return d.eigenvalues.minCoeff() >= -threshold;
}

Matrix support_basis(const Matrix& h, double tol_rank, double tol_psd) {
  if (!psd_check(h, tol_psd)) {
    throw PositivityError("support requested for an indefinite operator");
  }
  const SpectralDecomposition d = spectral_decompose(h, tol_rank);
  return d.eigenvectors.leftCols(d.rank);
}

Matrix kernel_basis(const Matrix& h, double tol_rank, double tol_psd) {
  if (!psd_check(h, tol_psd)) {
    throw PositivityError("kernel requested for an indefinite operator");
  }
  const SpectralDecomposition d = spectral_decompose(h, tol_rank);
  return d.eigenvectors.rightCols(h.rows() - d.rank);
}

Matrix support_projector(const Matrix& h, double tol_rank, double tol_psd) {
  const Matrix basis = support_basis(h, tol_rank, tol_psd);
  return basis * basis.adjoint();
}

Matrix kernel_projector(const Matrix& h, double tol_rank, double tol_psd) {
  const Eigen::Index n = h.rows();
  return Matrix::Identity(n, n) - support_projector(h, tol_rank, tol_psd);
}

Matrix matrix_sqrt(const Matrix& h, double tol_psd) {
  const SpectralDecomposition d = spectral_decompose(h);
  const double largest =
      d.eigenvalues.size() == 0 ? 0.0 : d.eigenvalues.cwiseAbs().maxCoeff();
  const double floor = -tol_psd * std::max(largest, 1.0);
  RealVector roots(d.eigenvalues.size());
  for (Eigen::Index i = 0; i < d.eigenvalues.size(); ++i) {
    const double ev = d.eigenvalues(i);
    if (ev < floor) {
      throw PositivityError("matrix_sqrt: eigenvalue " + std::to_string(ev) +
                            " below the positivity tolerance");
    }
    roots(i) = std::sqrt(std::max(ev, 0.0));
  }
  Matrix result = d.eigenvectors * roots.asDiagonal() *
                  d.eigenvectors.adjoint();
  return 0.5 * (result + result.adjoint());
}

double trace_abs(const Matrix& a) {
  require_square(a, "trace_abs");
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(a).singularValues().sum();
}

WeightedState make_weighted_state(double prior, const Matrix& rho,
                                  const Tolerances& tol) {
  if (!(prior > 0.0) || prior > 1.0) {
    throw InvalidStateError("prior " + std::to_string(prior) +
                            " outside (0, 1]");
  }
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw InvalidStateError("density operator is not square");
  }
  if (!rho.allFinite()) {
    throw InvalidStateError("density operator has non-finite entries");
  }
  const double herm_dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol.hermiticity) {
    throw InvalidStateError("density operator is not Hermitian (deviation " +
                            std::to_string(herm_dev) + ")");
  }
  const double trace_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace_dev > 1e-8) {
    throw InvalidStateError("density operator trace deviates from 1 by " +
                            std::to_string(trace_dev));
  }
  if (!psd_check(rho, tol.psd)) {
    throw InvalidStateError("density operator is not positive semidefinite");
  }
  WeightedState state;
  state.prior = prior;
  state.rho = rho;
  state.gamma = prior * rho;
  return state;
}

}  // namespace usdisc
