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

#include "usdisc/reduction.hpp"

#include <cmath>

#include "usdisc/operators.hpp"

namespace usdisc {

namespace {

void require_projector(const Matrix& p, const char* name) {
  require_hermitian(p, 1e-8);
  const double dev = (p * p - p).cwiseAbs().maxCoeff();
  if (dev > 1e-8) {
    throw Error(std::string(name) + " is not an orthogonal projector "
                "(idempotency deviation " + std::to_string(dev) + ")");
  }
}

}  // namespace

Matrix subspace_intersection(const Matrix& p, const Matrix& q, double tol) {
  if (p.rows() != q.rows() || p.cols() != q.cols()) {
    throw DimensionError("subspace_intersection: projector dimensions differ");
  }
  require_projector(p, "P");
  require_projector(q, "Q");
  const SpectralDecomposition d = spectral_decompose(p * q * p, 1e-12, 1e-8);
  const Eigen::Index n = p.rows();
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d.eigenvalues(i) >= 1.0 - tol) {
      out += d.eigenvectors.col(i) * d.eigenvectors.col(i).adjoint();
    }
  }
  return out;
}

bool is_strictly_skew(const Matrix& gamma1, const Matrix& gamma2,
                      const Tolerances& tol) {
  if (gamma1.rows() != gamma2.rows() || gamma1.cols() != gamma2.cols()) {
    throw DimensionError("is_strictly_skew: dimensions differ");
  }
  const Matrix s1 = support_projector(gamma1, tol.rank, tol.psd);
  const Matrix s2 = support_projector(gamma2, tol.rank, tol.psd);
  const Eigen::Index n = gamma1.rows();
  const Matrix k1 = Matrix::Identity(n, n) - s1;
  const Matrix k2 = Matrix::Identity(n, n) - s2;
  const auto dim = [&](const Matrix& proj) {
    return static_cast<int>(std::lround(proj.trace().real()));
  };
  if (dim(s1) == 0 || dim(s2) == 0) return false;
  return dim(subspace_intersection(s1, s2, tol.intersection)) == 0 &&
         dim(subspace_intersection(s1, k2, tol.intersection)) == 0 &&
         dim(subspace_intersection(s2, k1, tol.intersection)) == 0;
}

SkewPair make_skew_pair(const Matrix& gamma1, const Matrix& gamma2,
                        const Tolerances& tol) {
  if (gamma1.rows() != gamma2.rows() || gamma1.cols() != gamma2.cols()) {
    throw DimensionError("make_skew_pair: dimensions differ");
  }
  if (!psd_check(gamma1, tol.psd) || !psd_check(gamma2, tol.psd)) {
    throw PositivityError("make_skew_pair: operators must be PSD");
  }
  if (!is_strictly_skew(gamma1, gamma2, tol)) {
    throw InvalidStateError("make_skew_pair: pair is not strictly skew");
  }
  SkewPair pair;
  pair.gamma1 = gamma1;
  pair.gamma2 = gamma2;
  pair.ambient_dim = static_cast<int>(gamma1.rows());
  const SpectralDecomposition d1 = spectral_decompose(gamma1, tol.rank);
  const SpectralDecomposition d2 = spectral_decompose(gamma2, tol.rank);
  if (d1.rank != d2.rank) {
    throw InvalidStateError("make_skew_pair: ranks differ (" +
                            std::to_string(d1.rank) + " vs " +
                            std::to_string(d2.rank) + ")");
  }
  pair.r = d1.rank;
  pair.support = support_basis(gamma1 + gamma2, tol.rank, tol.psd);
  if (pair.support.cols() != 2 * pair.r) {
    throw InvalidStateError("make_skew_pair: joint support dimension " +
                            std::to_string(pair.support.cols()) +
                            " != 2r = " + std::to_string(2 * pair.r));
  }
  // ker(gamma_j) restricted to the joint support: kernel of the compression.
  const Matrix g2c = pair.support.adjoint() * gamma2 * pair.support;
  const Matrix g1c = pair.support.adjoint() * gamma1 * pair.support;
  const Matrix k1c = kernel_basis(0.5 * (g2c + g2c.adjoint()), tol.rank, tol.psd);
  const Matrix k2c = kernel_basis(0.5 * (g1c + g1c.adjoint()), tol.rank, tol.psd);
  const Matrix b1 = pair.support * k1c;
  const Matrix b2 = pair.support * k2c;
  pair.lambda1 = b1 * b1.adjoint();
  pair.lambda2 = b2 * b2.adjoint();
  return pair;
}

ReductionReport reduce_to_strictly_skew(const Matrix& gamma1,
                                        const Matrix& gamma2,
                                        const Tolerances& tol) {
  if (gamma1.rows() != gamma2.rows() || gamma1.cols() != gamma2.cols()) {
    throw DimensionError("reduce_to_strictly_skew: dimensions differ");
  }
  if (!psd_check(gamma1, tol.psd) || !psd_check(gamma2, tol.psd)) {
    throw PositivityError("reduce_to_strictly_skew: operators must be PSD");
  }
  const Eigen::Index ambient = gamma1.rows();
  const double total_scale =
      std::max(gamma1.trace().real() + gamma2.trace().real(), 1e-300);

  ReductionReport report;
  report.sure1 = Matrix::Zero(ambient, ambient);
  report.sure2 = Matrix::Zero(ambient, ambient);

  Matrix g1 = 0.5 * (gamma1 + gamma1.adjoint());
  Matrix g2 = 0.5 * (gamma2 + gamma2.adjoint());
  Matrix iso = Matrix::Identity(ambient, ambient);

  const int max_iter = 3 * static_cast<int>(ambient) + 8;
  for (int iter = 0; iter < max_iter; ++iter) {
    const Eigen::Index dim = g1.rows();
    // Restrict to the joint support (drops the common kernel).
    const Matrix joint = support_basis(g1 + g2, tol.rank, tol.psd);
    if (joint.cols() < dim) {
      g1 = (joint.adjoint() * g1 * joint).eval();
      g2 = (joint.adjoint() * g2 * joint).eval();
      g1 = 0.5 * (g1 + g1.adjoint());
      g2 = 0.5 * (g2 + g2.adjoint());
      iso = (iso * joint).eval();
      if (joint.cols() == 0) break;
      continue;
    }
    if (dim == 0) break;

    const Matrix s1 = support_projector(g1, tol.rank, tol.psd);
    const Matrix s2 = support_projector(g2, tol.rank, tol.psd);
    const Matrix id = Matrix::Identity(dim, dim);

    const auto strip = [&](const Matrix& block) {
      const Matrix comp = id - block;
      g1 = (comp * g1 * comp).eval();
      g2 = (comp * g2 * comp).eval();
      g1 = 0.5 * (g1 + g1.adjoint());
      g2 = 0.5 * (g2 + g2.adjoint());
    };

    // Orthogonal component of state 1: inside supp g1 and ker g2.
    const Matrix t1 = subspace_intersection(s1, id - s2, tol.intersection);
    if (std::lround(t1.trace().real()) > 0) {
      report.guaranteed_success += (t1 * g1).trace().real();
      report.sure1 += iso * t1 * iso.adjoint();
      strip(t1);
      continue;
    }
    const Matrix t2 = subspace_intersection(s2, id - s1, tol.intersection);
    if (std::lround(t2.trace().real()) > 0) {
      report.guaranteed_success += (t2 * g2).trace().real();
      report.sure2 += iso * t2 * iso.adjoint();
      strip(t2);
      continue;
    }
    // Parallel component: the common support, never discriminable.
    const Matrix t0 = subspace_intersection(s1, s2, tol.intersection);
    if (std::lround(t0.trace().real()) > 0) {
      report.parallel_weight += ((t0 * g1).trace() + (t0 * g2).trace()).real();
      strip(t0);
      continue;
    }
    break;  // strictly skew
  }

  report.isometry = iso;
  const double remaining = g1.trace().real() + g2.trace().real();
  if (g1.rows() > 0 && remaining > 1e-12 * total_scale) {
    report.skew_pair = make_skew_pair(g1, g2, tol);
  } else {
    report.isometry = Matrix::Zero(ambient, 0);
  }
  return report;
}

}  // namespace usdisc
