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

#pragma once

#include "usdisc/types.hpp"

namespace usdisc {

/// Eigensystem of a Hermitian operator, sorted by descending eigenvalue.
/// The numerical rank counts eigenvalues whose magnitude exceeds
/// tol_rank times the largest magnitude (rank 0 for the zero operator).
struct SpectralDecomposition {
  RealVector eigenvalues;  // descending
  Matrix eigenvectors;     // orthonormal columns, same order
  int rank = 0;
};

/// Throws HermiticityError unless max |H - H^dag| entry <= tol.
void require_hermitian(const Matrix& h, double tol);

/// Largest singular value.
double operator_norm(const Matrix& a);

SpectralDecomposition spectral_decompose(const Matrix& h,
                                         double tol_rank = Tolerances{}.rank,
                                         double tol_herm = Tolerances{}.hermiticity);

/// True iff the smallest eigenvalue is >= -tol_psd relative to the largest
/// eigenvalue magnitude (absolute for near-zero operators).
bool psd_check(const Matrix& h, double tol_psd = Tolerances{}.psd);

/// Orthogonal projector onto the support (range) of a PSD operator.
/// Throws PositivityError for indefinite input.
Matrix support_projector(const Matrix& h, double tol_rank = Tolerances{}.rank,
                         double tol_psd = Tolerances{}.psd);

/// Identity minus the support projector, so that the two sum to the
/// identity exactly.
Matrix kernel_projector(const Matrix& h, double tol_rank = Tolerances{}.rank,
                        double tol_psd = Tolerances{}.psd);

/// Positive square root of a PSD operator. Eigenvalues within -tol_psd of
/// zero are clipped to zero; anything more negative throws PositivityError.
Matrix matrix_sqrt(const Matrix& h, double tol_psd = Tolerances{}.psd);

/// Trace norm: sum of singular values.
double trace_abs(const Matrix& a);

/// Orthonormal basis of the support (columns), descending eigenvalue order.
Matrix support_basis(const Matrix& h, double tol_rank = Tolerances{}.rank,
                     double tol_psd = Tolerances{}.psd);

/// Orthonormal basis of the kernel (columns).
Matrix kernel_basis(const Matrix& h, double tol_rank = Tolerances{}.rank,
                    double tol_psd = Tolerances{}.psd);

}  // namespace usdisc
