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

#include <optional>

#include "usdisc/types.hpp"

namespace usdisc {

/// A strictly skew pair of unnormalized density operators: the supports
/// share no direction and neither support meets the other's kernel. Both
/// operators then have the same rank r and their joint support has
/// dimension 2r. The pair may be embedded in a larger ambient space whose
/// extra directions lie in the common kernel.
struct SkewPair {
  Matrix gamma1;
  Matrix gamma2;
  int r = 0;
  int ambient_dim = 0;
  Matrix lambda1;  // projector onto ker gamma2, restricted to supp(gamma1+gamma2)
  Matrix lambda2;  // projector onto ker gamma1, restricted to supp(gamma1+gamma2)
  Matrix support;  // orthonormal basis of supp(gamma1+gamma2), ambient x 2r
};

/// Projector onto the intersection of the ranges of two orthogonal
/// projectors: the eigenvectors of P*Q*P with eigenvalue within tol of 1.
Matrix subspace_intersection(const Matrix& p, const Matrix& q,
                             double tol = Tolerances{}.intersection);

bool is_strictly_skew(const Matrix& gamma1, const Matrix& gamma2,
                      const Tolerances& tol = {});

/// Validates strict skewness and caches the kernel projectors and joint
/// support. Throws DimensionError / PositivityError / InvalidStateError.
SkewPair make_skew_pair(const Matrix& gamma1, const Matrix& gamma2,
                        const Tolerances& tol = {});

/// Outcome of reducing an arbitrary pair to a strictly skew pair.
///
/// guaranteed_success collects the probability weight supported on one
/// state's kernel-of-the-other (discriminated with certainty);
/// parallel_weight collects the common-support weight (never
/// discriminable, charged to the inconclusive budget). The isometry maps
/// the reduced space back into the ambient space; sure1/sure2 are the
/// ambient-space projectors whose outcomes detect state 1 / state 2 with
/// certainty.
struct ReductionReport {
  std::optional<SkewPair> skew_pair;
  double guaranteed_success = 0.0;
  double parallel_weight = 0.0;
  Matrix isometry;
  Matrix sure1;
  Matrix sure2;
};

/// Iteratively strips common-kernel, orthogonal and parallel components
/// until the remainder is strictly skew (or empty). Conserves
/// guaranteed_success + parallel_weight + tr(skew gamma1) + tr(skew gamma2)
/// = tr(gamma1) + tr(gamma2).
ReductionReport reduce_to_strictly_skew(const Matrix& gamma1,
                                        const Matrix& gamma2,
                                        const Tolerances& tol = {});

}  // namespace usdisc
