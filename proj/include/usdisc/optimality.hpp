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

#include <string>
#include <utility>
#include <vector>

#include "usdisc/reduction.hpp"
#include "usdisc/types.hpp"

namespace usdisc {

/// Measurement triple for unambiguous discrimination: e1 and e2 are the
/// conclusive elements, e_fail the inconclusive one.
struct UsdPovm {
  Matrix e1;
  Matrix e2;
  Matrix e_fail;
};

/// Residuals of the four optimality conditions for a failure operator on a
/// strictly skew pair, plus the measurement type (rank e1, rank e2).
/// passed requires the two equality residuals below tol, the two smallest
/// eigenvalues above -tol, and a consistent POVM reconstruction.
struct OptimalityCertificate {
  double residual_1a = 0.0;  // ||E(g2-g1)E(1-E)||
  double residual_1b = 0.0;  // ||L1 E (g2-g1) E L2||
  double min_eig_1c = 0.0;   // lambda_min of L1 E (g2-g1) E L1
  double min_eig_1d = 0.0;   // lambda_min of L2 E (g1-g2) E L2
  bool passed = false;
  std::pair<int, int> type{0, 0};
};

/// Human-readable list of violated POVM requirements (empty when valid):
/// positivity, completeness, the two unambiguity traces, properness.
std::vector<std::string> povm_violations(const UsdPovm& povm,
                                         const SkewPair& pair, double tol);

bool check_unambiguous_proper(const UsdPovm& povm, const SkewPair& pair,
                              double tol = Tolerances{}.certificate);

/// tr(e1 gamma1) + tr(e2 gamma2).
double success_probability(const UsdPovm& povm, const SkewPair& pair);

/// Evaluates the optimality conditions of e_fail for the pair. Requires
/// 0 <= e_fail <= 1 (throws PositivityError otherwise); the pair must be
/// strictly skew -- reduce first.
OptimalityCertificate check_optimality(const Matrix& e_fail,
                                       const SkewPair& pair,
                                       double tol = Tolerances{}.certificate);

/// Recovers the unique conclusive elements with Ei gamma_i =
/// (1 - e_fail) gamma_i, each supported in the other state's kernel.
/// Throws ReconstructionError when no consistent PSD solution exists or
/// completeness fails (e_fail is then not a valid failure operator).
UsdPovm reconstruct_conclusive(const Matrix& e_fail, const SkewPair& pair,
                               double tol = Tolerances{}.reconstruction);

/// (numerical rank of e1, numerical rank of e2).
std::pair<int, int> classify_type(const UsdPovm& povm,
                                  double tol_rank = Tolerances{}.rank);

/// rank(gamma1 gamma2) + dim ker(gamma1 + gamma2): the failure-operator
/// rank every optimal proper measurement must have.
int expected_failure_rank(const SkewPair& pair,
                          double tol_rank = Tolerances{}.rank);

}  // namespace usdisc
