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
#include <string>
#include <vector>

#include "usdisc/solvers.hpp"

namespace usdisc {

/// Comparison of n pure states drawn from {psi1, psi2} with overlap
/// c = <psi1|psi2> in (0,1) and priors eta1 + eta2 = 1: decide whether all
/// n are equal. Equivalent to discriminating gamma_e ("all equal") from
/// gamma_d ("not all equal").
struct ComparisonProblem {
  int n = 3;
  double c = 0.5;
  double eta1 = 0.5;
  double eta2 = 0.5;
};

/// Validates n >= 2, 0 < c < 1, 0 < eta1 < 1.
ComparisonProblem make_comparison_problem(int n, double c, double eta1);

/// Largest n for which the dense 2^n tensor representation is built.
inline constexpr int kComparisonTensorCap = 12;

/// Explicit operators on the 2^n-dimensional tensor space plus the basis
/// of supp(gamma_e) + ker(gamma_d): {phi+, phi-} spans supp gamma_e,
/// {omega+, omega-} spans ker gamma_d, {sigma+, sigma-} is the
/// Gram-Schmidt completion. Throws DimensionError above the tensor cap.
struct ComparisonOperators {
  ComparisonProblem problem;
  Matrix gamma_e;
  Matrix gamma_d;
  Vector phi_plus, phi_minus;
  Vector sigma_plus, sigma_minus;
  Vector omega_plus, omega_minus;
};

ComparisonOperators build_comparison_operators(const ComparisonProblem& problem);

/// Projections of gamma_e, gamma_d onto the four-dimensional subspace in
/// the basis {phi+, phi-, sigma+, sigma-}.
std::pair<Matrix, Matrix> reduced_operators(const ComparisonOperators& ops);

/// The four-dimensional reduced problem, built directly from the closed
/// inner-product formulas (exact for every n, no tensor representation).
/// omega coordinates are expressed in the reduced basis; guaranteed_success
/// is the gamma_d weight outside the subspace, detected with certainty.
struct ComparisonReduction {
  ComparisonProblem problem;
  SkewPair pair;        // reduced pair in the {phi+, phi-, sigma+, sigma-} basis
  Vector omega_plus;    // coordinates in that basis
  Vector omega_minus;
  double guaranteed_success = 0.0;
  double overlap_plus = 0.0;   // <sigma+|omega+>
  double overlap_minus = 0.0;  // <sigma-|omega->
  bool degenerate = false;
};

ComparisonReduction comparison_reduction(const ComparisonProblem& problem);

/// G1[a][b] = <omega_a|gamma_e|omega_b>, G2[a][b] = <sigma_a|gamma_d|sigma_b>
/// on the reduced space (a, b in {+,-}).
std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> gram_matrices(
    const ComparisonReduction& red);

/// A solved comparison instance: the reduced-pair measurement plus the
/// certainty weight recovered by the reduction; p_succ_total is the
/// success probability of the full comparison task.
struct ComparisonSolution {
  ComparisonReduction reduction;
  SolveResult result;  // on the reduced pair
  double p_succ_total = 0.0;
};

/// Type-(1,1) branch in the parity-adapted bases (odd n only; throws
/// UnsupportedStructureError for even n). Empty outside the (1,1) region.
std::optional<ComparisonSolution> solve_comparison_type11(
    const ComparisonProblem& problem, const Tolerances& tol = {});

/// Full dispatcher on the reduced pair; always returns a certified result.
ComparisonSolution solve_comparison(const ComparisonProblem& problem,
                                    const SolveSettings& settings = {});

/// Closed form for the n = 3 type-(1,1) success probability (total, i.e.
/// including the certainty weight). Valid only inside the (1,1) region;
/// the caller must confirm region membership separately. Throws
/// Error if the inner square root turns negative.
double psucc_closed_form_n3(double c, double eta1);

struct GridRow {
  double eta1 = 0.0;
  double c = 0.0;
  double p_succ = 0.0;
  int rank_e1 = -1;
  int rank_e2 = -1;
  std::string method;  // solver branch, or "error" with detail appended
};

/// Dispatcher sweep over the (eta1, c) grid for the n-state comparison,
/// row-major with eta1 outer. Individual failures are recorded per row.
std::vector<GridRow> contour_grid(int n, int resolution,
                                  std::pair<double, double> eta_range,
                                  std::pair<double, double> c_range,
                                  const SolveSettings& settings = {});

}  // namespace usdisc
