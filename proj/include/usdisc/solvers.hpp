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
#include <utility>

#include "usdisc/optimality.hpp"
#include "usdisc/oracle.hpp"
#include "usdisc/reduction.hpp"

namespace usdisc {

enum class Method {
  SingleStateDetection1,  // state 1 is never detected (E1 = 0)
  SingleStateDetection2,
  FidelityForm,
  Type11Analytic,
  NumericalOracle,
};

std::string method_name(Method method);

/// A certified measurement for a strictly skew pair.
struct SolveResult {
  UsdPovm povm;
  double p_succ = 0.0;
  std::pair<int, int> type{0, 0};
  Method method = Method::NumericalOracle;
  OptimalityCertificate certificate;
};

/// Which state the single-state-detection branch never detects.
enum class IgnoreState { One = 1, Two = 2 };

/// The condition gamma_i (gamma_j - gamma_i) gamma_i >= 0 under which
/// ignoring state i is optimal (i the ignored state, j the other).
bool ssd_condition(const SkewPair& pair, IgnoreState ignore,
                   double tol = Tolerances{}.psd);

/// Projective measurement that never detects the ignored state: the other
/// state is detected by the projector onto the ignored state's support
/// complement. Throws NotInRegimeError when the condition fails.
SolveResult single_state_detection(const SkewPair& pair, IgnoreState ignore,
                                   const Tolerances& tol = {});

/// tr(gamma1) + tr(gamma2) - 2 tr|sqrt(gamma1) sqrt(gamma2)|: the success
/// probability of the fidelity form measurement, and an upper bound on any
/// unambiguous measurement's success probability.
double fidelity_form_success(const SkewPair& pair);

/// Constructs the fidelity form failure operator (the unique Hermitian
/// solution of the compression equations fixing E on both supports and
/// across them), then certifies it. Returns empty when the operator leaves
/// [0, 1] -- the pair is then outside the fidelity regime. Throws
/// SolverFailureError if the construction itself is inconsistent.
std::optional<SolveResult> fidelity_form_measurement(
    const SkewPair& pair, const Tolerances& tol = {});

/// For fixed normalized states rho1, rho2, the closed prior interval
/// [p_low, p_up] on which the fidelity form measurement is optimal,
/// located by bisection. Empty when no prior admits it.
std::optional<std::pair<double, double>> fidelity_regime_bounds(
    const Matrix& rho1, const Matrix& rho2, const Tolerances& tol = {});

/// Jordan (principal) bases of ker gamma1 and ker gamma2 within the joint
/// support, for rank-2 pairs: sigma spans ker gamma1, omega spans
/// ker gamma2, with <sigma_-+|omega_+-> = 0 and real overlaps
/// <sigma_+|omega_+> >= <sigma_-|omega_-> >= 0.
struct JordanBases {
  Vector sigma_plus, sigma_minus;  // ker gamma1
  Vector omega_plus, omega_minus;  // ker gamma2
  double overlap_plus = 0.0;
  double overlap_minus = 0.0;
  bool degenerate = false;  // the two Jordan angles coincide
};

/// Throws UnsupportedStructureError unless r == 2.
JordanBases jordan_bases(const SkewPair& pair, const Tolerances& tol = {});

/// Rank-(1,1) projective measurement from the scalar quadratic
/// (1, x)(G1 - G2)(-x, 1)^T = 0 in the given Jordan bases; requires
/// degenerate Jordan angles. Both roots and the two excluded limit pairs
/// are tried; the certified candidate wins (ties by success probability).
/// Empty when no candidate certifies (the pair is outside the (1,1)
/// region). Throws UnsupportedStructureError for non-degenerate angles.
std::optional<SolveResult> solve_type11(const SkewPair& pair,
                                        const JordanBases& bases,
                                        const Tolerances& tol = {});
std::optional<SolveResult> solve_type11(const SkewPair& pair,
                                        const Tolerances& tol = {});

struct SolveSettings {
  Tolerances tol;
  OracleSettings oracle;
  bool oracle_only = false;
};

/// Certified optimum for a strictly skew pair. Tries single state
/// detection (both sides), the fidelity form, the type-(1,1) construction
/// (rank-2 pairs with degenerate Jordan angles), then the numerical
/// oracle; the first branch whose certificate passes wins. Throws
/// SolverFailureError (with the best candidate's value in the message)
/// when nothing certifies.
SolveResult solve_optimal(const SkewPair& pair,
                          const SolveSettings& settings = {});

}  // namespace usdisc
