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

#include <cstdint>
#include <vector>

#include "usdisc/optimality.hpp"
#include "usdisc/reduction.hpp"

namespace usdisc {

struct SolveResult;  // defined in solvers.hpp

/// Settings for the numerical optimizer. Deterministic given seed.
struct OracleSettings {
  int max_iterations = 20000;     // total Newton iteration budget
  double step_tolerance = 1e-12;  // target duality gap
  int restarts = 5;
  std::uint64_t seed = 1;
};

/// Per-restart record, for convergence diagnostics.
struct OracleDiagnostics {
  std::vector<Matrix> restart_failure_ops;
  std::vector<double> restart_values;
  int iterations = 0;
  bool polished = false;
};

/// Maximizes tr(E1 gamma1) + tr(E2 gamma2) over unambiguous POVMs by an
/// interior-point ascent on the conclusive elements, independent of every
/// closed-form branch. The best candidate across restarts is polished onto
/// the optimal support and certified; the certificate status in the result
/// is reported honestly (it may fail at loose settings).
SolveResult brute_force_optimum(const SkewPair& pair,
                                const OracleSettings& settings = {},
                                OracleDiagnostics* diagnostics = nullptr);

/// Deterministic generator of strictly skew test pairs with the requested
/// rank, normalized to tr gamma1 + tr gamma2 = 1. Requires ambient_dim >= 2r.
SkewPair random_skew_pair(int r, int ambient_dim, std::uint64_t seed);

/// A valid (generally suboptimal) unambiguous proper POVM for the pair,
/// deterministic per seed.
UsdPovm random_usd_povm(const SkewPair& pair, std::uint64_t seed);

}  // namespace usdisc
