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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace usdisc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical tolerances used throughout. All thresholds can be overridden
/// per call; these are the library-wide defaults.
struct Tolerances {
  double hermiticity = 1e-10;
  double orthonormal = 1e-10;
  double rank = 1e-9;          // relative to the largest eigenvalue magnitude
  double psd = 1e-9;           // relative; absolute for near-zero operators
  double reconstruction = 1e-8;
  double certificate = 1e-8;
  double intersection = 1e-8;  // distance from 1 for intersection eigenvalues
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class HermiticityError : public Error {
 public:
  using Error::Error;
};

class PositivityError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A density operator fails its defining invariants (trace, positivity,
/// prior range).
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// A failure operator admits no unambiguous POVM (the conclusive elements
/// cannot be reconstructed from it).
class ReconstructionError : public Error {
 public:
  using Error::Error;
};

/// A closed-form branch was requested outside its regime of validity.
class NotInRegimeError : public Error {
 public:
  using Error::Error;
};

/// The pair lacks the structure a closed-form branch requires
/// (wrong rank, non-degenerate Jordan angles, ...).
class UnsupportedStructureError : public Error {
 public:
  using Error::Error;
};

class SolverFailureError : public Error {
 public:
  using Error::Error;
};

class OracleError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An unnormalized density operator gamma = prior * rho together with the
/// prior it was built from.
struct WeightedState {
  double prior = 0.0;
  Matrix rho;
  Matrix gamma;
};

/// Validates trace, positivity and prior range, then builds gamma exactly
/// as prior * rho. Throws InvalidStateError on violation.
WeightedState make_weighted_state(double prior, const Matrix& rho,
                                  const Tolerances& tol = {});

}  // namespace usdisc
