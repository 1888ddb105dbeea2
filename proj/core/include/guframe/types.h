// Copyright 2026 The guframe Authors.
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

#ifndef GUFRAME_TYPES_H_
#define GUFRAME_TYPES_H_

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace guframe {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Numerical comparison context shared by every module.
//
// `abs` bounds entrywise deviations (Hermitian, unitary, homomorphism and
// diagonality checks). `rank` is relative: a singular value or eigenvalue
// counts as zero when it is below rank * (largest).
struct Tolerance {
  double abs = 1e-9;
  double rank = 1e-10;
};

// Raised for malformed input: shape mismatches, out-of-range indices,
// arguments violating a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a computation detects numbers inconsistent with the structure
// it was promised (negative Fourier weights, non-scalar commutators, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace guframe

#endif  // GUFRAME_TYPES_H_
