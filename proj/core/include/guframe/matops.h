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
#ifndef GUFRAME_MATOPS_H_
#define GUFRAME_MATOPS_H_

#include <functional>

#include "guframe/types.h"

namespace guframe {

// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
struct HermEig {
  RealVector values;
  ComplexMatrix vectors;  // unitary, column k pairs with values(k)
};

// Full SVD A = u * diag(singular_values) * v^*, singular values descending.
//
// Phase convention: the first entry of each column of `v` with modulus above
// 1e-12 is real and non-negative; the matching column of `u` carries the
// compensating phase.
struct SvdResult {
  ComplexMatrix u;  // m x m
  RealVector singular_values;  // min(m, n)
  ComplexMatrix v;  // n x n
};

bool is_hermitian(const ComplexMatrix& a, double tol);
bool is_unitary(const ComplexMatrix& a, double tol);

// Largest entrywise modulus of a.
double max_abs(const ComplexMatrix& a);

HermEig herm_eig(const ComplexMatrix& a, double tol = Tolerance{}.abs);
SvdResult svd(const ComplexMatrix& a);

// Number of singular values above rank_tol * (largest).
int numerical_rank(const ComplexMatrix& a,
                   double rank_tol = Tolerance{}.rank);

// V diag(f(lambda)) V^* over the eigenvalues above rank_tol * lambda_max;
// the rest map to 0. With f = 1/x this is the pseudoinverse.
ComplexMatrix psd_fun(const ComplexMatrix& a,
                      const std::function<double(double)>& f,
                      double rank_tol = Tolerance{}.rank);

ComplexMatrix psd_inverse(const ComplexMatrix& a,
                          double rank_tol = Tolerance{}.rank);
ComplexMatrix psd_inv_sqrt(const ComplexMatrix& a,
                           double rank_tol = Tolerance{}.rank);
ComplexMatrix psd_sqrt(const ComplexMatrix& a,
                       double rank_tol = Tolerance{}.rank);

// Unitary polar factor W = P Q^* of X = P D Q^*. Any SVD of X gives a
// maximizer of Re Tr(W X^*) over unitary W.
ComplexMatrix polar_unitary(const ComplexMatrix& x);

// Truncated Neumann series for S^{-1}:
//   (2/(A+B)) * sum_{l=0..terms} (I - 2S/(A+B))^l.
// Validation oracle only; requires 0 < A <= B bounding the spectrum of S.
ComplexMatrix neumann_inverse(const ComplexMatrix& s, double a, double b,
                              int terms);

// Binomial series for S^{-1/2}:
//   sqrt(2/(A+B)) * sum_{l=0..terms} (2l)!/(4^l (l!)^2) (I - 2S/(A+B))^l.
ComplexMatrix series_invsqrt(const ComplexMatrix& s, double a, double b,
                             int terms);

// Spectral-norm bounds on the truncation error of the two series above.
double neumann_tail_bound(double a, double b, int terms);
double invsqrt_tail_bound(double a, double b, int terms);

}  // namespace guframe

#endif  // GUFRAME_MATOPS_H_
