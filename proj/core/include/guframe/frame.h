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
#ifndef GUFRAME_FRAME_H_
#define GUFRAME_FRAME_H_

#include "guframe/types.h"

namespace guframe {

// A finite frame for C^m: the columns of an m x n matrix that span C^m.
//
// Construction checks n >= m and numerical rank m; every operation below
// relies on that.
class Frame {
 public:
  explicit Frame(ComplexMatrix phi, Tolerance tol = {});

  int dim() const { return static_cast<int>(phi_.rows()); }
  int size() const { return static_cast<int>(phi_.cols()); }
  const ComplexMatrix& matrix() const { return phi_; }
  ComplexVector column(int i) const { return phi_.col(i); }
  const Tolerance& tolerance() const { return tol_; }

 private:
  ComplexMatrix phi_;
  Tolerance tol_;
};

struct FrameBounds {
  double lower = 0.0;  // A
  double upper = 0.0;  // B
};

// S = Phi Phi^*.
ComplexMatrix frame_operator(const Frame& frame);

// G = Phi^* Phi; entry (i, j) is <phi_i, phi_j> = phi_i^* phi_j.
ComplexMatrix gram_matrix(const ComplexMatrix& phi);

// Extreme eigenvalues of S.
FrameBounds frame_bounds(const Frame& frame);

// Columns S^{-1} phi_i.
Frame dual_frame(const Frame& frame);

// Columns S^{-1/2} phi_i; the closest normalized tight frame in least
// squares.
Frame canonical_tight(const Frame& frame);

// Coefficients a_i = <dual_i, x>, the minimum-norm solution of Phi a = x.
ComplexVector expand(const Frame& frame, const ComplexVector& x);
// x = sum_i a_i phi_i.
ComplexVector reconstruct(const Frame& frame, const ComplexVector& coeffs);

// R = sum_i |<phi_i, mu_i>|^2 against a normalized tight frame {mu_i}.
double r_phi_mu(const Frame& frame, const Frame& tight);

}  // namespace guframe

#endif  // GUFRAME_FRAME_H_
