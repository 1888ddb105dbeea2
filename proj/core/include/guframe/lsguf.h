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
#ifndef GUFRAME_LSGUF_H_
#define GUFRAME_LSGUF_H_

#include <optional>
#include <vector>

#include "guframe/abelian.h"
#include "guframe/frame.h"
#include "guframe/types.h"

namespace guframe {

// Prescribed inner-product structure R with R(q', q) = a(q - q'): row q' is
// the sequence {a_j} permuted by the translation q -> q - q'.
//
// R = F diag(alpha) F^* with alpha = sqrt(n) * FT(a), all alpha >= 0.
class TargetGram {
 public:
  const GroupSpec& spec() const { return spec_; }
  const ComplexVector& sequence() const { return a_; }
  const ComplexMatrix& gram() const { return r_; }
  const RealVector& alpha() const { return alpha_; }
  // Indices h with alpha(h) above the rank cutoff, ascending.
  const std::vector<int>& support() const { return support_; }
  int rank() const { return static_cast<int>(support_.size()); }

 private:
  friend TargetGram build_target_gram(const ComplexVector&, const GroupSpec&,
                                      Tolerance);
  explicit TargetGram(GroupSpec spec) : spec_(std::move(spec)) {}

  GroupSpec spec_;
  ComplexVector a_;
  ComplexMatrix r_;
  RealVector alpha_;
  std::vector<int> support_;
};

// Throws InvalidArgument when R is not Hermitian (a(-q) != conj a(q)) or has
// a negative eigenvalue; the message names the offending one.
TargetGram build_target_gram(const ComplexVector& a, const GroupSpec& spec,
                             Tolerance tol = {});

// Minimizes sum_i |phi_i - f_i|^2 subject to Phi^* Phi = beta0^2 R:
//   Phi = beta0 * W * Sigma * F^*,
// where Sigma is m x n with sqrt(alpha_h) in the slot of each support index
// h and W is the unitary polar factor of X = F_in * F * Sigma^*.
Frame sc_lsguf(const Frame& input, const TargetGram& target, double beta0);

// beta0 * (F_in R F_in^*)^{-1/2} F_in R; only valid when F_in R F_in^* is
// invertible (throws NumericalError otherwise).
Frame sc_lsguf_closed_form(const Frame& input, const TargetGram& target,
                           double beta0);

struct ScaledFit {
  Frame frame;
  double beta = 0.0;
};

// Scale chosen optimally: beta = Re Tr(F_in^* Phi~) / Tr(R) with Phi~ the
// unit-scale solution.
ScaledFit c_lsguf(const Frame& input, const TargetGram& target);

// Tr((F_in R F_in^*)^{1/2}) / Tr(R), the invertible-case optimal scale.
double c_lsguf_beta_closed_form(const Frame& input, const TargetGram& target);

// Phi = F_in V Sigma F^* from F_in = Q Lambda V^*. With sigma omitted
// (Sigma = I) the frame bounds equal those of F_in. Only the first m
// entries of sigma touch the result.
Frame naive_gu_projection(const Frame& input, const GroupSpec& spec,
                          const std::optional<RealVector>& sigma = {});

// sum_i |phi_i - f_i|^2 = Tr((Phi - F)^* (Phi - F)).
double ls_error(const ComplexMatrix& input, const ComplexMatrix& phi);
double ls_error(const Frame& input, const Frame& phi);

}  // namespace guframe

#endif  // GUFRAME_LSGUF_H_
