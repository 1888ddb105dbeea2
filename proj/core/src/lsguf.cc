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
#include "guframe/lsguf.h"

#include <cmath>
#include <string>

#include "guframe/matops.h"

namespace guframe {
namespace {

void check_compatible(const Frame& input, const TargetGram& target) {
  if (input.size() != target.spec().order()) {
    throw InvalidArgument("frame has " + std::to_string(input.size()) +
                          " vectors but the target group has order " +
                          std::to_string(target.spec().order()));
  }
  if (target.rank() != input.dim()) {
    throw InvalidArgument("target Gram has rank " +
                          std::to_string(target.rank()) +
                          ", frame dimension is " +
                          std::to_string(input.dim()));
  }
}

// Sigma (m x n): row k carries sqrt(alpha_h) in column h = support[k].
ComplexMatrix sigma_matrix(const TargetGram& target) {
  const int n = target.spec().order();
  const int m = target.rank();
  ComplexMatrix sigma = ComplexMatrix::Zero(m, n);
  for (int k = 0; k < m; ++k) {
    const int h = target.support()[k];
    sigma(k, h) = std::sqrt(target.alpha()(h));
  }
  return sigma;
}

// W Sigma F^*, the unit-scale constrained least-squares solution.
ComplexMatrix unit_scale_solution(const Frame& input,
                                  const TargetGram& target) {
  check_compatible(input, target);
  const ComplexMatrix f = ft_matrix(target.spec());
  const ComplexMatrix sigma = sigma_matrix(target);
  const ComplexMatrix x = input.matrix() * f * sigma.adjoint();
  return polar_unitary(x) * sigma * f.adjoint();
}

}  // namespace

TargetGram build_target_gram(const ComplexVector& a, const GroupSpec& spec,
                             Tolerance tol) {
  const int n = spec.order();
  if (a.size() != n) {
    throw InvalidArgument("sequence length " + std::to_string(a.size()) +
                          " does not match group order " + std::to_string(n));
  }
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  for (int q = 0; q < n; ++q) {
    if (std::abs(a(spec.neg_index(q)) - std::conj(a(q))) > tol.abs * scale) {
      throw InvalidArgument("target is not Hermitian: a(-q) != conj(a(q)) at q = " +
                            std::to_string(q));
    }
  }
  TargetGram t(spec);
  t.a_ = a;
  t.r_.resize(n, n);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) t.r_(row, col) = a(spec.sub_index(col, row));
  }
  const ComplexVector a_hat = ft_apply(spec, a);
  const double root_n = std::sqrt(static_cast<double>(n));
  const double alpha_scale = std::max(1.0, root_n * a_hat.cwiseAbs().maxCoeff());
  t.alpha_.resize(n);
  for (int h = 0; h < n; ++h) {
    const Complex alpha = root_n * a_hat(h);
    if (alpha.real() < -tol.abs * alpha_scale) {
      throw InvalidArgument("target Gram is indefinite: eigenvalue alpha(" +
                            std::to_string(h) + ") = " +
                            std::to_string(alpha.real()));
    }
    t.alpha_(h) = std::max(alpha.real(), 0.0);
  }
  const double top = t.alpha_.maxCoeff();
  for (int h = 0; h < n; ++h) {
    if (top > 0.0 && t.alpha_(h) > tol.rank * top) t.support_.push_back(h);
  }
  return t;
}

Frame sc_lsguf(const Frame& input, const TargetGram& target, double beta0) {
  if (!(beta0 > 0.0)) throw InvalidArgument("beta0 must be > 0");
  return Frame(beta0 * unit_scale_solution(input, target), input.tolerance());
}

Frame sc_lsguf_closed_form(const Frame& input, const TargetGram& target,
                           double beta0) {
  if (!(beta0 > 0.0)) throw InvalidArgument("beta0 must be > 0");
  check_compatible(input, target);
  const ComplexMatrix fr = input.matrix() * target.gram();
  const ComplexMatrix frf = fr * input.matrix().adjoint();
  if (numerical_rank(frf, input.tolerance().rank) != input.dim()) {
    throw NumericalError("F R F^* is singular; use the SVD form");
  }
  return Frame(beta0 * psd_inv_sqrt(frf, input.tolerance().rank) * fr,
               input.tolerance());
}

ScaledFit c_lsguf(const Frame& input, const TargetGram& target) {
  const ComplexMatrix unit = unit_scale_solution(input, target);
  const double trace_r = target.gram().trace().real();
  const double align = (input.matrix().adjoint() * unit).trace().real();
  const double beta = align / trace_r;
  if (!(beta > 0.0)) {
    throw NumericalError("optimal scale is not positive (Re Tr(F^* Phi) = " +
                         std::to_string(align) + ")");
  }
  return {Frame(beta * unit, input.tolerance()), beta};
}

double c_lsguf_beta_closed_form(const Frame& input, const TargetGram& target) {
  check_compatible(input, target);
  const ComplexMatrix frf =
      input.matrix() * target.gram() * input.matrix().adjoint();
  return psd_sqrt(frf, input.tolerance().rank).trace().real() /
         target.gram().trace().real();
}

Frame naive_gu_projection(const Frame& input, const GroupSpec& spec,
                          const std::optional<RealVector>& sigma) {
  const int n = input.size();
  if (spec.order() != n) {
    throw InvalidArgument("group order does not match frame size");
  }
  ComplexVector diag = ComplexVector::Ones(n);
  if (sigma) {
    if (sigma->size() != n) {
      throw InvalidArgument("sigma must have one entry per frame vector");
    }
    for (int i = 0; i < n; ++i) {
      if (!((*sigma)(i) > 0.0)) {
        throw InvalidArgument("sigma entries must be > 0 (index " +
                              std::to_string(i) + ")");
      }
    }
    diag = sigma->cast<Complex>();
  }
  const SvdResult d = svd(input.matrix());
  const ComplexMatrix phi =
      input.matrix() * d.v * diag.asDiagonal() * ft_matrix(spec).adjoint();
  return Frame(phi, input.tolerance());
}

double ls_error(const ComplexMatrix& input, const ComplexMatrix& phi) {
  if (input.rows() != phi.rows() || input.cols() != phi.cols()) {
    throw InvalidArgument("ls_error: shape mismatch");
  }
  return (phi - input).squaredNorm();
}

double ls_error(const Frame& input, const Frame& phi) {
  return ls_error(input.matrix(), phi.matrix());
}

}  // namespace guframe
