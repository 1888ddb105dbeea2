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
#include "guframe/gu.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "guframe/matops.h"
#include "internal.h"

namespace guframe {
namespace {

constexpr int kFullTableLimit = 512;

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Index of the unit element e_t (1 in factor t, 0 elsewhere).
int unit_index(const GroupSpec& spec, int t) {
  std::vector<int> residues(spec.rank(), 0);
  residues[t] = spec.factors()[t] > 1 ? 1 : 0;
  return spec.index_of(residues);
}

// Greedy tolerance matching of `values` against `reference`; fills
// `mapping` and returns false on the first unmatched entry.
bool match_multiset(const std::vector<Complex>& values,
                    const std::vector<Complex>& reference, double tol,
                    std::vector<int>* mapping) {
  const std::size_t n = reference.size();
  std::vector<char> used(n, 0);
  if (mapping != nullptr) mapping->assign(values.size(), -1);
  for (std::size_t j = 0; j < values.size(); ++j) {
    bool found = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (!used[k] && std::abs(values[j] - reference[k]) <= tol) {
        used[k] = 1;
        if (mapping != nullptr) (*mapping)[j] = static_cast<int>(k);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

namespace internal {

FourierWeights fourier_weights(const ComplexVector& s, const GroupSpec& spec,
                               const Tolerance& tol) {
  const int n = spec.order();
  if (s.size() != n) {
    throw InvalidArgument("inner-product sequence length does not match group");
  }
  // Hermitian symmetrization: s(-q) = conj(s(q)) for a Gram row.
  ComplexVector sym(n);
  for (int q = 0; q < n; ++q) {
    sym(q) = 0.5 * (s(q) + std::conj(s(spec.neg_index(q))));
  }
  const ComplexVector s_hat = ft_apply(spec, sym);
  const double scale = std::max(1.0, s_hat.cwiseAbs().maxCoeff());
  const double threshold = tol.abs * scale;

  FourierWeights out;
  out.s_hat.resize(n);
  for (int h = 0; h < n; ++h) {
    const double re = s_hat(h).real();
    if (std::abs(s_hat(h).imag()) > threshold) {
      throw NumericalError("Fourier weight at h = " + std::to_string(h) +
                           " has imaginary part " +
                           std::to_string(s_hat(h).imag()));
    }
    if (re < -threshold) {
      throw NumericalError("Fourier weight at h = " + std::to_string(h) +
                           " is negative (" + std::to_string(re) +
                           "): generator and representation are inconsistent");
    }
    out.s_hat(h) = std::max(re, 0.0);
  }
  const double top = out.s_hat.maxCoeff();
  for (int h = 0; h < n; ++h) {
    if (top > 0.0 && out.s_hat(h) > tol.rank * top) out.support.push_back(h);
  }
  return out;
}

}  // namespace internal

UnitaryRep::UnitaryRep(GroupSpec spec, std::vector<ComplexMatrix> matrices,
                       Tolerance tol)
    : spec_(std::move(spec)), matrices_(std::move(matrices)), tol_(tol) {
  const int n = spec_.order();
  if (static_cast<int>(matrices_.size()) != n) {
    throw InvalidArgument("representation has " +
                          std::to_string(matrices_.size()) +
                          " matrices for a group of order " +
                          std::to_string(n));
  }
  dim_ = static_cast<int>(matrices_[0].rows());
  if (dim_ < 1) throw InvalidArgument("representation matrices are empty");
  for (int q = 0; q < n; ++q) {
    const ComplexMatrix& u = matrices_[q];
    if (u.rows() != dim_ || u.cols() != dim_) {
      throw InvalidArgument("matrix " + std::to_string(q) + " is not " +
                            std::to_string(dim_) + " x " +
                            std::to_string(dim_));
    }
    if (!is_unitary(u, tol_.abs)) {
      throw InvalidArgument("matrix " + std::to_string(q) + " is not unitary");
    }
  }
  const ComplexMatrix id = ComplexMatrix::Identity(dim_, dim_);
  if (max_abs(matrices_[0] - id) > tol_.abs) {
    throw InvalidArgument("matrix at the identity element is not I");
  }
  auto check = [&](int a, int b) {
    const int c = spec_.add_index(a, b);
    if (max_abs(matrices_[a] * matrices_[b] - matrices_[c]) > tol_.abs) {
      throw InvalidArgument("homomorphism fails: U(a) U(b) != U(a + b) at " +
                            pair_str(a, b));
    }
  };
  if (n <= kFullTableLimit) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) check(a, b);
    }
  } else {
    for (int t = 0; t < spec_.rank(); ++t) {
      const int e = unit_index(spec_, t);
      for (int a = 0; a < n; ++a) check(a, e);
    }
  }
}

UnitaryRep UnitaryRep::FromGenerators(const GroupSpec& spec,
                                      const std::vector<ComplexMatrix>& gens,
                                      Tolerance tol) {
  if (static_cast<int>(gens.size()) != spec.rank()) {
    throw InvalidArgument("need one generator per cyclic factor");
  }
  const Eigen::Index m = gens[0].rows();
  std::vector<ComplexMatrix> matrices;
  matrices.reserve(spec.order());
  for (const GroupElement& q : spec.enumerate()) {
    ComplexMatrix u = ComplexMatrix::Identity(m, m);
    for (int t = 0; t < spec.rank(); ++t) {
      if (gens[t].rows() != m || gens[t].cols() != m) {
        throw InvalidArgument("generator matrices have mismatched sizes");
      }
      for (int p = 0; p < q.residues()[t]; ++p) u = u * gens[t];
    }
    matrices.push_back(std::move(u));
  }
  return UnitaryRep(spec, std::move(matrices), tol);
}

UnitaryRep UnitaryRep::FromCharacters(const GroupSpec& spec,
                                      const std::vector<int>& characters,
                                      const ComplexMatrix& basis,
                                      Tolerance tol) {
  const int m = static_cast<int>(characters.size());
  if (m < 1) throw InvalidArgument("need at least one character");
  if (basis.size() != 0 && (basis.rows() != m || basis.cols() != m)) {
    throw InvalidArgument("character basis must be m x m");
  }
  std::vector<ComplexMatrix> matrices;
  matrices.reserve(spec.order());
  for (int q = 0; q < spec.order(); ++q) {
    ComplexVector diag(m);
    for (int k = 0; k < m; ++k) {
      diag(k) = std::conj(ft_kernel(spec, characters[k], q));
    }
    if (basis.size() == 0) {
      matrices.push_back(diag.asDiagonal());
    } else {
      matrices.push_back(basis * diag.asDiagonal() * basis.adjoint());
    }
  }
  return UnitaryRep(spec, std::move(matrices), tol);
}

GUFrame::GUFrame(UnitaryRep rep, ComplexVector generator)
    : rep_(std::move(rep)), generator_(std::move(generator)) {
  if (generator_.size() != rep_.dim()) {
    throw InvalidArgument("generator has length " +
                          std::to_string(generator_.size()) +
                          " but representation acts on C^" +
                          std::to_string(rep_.dim()));
  }
  // Throws when the orbit does not span.
  (void)synthesize(*this);
}

Frame synthesize(const GUFrame& frame) {
  const UnitaryRep& rep = frame.rep();
  ComplexMatrix phi(rep.dim(), rep.order());
  for (int q = 0; q < rep.order(); ++q) {
    phi.col(q) = rep[q] * frame.generator();
  }
  return Frame(std::move(phi), rep.tolerance());
}

PermutedGram is_permuted_gram(const ComplexMatrix& gram, double tol) {
  if (gram.rows() != gram.cols()) {
    throw InvalidArgument("Gram matrix must be square");
  }
  const Eigen::Index n = gram.rows();
  PermutedGram out;
  out.symmetric = max_abs(gram - gram.transpose()) <= tol;
  if (n == 0) {
    out.permuted = true;
    return out;
  }
  std::vector<Complex> reference(n);
  for (Eigen::Index k = 0; k < n; ++k) reference[k] = gram(0, k);

  std::vector<std::vector<int>> maps(n);
  std::vector<Complex> values(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) values[j] = gram(i, j);
    if (!match_multiset(values, reference, tol, &maps[i])) {
      out.failing_row = static_cast<int>(i);
      return out;
    }
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) values[i] = gram(i, j);
    if (!match_multiset(values, reference, tol, nullptr)) {
      out.failing_column = static_cast<int>(j);
      return out;
    }
  }
  out.permuted = true;
  out.row_maps = std::move(maps);
  return out;
}

FtDiagonalization ft_diagonalizes(const ComplexMatrix& gram,
                                  const GroupSpec& spec, double tol) {
  if (gram.rows() != spec.order() || gram.cols() != spec.order()) {
    throw InvalidArgument("Gram matrix size " + std::to_string(gram.rows()) +
                          " does not match group order " +
                          std::to_string(spec.order()));
  }
  const ComplexMatrix f = ft_matrix(spec);
  ComplexMatrix d = f * gram * f.adjoint();
  FtDiagonalization out;
  out.diagonal_values = d.diagonal();
  d.diagonal().setZero();
  out.max_off_diagonal = max_abs(d);
  out.diagonal =
      out.max_off_diagonal <= tol * std::max(1.0, max_abs(gram));
  return out;
}

SpectralReport gu_spectral(const GUFrame& frame) {
  const UnitaryRep& rep = frame.rep();
  const GroupSpec& spec = rep.spec();
  const Tolerance& tol = rep.tolerance();
  const int n = rep.order();
  const int m = rep.dim();
  const ComplexVector& phi = frame.generator();

  SpectralReport out;
  out.s.resize(n);
  for (int q = 0; q < n; ++q) out.s(q) = phi.dot(rep[q] * phi);

  const internal::FourierWeights w = internal::fourier_weights(out.s, spec, tol);
  out.s_hat = w.s_hat;
  out.index_set = w.support;
  if (static_cast<int>(out.index_set.size()) != m) {
    throw NumericalError("Fourier support has " +
                         std::to_string(out.index_set.size()) +
                         " elements, expected the dimension " +
                         std::to_string(m));
  }
  const double root_n = std::sqrt(static_cast<double>(n));
  const double quarter_n = std::sqrt(root_n);
  out.sigma = (out.s_hat.array().sqrt() * quarter_n).matrix();

  // phi_hat(h) = (1/sqrt(n)) sum_q <h, q> phi(q) = Phi F(:, h).
  const ComplexMatrix phi_f = synthesize(frame).matrix() * ft_matrix(spec);

  out.dual_generator = ComplexVector::Zero(m);
  out.canonical_generator = ComplexVector::Zero(m);
  double lo = out.s_hat(out.index_set.front());
  double hi = lo;
  for (int h : out.index_set) {
    const ComplexVector u = phi_f.col(h) / out.sigma(h);
    out.dual_generator += u / out.sigma(h);
    out.canonical_generator += u;
    lo = std::min(lo, out.s_hat(h));
    hi = std::max(hi, out.s_hat(h));
  }
  out.dual_generator /= root_n;
  out.canonical_generator /= root_n;
  out.bounds = {root_n * lo, root_n * hi};
  return out;
}

GUFrame gu_dual(const GUFrame& frame) {
  return GUFrame(frame.rep(), gu_spectral(frame).dual_generator);
}

GUFrame gu_canonical(const GUFrame& frame) {
  return GUFrame(frame.rep(), gu_spectral(frame).canonical_generator);
}

GUFrame gram_to_gu(const ComplexMatrix& gram, const GroupSpec& spec,
                   Tolerance tol) {
  const FtDiagonalization diag = ft_diagonalizes(gram, spec, tol.abs);
  if (!diag.diagonal) {
    throw InvalidArgument(
        "Gram matrix is not diagonalized by the Fourier matrix of the group "
        "(largest off-diagonal " + std::to_string(diag.max_off_diagonal) + ")");
  }
  if (!is_hermitian(gram, tol.abs * std::max(1.0, max_abs(gram)))) {
    throw InvalidArgument("Gram matrix is not Hermitian");
  }
  const int n = spec.order();
  const internal::FourierWeights w =
      internal::fourier_weights(gram.row(0).transpose(), spec, tol);
  const int m = static_cast<int>(w.support.size());
  if (m == 0) throw InvalidArgument("Gram matrix is zero");

  const double root_n = std::sqrt(static_cast<double>(n));
  ComplexVector phi(m);
  for (int k = 0; k < m; ++k) {
    // sqrt(d_h) / sqrt(n) with d_h = sqrt(n) s_hat(h).
    phi(k) = std::sqrt(root_n * w.s_hat(w.support[k])) / root_n;
  }
  return GUFrame(UnitaryRep::FromCharacters(spec, w.support, {}, tol),
                 std::move(phi));
}

GUFrame gu_from_frame(const Frame& frame, const GroupSpec& spec) {
  const Tolerance& tol = frame.tolerance();
  const ComplexMatrix& phi = frame.matrix();
  if (phi.cols() != spec.order()) {
    throw InvalidArgument("frame size does not match group order");
  }
  const ComplexMatrix gram = gram_matrix(phi);
  const FtDiagonalization diag = ft_diagonalizes(gram, spec, tol.abs);
  if (!diag.diagonal) {
    throw InvalidArgument(
        "frame is not geometrically uniform over this group ordering "
        "(largest off-diagonal " + std::to_string(diag.max_off_diagonal) + ")");
  }
  const internal::FourierWeights w =
      internal::fourier_weights(gram.row(0).transpose(), spec, tol);
  const int m = frame.dim();
  if (static_cast<int>(w.support.size()) != m) {
    throw NumericalError("Fourier support size does not match dimension");
  }
  const double quarter_n = std::pow(static_cast<double>(spec.order()), 0.25);
  const ComplexMatrix phi_f = phi * ft_matrix(spec);
  ComplexMatrix basis(m, m);
  for (int k = 0; k < m; ++k) {
    const int h = w.support[k];
    basis.col(k) = phi_f.col(h) / (quarter_n * std::sqrt(w.s_hat(h)));
  }
  return GUFrame(UnitaryRep::FromCharacters(spec, w.support, basis, tol),
                 phi.col(0));
}

}  // namespace guframe
