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
#ifndef GUFRAME_GU_H_
#define GUFRAME_GU_H_

#include <vector>

#include "guframe/abelian.h"
#include "guframe/frame.h"
#include "guframe/types.h"

namespace guframe {

// An abelian group of m x m unitaries {U(q), q in Q}, stored in the
// enumeration order of `spec`.
//
// Construction verifies unitarity, U(0) = I and U(q) U(q') = U(q + q').
// For order <= 512 the full product table is compared; above that every
// step U(q) U(e_t) = U(q + e_t) along the unit elements e_t is compared,
// which implies the full table.
class UnitaryRep {
 public:
  UnitaryRep(GroupSpec spec, std::vector<ComplexMatrix> matrices,
             Tolerance tol = {});

  // U(q) = G_1^{q_1} ... G_p^{q_p} from one generator per cyclic factor.
  static UnitaryRep FromGenerators(const GroupSpec& spec,
                                   const std::vector<ComplexMatrix>& gens,
                                   Tolerance tol = {});

  // U(q) = W diag(conj <h_k, q>) W^* for character indices h_1..h_m and a
  // unitary basis W (identity when empty).
  static UnitaryRep FromCharacters(const GroupSpec& spec,
                                   const std::vector<int>& characters,
                                   const ComplexMatrix& basis = {},
                                   Tolerance tol = {});

  const GroupSpec& spec() const { return spec_; }
  int order() const { return spec_.order(); }
  int dim() const { return dim_; }
  const ComplexMatrix& operator[](int index) const { return matrices_[index]; }
  const std::vector<ComplexMatrix>& matrices() const { return matrices_; }
  const Tolerance& tolerance() const { return tol_; }

 private:
  GroupSpec spec_;
  std::vector<ComplexMatrix> matrices_;
  int dim_ = 0;
  Tolerance tol_;
};

// {U(q) phi, q in Q}; construction checks that the vectors span C^m.
class GUFrame {
 public:
  GUFrame(UnitaryRep rep, ComplexVector generator);

  const UnitaryRep& rep() const { return rep_; }
  const ComplexVector& generator() const { return generator_; }
  int dim() const { return rep_.dim(); }
  int size() const { return rep_.order(); }

 private:
  UnitaryRep rep_;
  ComplexVector generator_;
};

// Column q is U(q) phi.
Frame synthesize(const GUFrame& frame);

struct PermutedGram {
  bool permuted = false;   // every row and column permutes row 0
  bool symmetric = false;  // G == G^T
  // row_maps[i][j] = k with G(i, j) ~ G(0, k); filled only when permuted.
  std::vector<std::vector<int>> row_maps;
  int failing_row = -1;     // first row that is not a permutation of row 0
  int failing_column = -1;  // likewise for columns

  bool gu() const { return permuted && symmetric; }
};

PermutedGram is_permuted_gram(const ComplexMatrix& gram,
                              double tol = Tolerance{}.abs);

struct FtDiagonalization {
  bool diagonal = false;
  double max_off_diagonal = 0.0;
  ComplexVector diagonal_values;  // diag of F G F^*
};

// Tests whether F G F^* is diagonal for the FT matrix F of `spec`.
FtDiagonalization ft_diagonalizes(const ComplexMatrix& gram,
                                  const GroupSpec& spec,
                                  double tol = Tolerance{}.abs);

// Everything the Fourier fast path derives from the inner-product sequence.
struct SpectralReport {
  ComplexVector s;               // s(q) = <phi(0), phi(q)>
  RealVector s_hat;              // FT of s, real and non-negative
  RealVector sigma;              // n^{1/4} sqrt(s_hat): singular values of Phi
  std::vector<int> index_set;    // h with s_hat(h) above the rank cutoff
  FrameBounds bounds;            // sqrt(n) * min / max of s_hat over index_set
  ComplexVector dual_generator;       // S^{-1} phi
  ComplexVector canonical_generator;  // S^{-1/2} phi
};

SpectralReport gu_spectral(const GUFrame& frame);
GUFrame gu_dual(const GUFrame& frame);
GUFrame gu_canonical(const GUFrame& frame);

// A GU frame {U(q) phi} whose Gram matrix equals `gram`. The unitary basis
// left free by the SVD factorization is fixed to the identity, so
// U(q) = diag(conj <h, q>) over the support of the spectrum.
GUFrame gram_to_gu(const ComplexMatrix& gram, const GroupSpec& spec,
                   Tolerance tol = {});

// Recovers the generating group of an ordered frame whose Gram matrix is
// diagonalized by the FT of `spec`: U(q) = sum_h conj <h, q> u(h) u(h)^*
// with u(h) the normalized columns of Phi F. The result synthesizes back to
// `frame` column for column.
GUFrame gu_from_frame(const Frame& frame, const GroupSpec& spec);

}  // namespace guframe

#endif  // GUFRAME_GU_H_
