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

#ifndef GUFRAME_ABELIAN_H_
#define GUFRAME_ABELIAN_H_

#include <cstddef>
#include <vector>

#include "guframe/types.h"

namespace guframe {

class GroupElement;

// A finite abelian group Z_{n_1} x ... x Z_{n_p}.
//
// Elements are indexed in mixed-radix lexicographic order with the last
// factor varying fastest, so index 0 is the identity. Every matrix indexed
// by group elements (Gram matrices, FT matrices, representations) uses this
// order.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<int> factors);

  // Z_n.
  static GroupSpec Cyclic(int n) { return GroupSpec({n}); }

  const std::vector<int>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  int order() const { return order_; }

  GroupElement identity() const;
  GroupElement element(int index) const;
  std::vector<GroupElement> enumerate() const;

  // Index arithmetic on the enumeration order.
  int index_of(const std::vector<int>& residues) const;
  int add_index(int a, int b) const;
  int neg_index(int a) const;
  int sub_index(int a, int b) const { return add_index(a, neg_index(b)); }

  // Direct product; factors of `other` are appended after ours, so the
  // product index of (i, k) is i * other.order() + k.
  GroupSpec product(const GroupSpec& other) const;

  bool operator==(const GroupSpec& other) const {
    return factors_ == other.factors_;
  }

 private:
  void check_index(int index) const;

  std::vector<int> factors_;
  int order_ = 1;
};

// A residue tuple (q_1, ..., q_p) with 0 <= q_t < n_t.
class GroupElement {
 public:
  GroupElement(const GroupSpec& spec, std::vector<int> residues);

  const std::vector<int>& residues() const { return residues_; }
  const std::vector<int>& moduli() const { return moduli_; }
  int index() const;

  bool operator==(const GroupElement& other) const {
    return moduli_ == other.moduli_ && residues_ == other.residues_;
  }

 private:
  std::vector<int> moduli_;
  std::vector<int> residues_;
};

GroupElement add(const GroupElement& g, const GroupElement& h);
GroupElement neg(const GroupElement& g);

// <h, q> = prod_t exp(-2 pi i h_t q_t / n_t).
Complex ft_kernel(const GroupElement& h, const GroupElement& q);
Complex ft_kernel(const GroupSpec& spec, int h, int q);

// n x n unitary matrix with entry (h, q) = <h, q> / sqrt(n).
ComplexMatrix ft_matrix(const GroupSpec& spec);

ComplexVector ft_apply(const GroupSpec& spec, const ComplexVector& v);
ComplexVector ift_apply(const GroupSpec& spec, const ComplexVector& v);

}  // namespace guframe

#endif  // GUFRAME_ABELIAN_H_
