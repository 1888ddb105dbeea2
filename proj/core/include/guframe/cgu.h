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
#ifndef GUFRAME_CGU_H_
#define GUFRAME_CGU_H_

#include <optional>
#include <utility>
#include <vector>

#include "guframe/frame.h"
#include "guframe/gu.h"
#include "guframe/types.h"

namespace guframe {

// Compound GU frame {U_i phi_k : i < l, k < r}.
//
// Columns are ordered with the group index outer and the generator index
// inner: column i * r + k holds U_i phi_k.
class CGUFrame {
 public:
  CGUFrame(UnitaryRep rep, std::vector<ComplexVector> generators);

  const UnitaryRep& rep() const { return rep_; }
  const std::vector<ComplexVector>& generators() const { return generators_; }
  int dim() const { return rep_.dim(); }
  int group_order() const { return rep_.order(); }
  int generator_count() const { return static_cast<int>(generators_.size()); }

 private:
  UnitaryRep rep_;
  std::vector<ComplexVector> generators_;
};

// Generators that are themselves GU: phi_k = V_k phi.
class GUGenerators {
 public:
  GUGenerators(UnitaryRep gen_rep, ComplexVector seed);

  const UnitaryRep& gen_rep() const { return gen_rep_; }
  const ComplexVector& seed() const { return seed_; }
  std::vector<ComplexVector> generators() const;

 private:
  UnitaryRep gen_rep_;
  ComplexVector seed_;
};

Frame cgu_synthesize(const CGUFrame& frame);

// S^{-1} phi_k and S^{-1/2} phi_k for every generator.
std::vector<ComplexVector> cgu_dual_generators(const CGUFrame& frame);
std::vector<ComplexVector> cgu_canonical_generators(const CGUFrame& frame);

struct BoundsEnvelope {
  double lower = 0.0;    // A
  double average = 0.0;  // (l / m) sum_k |phi_k|^2
  double upper = 0.0;    // B
};

// Computes the trace average and the exact bounds; throws NumericalError if
// A <= average <= B fails.
BoundsEnvelope bounds_envelope(const CGUFrame& frame);

struct CommutationPhases {
  bool scalar = false;
  // theta(p, t) in (-pi, pi] with U_p V_t U_p^* V_t^* = e^{i theta} I.
  Eigen::MatrixXd phases;
  // First (p, t) whose commutator is not a scalar multiple of I.
  std::optional<std::pair<int, int>> offending;
  double deviation = 0.0;  // largest |commutator - e^{i theta} I| entry
};

CommutationPhases commutation_phases(const UnitaryRep& q_rep,
                                     const UnitaryRep& g_rep);

// The GU frame {U_i V_k phi} over spec(Q) x spec(G); requires every phase to
// vanish. Index i * r + k of the product group matches the CGU column order.
GUFrame combined_gu(const UnitaryRep& q_rep, const UnitaryRep& g_rep,
                    const ComplexVector& seed);

struct SeedGenerators {
  ComplexVector dual;       // S^{-1} phi
  ComplexVector canonical;  // S^{-1/2} phi
};

// Single-seed dual and canonical generators of {U_i V_k phi} when Q and G
// commute up to phase: dual_{ik} = U_i V_k dual, canonical likewise.
SeedGenerators cgu_fast_generators(const UnitaryRep& q_rep,
                                   const GUGenerators& gens);

}  // namespace guframe

#endif  // GUFRAME_CGU_H_
