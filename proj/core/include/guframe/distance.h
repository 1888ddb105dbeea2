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
#ifndef GUFRAME_DISTANCE_H_
#define GUFRAME_DISTANCE_H_

#include <optional>
#include <span>
#include <vector>

#include "guframe/gu.h"
#include "guframe/types.h"

namespace guframe {

struct DistanceProfile {
  // d(i) = |phi - phi_i|^2 = 2 (1 - Re a_i), a_i = <phi, U_i phi>.
  RealVector d;
  // True when the generator was rescaled to unit norm first.
  bool normalized = false;
};

DistanceProfile distance_profile(const GUFrame& frame);

struct FixedPointFree {
  bool fixed_point_free = false;
  // First non-identity index whose matrix has eigenvalue 1.
  std::optional<int> witness;
  // Smallest singular value of I - U_i over the non-identity elements.
  double min_singular_value = 0.0;
};

// No non-identity U_i has eigenvalue 1, tested as
// sigma_min(I - U_i) > tol.abs.
FixedPointFree is_fixed_point_free(const UnitaryRep& rep);

// Cyclic group {U^k} on Z_n with U = diag(exp(2 pi i u_k / n)).
// Every u_k must be coprime to n.
UnitaryRep cyclic_fpf_rep(int n, std::span<const int> u);

// Number of 1 <= k <= n coprime to n (totient(1) = 1).
long long totient(long long n);

struct DistanceSearch {
  std::vector<int> u;
  double d_min = 0.0;
};

inline constexpr long long kDistanceSearchLimit = 1'000'000;

// Maximizes min_{i != 0} d(i) over cyclic_fpf_rep(n, u) with generator
// (1, ..., 1) / sqrt(m). Without candidates, enumerates all coprime tuples
// in [1, n) (requires totient(n)^m <= kDistanceSearchLimit). Ties go to the
// lexicographically smallest u.
DistanceSearch min_distance_search(
    int n, int m,
    const std::optional<std::vector<std::vector<int>>>& candidates = {});

}  // namespace guframe

#endif  // GUFRAME_DISTANCE_H_
