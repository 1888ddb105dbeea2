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
#include "guframe/distance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/SVD>

#include "guframe/matops.h"

namespace guframe {
namespace {

// min_{i != 0} 2 (1 - Re <phi, U^i phi>) for U = diag(exp(2 pi i u_k / n)),
// phi = ones / sqrt(m), evaluated without building matrices.
double cyclic_min_distance(int n, const std::vector<int>& u) {
  const double m = static_cast<double>(u.size());
  double best = std::numeric_limits<double>::infinity();
  for (int i = 1; i < n; ++i) {
    double re = 0.0;
    for (int uk : u) {
      const long long r = (static_cast<long long>(uk) * i) % n;
      re += std::cos(2.0 * std::numbers::pi * static_cast<double>(r) / n);
    }
    best = std::min(best, 2.0 * (1.0 - re / m));
  }
  return best;
}

}  // namespace

DistanceProfile distance_profile(const GUFrame& frame) {
  const UnitaryRep& rep = frame.rep();
  ComplexVector phi = frame.generator();
  DistanceProfile out;
  const double norm = phi.norm();
  if (std::abs(norm - 1.0) > rep.tolerance().abs) {
    phi /= norm;
    out.normalized = true;
  }
  out.d.resize(rep.order());
  for (int i = 0; i < rep.order(); ++i) {
    out.d(i) = 2.0 * (1.0 - phi.dot(rep[i] * phi).real());
  }
  out.d(0) = 0.0;
  return out;
}

FixedPointFree is_fixed_point_free(const UnitaryRep& rep) {
  const ComplexMatrix id = ComplexMatrix::Identity(rep.dim(), rep.dim());
  FixedPointFree out;
  out.min_singular_value = std::numeric_limits<double>::infinity();
  for (int i = 1; i < rep.order(); ++i) {
    Eigen::JacobiSVD<ComplexMatrix> solver(id - rep[i]);
    const double smallest =
        solver.singularValues()(solver.singularValues().size() - 1);
    out.min_singular_value = std::min(out.min_singular_value, smallest);
    if (smallest <= rep.tolerance().abs && !out.witness) out.witness = i;
  }
  out.fixed_point_free = !out.witness.has_value();
  if (rep.order() == 1) out.min_singular_value = 0.0;
  return out;
}

UnitaryRep cyclic_fpf_rep(int n, std::span<const int> u) {
  if (n < 1) throw InvalidArgument("group order must be >= 1");
  if (u.empty()) throw InvalidArgument("need at least one exponent u_k");
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (std::gcd(u[k], n) != 1) {
      throw InvalidArgument("u[" + std::to_string(k) + "] = " +
                            std::to_string(u[k]) + " is not coprime to " +
                            std::to_string(n));
    }
  }
  // Character index h = u_k mod n gives conj <h, 1> = exp(2 pi i u_k / n).
  const GroupSpec spec = GroupSpec::Cyclic(n);
  std::vector<int> characters;
  characters.reserve(u.size());
  for (int uk : u) characters.push_back((uk % n + n) % n);
  return UnitaryRep::FromCharacters(spec, characters);
}

long long totient(long long n) {
  if (n < 1) throw InvalidArgument("totient needs n >= 1");
  long long result = n;
  long long rest = n;
  for (long long p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      while (rest % p == 0) rest /= p;
      result -= result / p;
    }
  }
  if (rest > 1) result -= result / rest;
  return result;
}

DistanceSearch min_distance_search(
    int n, int m, const std::optional<std::vector<std::vector<int>>>& candidates) {
  if (n < 2) throw InvalidArgument("distance search needs n >= 2");
  if (m < 1) throw InvalidArgument("distance search needs m >= 1");

  DistanceSearch best;
  best.d_min = -1.0;
  auto consider = [&](const std::vector<int>& u) {
    const double d = cyclic_min_distance(n, u);
    // Strict improvement keeps the first (lexicographically smallest) tie.
    if (d > best.d_min + 1e-12) {
      best.d_min = d;
      best.u = u;
    }
  };

  if (candidates) {
    if (candidates->empty()) throw InvalidArgument("candidate list is empty");
    std::vector<std::vector<int>> sorted = *candidates;
    for (const std::vector<int>& u : sorted) {
      if (static_cast<int>(u.size()) != m) {
        throw InvalidArgument("candidate tuple has the wrong length");
      }
      for (int uk : u) {
        if (std::gcd(uk, n) != 1) {
          throw InvalidArgument("candidate exponent " + std::to_string(uk) +
                                " is not coprime to " + std::to_string(n));
        }
      }
    }
    std::sort(sorted.begin(), sorted.end());
    for (const std::vector<int>& u : sorted) consider(u);
    return best;
  }

  std::vector<int> units;
  for (int k = 1; k < n; ++k) {
    if (std::gcd(k, n) == 1) units.push_back(k);
  }
  const double space = std::pow(static_cast<double>(units.size()), m);
  if (space > static_cast<double>(kDistanceSearchLimit)) {
    throw InvalidArgument("search space of " + std::to_string(space) +
                          " tuples exceeds the limit; supply candidates");
  }
  // Odometer over units^m in lexicographic order.
  std::vector<int> digits(m, 0);
  std::vector<int> u(m);
  while (true) {
    for (int k = 0; k < m; ++k) u[k] = units[digits[k]];
    consider(u);
    int pos = m - 1;
    while (pos >= 0 && ++digits[pos] == static_cast<int>(units.size())) {
      digits[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return best;
}

}  // namespace guframe
