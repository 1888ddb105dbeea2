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
#include "guframe/abelian.h"

#include <cmath>
#include <numbers>
#include <string>

namespace guframe {
namespace {

// exp(-2 pi i r / n) with exact values on the quarter turns.
Complex unit_root(long long r, long long n) {
  r %= n;
  if (r < 0) r += n;
  if ((4 * r) % n == 0) {
    switch ((4 * r) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, -1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, 1.0};
    }
  }
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(r) /
                       static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

void check_same_group(const GroupElement& a, const GroupElement& b) {
  if (a.moduli() != b.moduli()) {
    throw InvalidArgument("group elements belong to different groups");
  }
}

}  // namespace

GroupSpec::GroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw InvalidArgument("group spec needs at least one cyclic factor");
  }
  long long order = 1;
  for (int f : factors_) {
    if (f < 1) {
      throw InvalidArgument("cyclic factor must be >= 1, got " +
                            std::to_string(f));
    }
    order *= f;
    if (order > (1LL << 30)) throw InvalidArgument("group order too large");
  }
  order_ = static_cast<int>(order);
}

void GroupSpec::check_index(int index) const {
  if (index < 0 || index >= order_) {
    throw InvalidArgument("group element index " + std::to_string(index) +
                          " out of range for order " + std::to_string(order_));
  }
}

GroupElement GroupSpec::identity() const {
  return GroupElement(*this, std::vector<int>(factors_.size(), 0));
}

GroupElement GroupSpec::element(int index) const {
  check_index(index);
  std::vector<int> residues(factors_.size());
  for (int t = rank() - 1; t >= 0; --t) {
    residues[t] = index % factors_[t];
    index /= factors_[t];
  }
  return GroupElement(*this, std::move(residues));
}

std::vector<GroupElement> GroupSpec::enumerate() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (int i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

int GroupSpec::index_of(const std::vector<int>& residues) const {
  if (residues.size() != factors_.size()) {
    throw InvalidArgument("residue tuple length does not match group rank");
  }
  int index = 0;
  for (std::size_t t = 0; t < factors_.size(); ++t) {
    if (residues[t] < 0 || residues[t] >= factors_[t]) {
      throw InvalidArgument("residue out of range");
    }
    index = index * factors_[t] + residues[t];
  }
  return index;
}

int GroupSpec::add_index(int a, int b) const {
  check_index(a);
  check_index(b);
  int result = 0;
  int stride = 1;
  for (int t = rank() - 1; t >= 0; --t) {
    const int n = factors_[t];
    const int r = (a % n + b % n) % n;
    result += r * stride;
    stride *= n;
    a /= n;
    b /= n;
  }
  return result;
}

int GroupSpec::neg_index(int a) const {
  check_index(a);
  int result = 0;
  int stride = 1;
  for (int t = rank() - 1; t >= 0; --t) {
    const int n = factors_[t];
    const int r = (n - a % n) % n;
    result += r * stride;
    stride *= n;
    a /= n;
  }
  return result;
}

GroupSpec GroupSpec::product(const GroupSpec& other) const {
  std::vector<int> factors = factors_;
  factors.insert(factors.end(), other.factors_.begin(), other.factors_.end());
  return GroupSpec(std::move(factors));
}

GroupElement::GroupElement(const GroupSpec& spec, std::vector<int> residues)
    : moduli_(spec.factors()), residues_(std::move(residues)) {
  if (residues_.size() != moduli_.size()) {
    throw InvalidArgument("residue tuple length does not match group rank");
  }
  for (std::size_t t = 0; t < moduli_.size(); ++t) {
    if (residues_[t] < 0 || residues_[t] >= moduli_[t]) {
      throw InvalidArgument("residue " + std::to_string(residues_[t]) +
                            " out of range for Z_" +
                            std::to_string(moduli_[t]));
    }
  }
}

int GroupElement::index() const {
  int index = 0;
  for (std::size_t t = 0; t < moduli_.size(); ++t) {
    index = index * moduli_[t] + residues_[t];
  }
  return index;
}

GroupElement add(const GroupElement& g, const GroupElement& h) {
  check_same_group(g, h);
  std::vector<int> r(g.residues().size());
  for (std::size_t t = 0; t < r.size(); ++t) {
    r[t] = (g.residues()[t] + h.residues()[t]) % g.moduli()[t];
  }
  return GroupElement(GroupSpec(g.moduli()), std::move(r));
}

GroupElement neg(const GroupElement& g) {
  std::vector<int> r(g.residues().size());
  for (std::size_t t = 0; t < r.size(); ++t) {
    r[t] = (g.moduli()[t] - g.residues()[t]) % g.moduli()[t];
  }
  return GroupElement(GroupSpec(g.moduli()), std::move(r));
}

Complex ft_kernel(const GroupElement& h, const GroupElement& q) {
  check_same_group(h, q);
  Complex value{1.0, 0.0};
  for (std::size_t t = 0; t < h.moduli().size(); ++t) {
    value *= unit_root(static_cast<long long>(h.residues()[t]) * q.residues()[t],
                       h.moduli()[t]);
  }
  return value;
}

Complex ft_kernel(const GroupSpec& spec, int h, int q) {
  return ft_kernel(spec.element(h), spec.element(q));
}

ComplexMatrix ft_matrix(const GroupSpec& spec) {
  const int n = spec.order();
  const std::vector<GroupElement> elements = spec.enumerate();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix f(n, n);
  for (int h = 0; h < n; ++h) {
    for (int q = h; q < n; ++q) {
      const Complex v = ft_kernel(elements[h], elements[q]) * scale;
      f(h, q) = v;
      f(q, h) = v;
    }
  }
  return f;
}

ComplexVector ft_apply(const GroupSpec& spec, const ComplexVector& v) {
  if (v.size() != spec.order()) {
    throw InvalidArgument("vector length " + std::to_string(v.size()) +
                          " does not match group order " +
                          std::to_string(spec.order()));
  }
  return ft_matrix(spec) * v;
}

ComplexVector ift_apply(const GroupSpec& spec, const ComplexVector& v) {
  if (v.size() != spec.order()) {
    throw InvalidArgument("vector length " + std::to_string(v.size()) +
                          " does not match group order " +
                          std::to_string(spec.order()));
  }
  return ft_matrix(spec).adjoint() * v;
}

}  // namespace guframe
