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
#include "guframe/pruning.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "guframe/matops.h"

namespace guframe {
namespace {

void check_index(const GUFrame& frame, int j) {
  if (j < 0 || j >= frame.size()) {
    throw InvalidArgument("element index " + std::to_string(j) +
                          " out of range [0, " + std::to_string(frame.size()) +
                          ")");
  }
}

bool spans(const RealVector& spectrum, double rank_tol) {
  const double top = spectrum(0);
  return top > 0.0 && spectrum(spectrum.size() - 1) > rank_tol * top;
}

}  // namespace

RealVector prune_one_spectrum(const GUFrame& frame, int j) {
  check_index(frame, j);
  const ComplexMatrix phi = synthesize(frame).matrix();
  const ComplexVector v = phi.col(j);
  return herm_eig(phi * phi.adjoint() - v * v.adjoint()).values;
}

PruneReport prune_invariance_check(const GUFrame& frame) {
  const ComplexMatrix phi = synthesize(frame).matrix();
  const ComplexMatrix s = phi * phi.adjoint();
  PruneReport out;
  for (int j = 0; j < frame.size(); ++j) {
    const ComplexVector v = phi.col(j);
    const RealVector spectrum = herm_eig(s - v * v.adjoint()).values;
    if (j == 0) {
      out.spectrum = spectrum;
    } else {
      out.deviation = std::max(
          out.deviation, (spectrum - out.spectrum).cwiseAbs().maxCoeff());
    }
  }
  out.is_frame = spans(out.spectrum, frame.rep().tolerance().rank);
  out.frame_bound_ratio =
      out.is_frame ? out.spectrum(0) / out.spectrum(out.spectrum.size() - 1)
                   : std::numeric_limits<double>::infinity();
  return out;
}

RealVector pruned_tight_spectrum(int n, int m) {
  if (m < 1) throw InvalidArgument("dimension must be >= 1");
  if (n < m) {
    throw InvalidArgument("tight frame needs n >= m, got n = " +
                          std::to_string(n) + ", m = " + std::to_string(m));
  }
  const double redundancy = static_cast<double>(n) / m;
  RealVector out = RealVector::Constant(m, redundancy);
  out(m - 1) = redundancy - 1.0;
  return out;
}

CosetSpectrum prune_coset_spectrum(const GUFrame& frame,
                                   std::span<const int> removal_set, int k) {
  check_index(frame, k);
  const GroupSpec& spec = frame.rep().spec();
  CosetSpectrum out;
  for (int j : removal_set) {
    check_index(frame, j);
    out.removed.push_back(spec.add_index(k, j));
  }
  std::sort(out.removed.begin(), out.removed.end());
  out.removed.erase(std::unique(out.removed.begin(), out.removed.end()),
                    out.removed.end());

  const ComplexMatrix phi = synthesize(frame).matrix();
  ComplexMatrix s = phi * phi.adjoint();
  for (int i : out.removed) s -= phi.col(i) * phi.col(i).adjoint();
  out.spectrum = herm_eig(s).values;

  const double top = std::max(out.spectrum(0), 0.0);
  const double floor = frame.rep().tolerance().rank * std::max(top, 1.0);
  for (Eigen::Index i = 0; i < out.spectrum.size(); ++i) {
    if (std::abs(out.spectrum(i)) <= floor) out.spectrum(i) = 0.0;
  }
  out.is_frame = spans(out.spectrum, frame.rep().tolerance().rank);
  return out;
}

}  // namespace guframe
