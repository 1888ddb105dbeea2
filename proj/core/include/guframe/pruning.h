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
#ifndef GUFRAME_PRUNING_H_
#define GUFRAME_PRUNING_H_

#include <span>
#include <vector>

#include "guframe/gu.h"
#include "guframe/types.h"

namespace guframe {

// Eigenvalues (descending) of S - phi_j phi_j^*, the frame operator after
// removing element j.
RealVector prune_one_spectrum(const GUFrame& frame, int j);

struct PruneReport {
  RealVector spectrum;      // common spectrum, taken from j = 0
  double deviation = 0.0;   // largest entrywise spread over all j
  bool is_frame = false;    // smallest eigenvalue above the rank cutoff
  // B / A of the pruned frame; +inf when it no longer spans.
  double frame_bound_ratio = 0.0;
};

// Spectra for every single-element removal and their largest deviation.
PruneReport prune_invariance_check(const GUFrame& frame);

// Spectrum after one removal from a tight GU frame with a unit-norm
// generator: n/m with multiplicity m - 1, then n/m - 1.
RealVector pruned_tight_spectrum(int n, int m);

struct CosetSpectrum {
  RealVector spectrum;       // descending; minimum clipped to 0 if not a frame
  std::vector<int> removed;  // indices k + j, j in J, ascending
  bool is_frame = false;
};

// Removes {i : U_i = U_k U_j, j in J}.
CosetSpectrum prune_coset_spectrum(const GUFrame& frame,
                                   std::span<const int> removal_set, int k);

}  // namespace guframe

#endif  // GUFRAME_PRUNING_H_
