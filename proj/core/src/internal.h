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
#ifndef GUFRAME_SRC_INTERNAL_H_
#define GUFRAME_SRC_INTERNAL_H_

#include <vector>

#include "guframe/abelian.h"
#include "guframe/types.h"

namespace guframe::internal {

struct FourierWeights {
  RealVector s_hat;          // real, clipped at 0
  std::vector<int> support;  // h with s_hat(h) > rank * max
};

// FT of a Gram row after Hermitian symmetrization. Imaginary parts or
// negative values beyond tol.abs * max(1, |s_hat|_inf) raise NumericalError.
FourierWeights fourier_weights(const ComplexVector& s, const GroupSpec& spec,
                               const Tolerance& tol);

}  // namespace guframe::internal

#endif  // GUFRAME_SRC_INTERNAL_H_
