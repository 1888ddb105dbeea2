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
#include "guframe/frame.h"

#include <string>

#include "guframe/matops.h"

namespace guframe {
namespace {

void check_vector_dim(Eigen::Index got, Eigen::Index want, const char* what) {
  if (got != want) {
    throw InvalidArgument(std::string(what) + ": expected length " +
                          std::to_string(want) + ", got " +
                          std::to_string(got));
  }
}

}  // namespace

Frame::Frame(ComplexMatrix phi, Tolerance tol)
    : phi_(std::move(phi)), tol_(tol) {
  if (phi_.rows() < 1) throw InvalidArgument("frame dimension must be >= 1");
  if (phi_.cols() < phi_.rows()) {
    throw InvalidArgument("frame needs n >= m vectors: m = " +
                          std::to_string(phi_.rows()) +
                          ", n = " + std::to_string(phi_.cols()));
  }
  if (!phi_.allFinite()) throw InvalidArgument("frame has non-finite entries");
  const int rank = numerical_rank(phi_, tol_.rank);
  if (rank != phi_.rows()) {
    throw InvalidArgument("vectors do not span C^" +
                          std::to_string(phi_.rows()) + " (rank " +
                          std::to_string(rank) + "): not a frame");
  }
}

ComplexMatrix frame_operator(const Frame& frame) {
  return frame.matrix() * frame.matrix().adjoint();
}

ComplexMatrix gram_matrix(const ComplexMatrix& phi) {
  return phi.adjoint() * phi;
}

FrameBounds frame_bounds(const Frame& frame) {
  const HermEig eig = herm_eig(frame_operator(frame));
  return {eig.values(eig.values.size() - 1), eig.values(0)};
}

Frame dual_frame(const Frame& frame) {
  const ComplexMatrix s_inv =
      psd_inverse(frame_operator(frame), frame.tolerance().rank);
  return Frame(s_inv * frame.matrix(), frame.tolerance());
}

Frame canonical_tight(const Frame& frame) {
  const ComplexMatrix s_inv_sqrt =
      psd_inv_sqrt(frame_operator(frame), frame.tolerance().rank);
  return Frame(s_inv_sqrt * frame.matrix(), frame.tolerance());
}

ComplexVector expand(const Frame& frame, const ComplexVector& x) {
  check_vector_dim(x.size(), frame.dim(), "expand");
  return dual_frame(frame).matrix().adjoint() * x;
}

ComplexVector reconstruct(const Frame& frame, const ComplexVector& coeffs) {
  check_vector_dim(coeffs.size(), frame.size(), "reconstruct");
  return frame.matrix() * coeffs;
}

double r_phi_mu(const Frame& frame, const Frame& tight) {
  if (frame.dim() != tight.dim() || frame.size() != tight.size()) {
    throw InvalidArgument("r_phi_mu: frames have different shapes");
  }
  const ComplexMatrix& m = tight.matrix();
  const ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.rows());
  const double tol = frame.tolerance().abs * 100.0;
  if (max_abs(m * m.adjoint() - id) > tol) {
    throw InvalidArgument("r_phi_mu: second frame is not normalized tight");
  }
  double total = 0.0;
  for (int i = 0; i < frame.size(); ++i) {
    total += std::norm(frame.matrix().col(i).dot(m.col(i)));
  }
  return total;
}

}  // namespace guframe
