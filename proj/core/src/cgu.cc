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
#include "guframe/cgu.h"

#include <cmath>
#include <string>

#include "guframe/matops.h"

namespace guframe {
namespace {

ComplexMatrix cgu_matrix(const UnitaryRep& rep,
                         const std::vector<ComplexVector>& generators) {
  const int l = rep.order();
  const int r = static_cast<int>(generators.size());
  ComplexMatrix phi(rep.dim(), static_cast<Eigen::Index>(l) * r);
  for (int i = 0; i < l; ++i) {
    for (int k = 0; k < r; ++k) phi.col(i * r + k) = rep[i] * generators[k];
  }
  return phi;
}

ComplexMatrix cgu_operator(const CGUFrame& frame) {
  const ComplexMatrix phi = cgu_matrix(frame.rep(), frame.generators());
  return phi * phi.adjoint();
}

std::vector<ComplexVector> apply_all(const ComplexMatrix& op,
                                     const std::vector<ComplexVector>& vs) {
  std::vector<ComplexVector> out;
  out.reserve(vs.size());
  for (const ComplexVector& v : vs) out.push_back(op * v);
  return out;
}

}  // namespace

CGUFrame::CGUFrame(UnitaryRep rep, std::vector<ComplexVector> generators)
    : rep_(std::move(rep)), generators_(std::move(generators)) {
  if (generators_.empty()) throw InvalidArgument("CGU frame needs generators");
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (generators_[k].size() != rep_.dim()) {
      throw InvalidArgument("generator " + std::to_string(k) +
                            " has the wrong dimension");
    }
  }
  (void)cgu_synthesize(*this);
}

GUGenerators::GUGenerators(UnitaryRep gen_rep, ComplexVector seed)
    : gen_rep_(std::move(gen_rep)), seed_(std::move(seed)) {
  if (seed_.size() != gen_rep_.dim()) {
    throw InvalidArgument("seed dimension does not match generator group");
  }
}

std::vector<ComplexVector> GUGenerators::generators() const {
  std::vector<ComplexVector> out;
  out.reserve(gen_rep_.order());
  for (const ComplexMatrix& v : gen_rep_.matrices()) out.push_back(v * seed_);
  return out;
}

Frame cgu_synthesize(const CGUFrame& frame) {
  return Frame(cgu_matrix(frame.rep(), frame.generators()),
               frame.rep().tolerance());
}

std::vector<ComplexVector> cgu_dual_generators(const CGUFrame& frame) {
  return apply_all(psd_inverse(cgu_operator(frame), frame.rep().tolerance().rank),
                   frame.generators());
}

std::vector<ComplexVector> cgu_canonical_generators(const CGUFrame& frame) {
  return apply_all(
      psd_inv_sqrt(cgu_operator(frame), frame.rep().tolerance().rank),
      frame.generators());
}

BoundsEnvelope bounds_envelope(const CGUFrame& frame) {
  double norms = 0.0;
  for (const ComplexVector& g : frame.generators()) norms += g.squaredNorm();
  BoundsEnvelope out;
  out.average = static_cast<double>(frame.group_order()) / frame.dim() * norms;
  const FrameBounds b = frame_bounds(cgu_synthesize(frame));
  out.lower = b.lower;
  out.upper = b.upper;
  const double slack = frame.rep().tolerance().abs * std::max(1.0, out.upper);
  if (out.lower > out.average + slack || out.average > out.upper + slack) {
    throw NumericalError("frame bounds do not bracket the trace average");
  }
  return out;
}

CommutationPhases commutation_phases(const UnitaryRep& q_rep,
                                     const UnitaryRep& g_rep) {
  if (q_rep.dim() != g_rep.dim()) {
    throw InvalidArgument("representations act on different dimensions");
  }
  const double tol = q_rep.tolerance().abs;
  const int l = q_rep.order();
  const int r = g_rep.order();
  const ComplexMatrix id = ComplexMatrix::Identity(q_rep.dim(), q_rep.dim());
  CommutationPhases out;
  out.phases = Eigen::MatrixXd::Zero(l, r);
  for (int p = 0; p < l; ++p) {
    for (int t = 0; t < r; ++t) {
      const ComplexMatrix c = q_rep[p] * g_rep[t] * q_rep[p].adjoint() *
                              g_rep[t].adjoint();
      const double theta = std::arg(c(0, 0));
      const double dev = max_abs(c - std::polar(1.0, theta) * id);
      out.deviation = std::max(out.deviation, dev);
      if (dev > tol) {
        out.offending = std::make_pair(p, t);
        return out;
      }
      out.phases(p, t) = theta;
    }
  }
  out.scalar = true;
  return out;
}

GUFrame combined_gu(const UnitaryRep& q_rep, const UnitaryRep& g_rep,
                    const ComplexVector& seed) {
  const CommutationPhases phases = commutation_phases(q_rep, g_rep);
  if (!phases.scalar) {
    throw InvalidArgument("groups do not commute up to a phase at (" +
                          std::to_string(phases.offending->first) + ", " +
                          std::to_string(phases.offending->second) + ")");
  }
  const double tol = q_rep.tolerance().abs;
  for (int p = 0; p < phases.phases.rows(); ++p) {
    for (int t = 0; t < phases.phases.cols(); ++t) {
      if (std::abs(phases.phases(p, t)) > tol) {
        throw InvalidArgument(
            "nonzero commutation phase at (" + std::to_string(p) + ", " +
            std::to_string(t) +
            "): the product is not a group; use the compound (CGU) path");
      }
    }
  }
  const int l = q_rep.order();
  const int r = g_rep.order();
  std::vector<ComplexMatrix> matrices;
  matrices.reserve(static_cast<std::size_t>(l) * r);
  for (int i = 0; i < l; ++i) {
    for (int k = 0; k < r; ++k) matrices.push_back(q_rep[i] * g_rep[k]);
  }
  return GUFrame(UnitaryRep(q_rep.spec().product(g_rep.spec()),
                            std::move(matrices), q_rep.tolerance()),
                 seed);
}

SeedGenerators cgu_fast_generators(const UnitaryRep& q_rep,
                                   const GUGenerators& gens) {
  const CommutationPhases phases = commutation_phases(q_rep, gens.gen_rep());
  if (!phases.scalar) {
    throw NumericalError("commutator is not scalar at (" +
                         std::to_string(phases.offending->first) + ", " +
                         std::to_string(phases.offending->second) + ")");
  }
  const CGUFrame frame(q_rep, gens.generators());
  const ComplexMatrix s = cgu_operator(frame);
  const double rank_tol = q_rep.tolerance().rank;
  return {psd_inverse(s, rank_tol) * gens.seed(),
          psd_inv_sqrt(s, rank_tol) * gens.seed()};
}

}  // namespace guframe
