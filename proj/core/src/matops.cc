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
#include "guframe/matops.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace guframe {
namespace {

constexpr double kPhaseFloor = 1e-12;

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw InvalidArgument(std::string(what) + ": matrix must be square");
  }
}

// Multiplies column `col` of v (and of u when paired) so that the first
// significant entry of the v column becomes real non-negative.
void fix_phase(ComplexMatrix& v, int col, ComplexMatrix* u) {
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const Complex z = v(i, col);
    if (std::abs(z) > kPhaseFloor) {
      const Complex phase = std::conj(z) / std::abs(z);
      v.col(col) *= phase;
      if (u != nullptr) u->col(col) *= phase;
      return;
    }
  }
}

void check_series_args(const ComplexMatrix& s, double a, double b, int terms) {
  require_square(s, "series");
  if (!(a > 0.0)) throw InvalidArgument("series: lower bound A must be > 0");
  if (b < a) throw InvalidArgument("series: requires A <= B");
  if (terms < 0) throw InvalidArgument("series: terms must be >= 0");
}

}  // namespace

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  return a.rows() == a.cols() && max_abs(a - a.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const ComplexMatrix id = ComplexMatrix::Identity(a.rows(), a.cols());
  return max_abs(a * a.adjoint() - id) <= tol;
}

HermEig herm_eig(const ComplexMatrix& a, double tol) {
  require_square(a, "herm_eig");
  const double scale = std::max(1.0, max_abs(a));
  if (max_abs(a - a.adjoint()) > tol * scale) {
    throw InvalidArgument("herm_eig: matrix is not Hermitian");
  }
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("herm_eig: eigensolver did not converge");
  }
  const Eigen::Index n = a.rows();
  HermEig out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  // Eigen sorts ascending.
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

SvdResult svd(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> solver(a, Eigen::ComputeFullU |
                                                Eigen::ComputeFullV);
  SvdResult out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
  const int k = static_cast<int>(out.singular_values.size());
  for (int col = 0; col < out.v.cols(); ++col) {
    fix_phase(out.v, col, col < k ? &out.u : nullptr);
  }
  return out;
}

int numerical_rank(const ComplexMatrix& a, double rank_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> solver(a);
  const RealVector& sv = solver.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cutoff = rank_tol * sv(0);
  return static_cast<int>((sv.array() > cutoff).count());
}

ComplexMatrix psd_fun(const ComplexMatrix& a,
                      const std::function<double(double)>& f,
                      double rank_tol) {
  const HermEig eig = herm_eig(a);
  const Eigen::Index n = a.rows();
  const double top = n > 0 ? std::max(eig.values(0), 0.0) : 0.0;
  RealVector mapped = RealVector::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (eig.values(k) > rank_tol * top && eig.values(k) > 0.0) {
      mapped(k) = f(eig.values(k));
    }
  }
  return eig.vectors * mapped.cast<Complex>().asDiagonal() *
         eig.vectors.adjoint();
}

ComplexMatrix psd_inverse(const ComplexMatrix& a, double rank_tol) {
  return psd_fun(a, [](double x) { return 1.0 / x; }, rank_tol);
}

ComplexMatrix psd_inv_sqrt(const ComplexMatrix& a, double rank_tol) {
  return psd_fun(a, [](double x) { return 1.0 / std::sqrt(x); }, rank_tol);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a, double rank_tol) {
  return psd_fun(a, [](double x) { return std::sqrt(x); }, rank_tol);
}

ComplexMatrix polar_unitary(const ComplexMatrix& x) {
  require_square(x, "polar_unitary");
  const SvdResult d = svd(x);
  return d.u * d.v.adjoint();
}

ComplexMatrix neumann_inverse(const ComplexMatrix& s, double a, double b,
                              int terms) {
  check_series_args(s, a, b, terms);
  const double c = 2.0 / (a + b);
  const ComplexMatrix id = ComplexMatrix::Identity(s.rows(), s.cols());
  const ComplexMatrix step = id - c * s;
  ComplexMatrix power = id;
  ComplexMatrix sum = id;
  for (int l = 1; l <= terms; ++l) {
    power = power * step;
    sum += power;
  }
  return c * sum;
}

ComplexMatrix series_invsqrt(const ComplexMatrix& s, double a, double b,
                             int terms) {
  check_series_args(s, a, b, terms);
  const double c = 2.0 / (a + b);
  const ComplexMatrix id = ComplexMatrix::Identity(s.rows(), s.cols());
  const ComplexMatrix step = id - c * s;
  ComplexMatrix power = id;
  ComplexMatrix sum = id;
  double coeff = 1.0;
  for (int l = 1; l <= terms; ++l) {
    // (2l)!/(4^l (l!)^2) = coeff_{l-1} * (2l-1)/(2l)
    coeff *= (2.0 * l - 1.0) / (2.0 * l);
    power = power * step;
    sum += coeff * power;
  }
  return std::sqrt(c) * sum;
}

double neumann_tail_bound(double a, double b, int terms) {
  const double ratio = (b - a) / (b + a);
  return (2.0 / (a + b)) * std::pow(ratio, terms + 1) / (1.0 - ratio);
}

double invsqrt_tail_bound(double a, double b, int terms) {
  // The binomial coefficients decrease in l, so every tail coefficient is at
  // most the first omitted one.
  double coeff = 1.0;
  for (int l = 1; l <= terms + 1; ++l) coeff *= (2.0 * l - 1.0) / (2.0 * l);
  const double ratio = (b - a) / (b + a);
  return std::sqrt(2.0 / (a + b)) * coeff * std::pow(ratio, terms + 1) /
         (1.0 - ratio);
}

}  // namespace guframe
