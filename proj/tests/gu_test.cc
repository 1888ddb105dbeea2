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
#include "guframe/gu.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "guframe/matops.h"
#include "support/test_util.h"

namespace guframe {
namespace {

using testing::Diag2;
using testing::ExampleFrameMatrix;
using testing::ExampleGram;
using testing::ExampleGUFrame;
using testing::MaxAbsDiff;

// Circulant means row i is row 0 shifted right by i; exactly the matrices
// the DFT diagonalizes.
bool IsCirculant(const ComplexMatrix& g, double tol) {
  const Eigen::Index n = g.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (std::abs(g(i, j) - g(0, (j - i + n) % n)) > tol) return false;
    }
  }
  return true;
}

TEST(UnitaryRepTest, ValidatesStructure) {
  EXPECT_NO_THROW(testing::ExampleRep());
  const GroupSpec z2({2});
  // Not unitary.
  EXPECT_THROW((void)UnitaryRep(z2, {Diag2(1, 1), Diag2(2, 1)}), InvalidArgument);
  // Identity slot wrong.
  EXPECT_THROW((void)UnitaryRep(z2, {Diag2(-1, 1), Diag2(1, 1)}), InvalidArgument);
  // Not a homomorphism: diag(i, 1) squares to diag(-1, 1), not I.
  ComplexMatrix u = Diag2(1, 1);
  u(0, 0) = Complex(0, 1);
  EXPECT_THROW((void)UnitaryRep(z2, {Diag2(1, 1), u}), InvalidArgument);
  // Wrong count.
  EXPECT_THROW((void)UnitaryRep(z2, {Diag2(1, 1)}), InvalidArgument);
}

TEST(UnitaryRepTest, FromGeneratorsMatchesExample) {
  const UnitaryRep rep = UnitaryRep::FromGenerators(
      GroupSpec({2, 2}), {Diag2(-1, -1), Diag2(1, -1)});
  const UnitaryRep example = testing::ExampleRep();
  for (int q = 0; q < 4; ++q) {
    EXPECT_LT(MaxAbsDiff(rep[q], example[q]), 1e-15);
  }
}

TEST(UnitaryRepTest, LargeGroupUsesStepCheck) {
  // Order 600 exceeds the full-table limit; a broken matrix must still be
  // caught.
  const GroupSpec spec({600});
  std::vector<int> chars = {1, 7};
  UnitaryRep good = UnitaryRep::FromCharacters(spec, chars);
  std::vector<ComplexMatrix> mats = good.matrices();
  mats[377] = Diag2(1, 1);
  EXPECT_THROW((void)UnitaryRep(spec, mats), InvalidArgument);
}

TEST(SynthesizeTest, ExampleVectors) {
  EXPECT_LT(MaxAbsDiff(synthesize(ExampleGUFrame()).matrix(),
                       ExampleFrameMatrix()),
            1e-15);
}

TEST(SynthesizeTest, TrivialGroupAndNorms) {
  const UnitaryRep trivial(GroupSpec({1}), {ComplexMatrix::Identity(1, 1)});
  const Frame f = synthesize(GUFrame(trivial, testing::Vec({2.0})));
  EXPECT_EQ(f.size(), 1);
  EXPECT_EQ(f.matrix()(0, 0), Complex(2.0, 0.0));

  std::mt19937_64 rng(41);
  const GUFrame g = testing::RandomGUFrame(rng, GroupSpec({3, 4}), 5);
  const Frame phi = synthesize(g);
  for (int q = 0; q < phi.size(); ++q) {
    EXPECT_NEAR(phi.column(q).norm(), g.generator().norm(), 1e-12);
  }
  EXPECT_THROW((void)GUFrame(testing::ExampleRep(), testing::Vec({1.0})),
               InvalidArgument);
  // e_1 under a diagonal group never spans C^2.
  EXPECT_THROW((void)GUFrame(testing::ExampleRep(), testing::Vec({1.0, 0.0})),
               InvalidArgument);
}

TEST(PermutedGramTest, ExampleAndBasis) {
  const PermutedGram example = is_permuted_gram(ExampleGram());
  EXPECT_TRUE(example.permuted);
  EXPECT_TRUE(example.symmetric);
  EXPECT_TRUE(example.gu());
  ASSERT_EQ(example.row_maps.size(), 4u);
  EXPECT_EQ(example.row_maps[1], (std::vector<int>{1, 0, 3, 2}));

  EXPECT_TRUE(is_permuted_gram(ComplexMatrix::Identity(5, 5)).gu());
}

TEST(PermutedGramTest, RejectsNonPermuted) {
  // Gram of {e_1, e_1, e_2}.
  ComplexMatrix g(3, 3);
  g << 1, 1, 0,
       1, 1, 0,
       0, 0, 1;
  const PermutedGram r = is_permuted_gram(g);
  EXPECT_FALSE(r.permuted);
  EXPECT_EQ(r.failing_row, 2);
  EXPECT_THROW(is_permuted_gram(ComplexMatrix::Zero(2, 3)), InvalidArgument);
}

TEST(FtDiagonalizesTest, ExampleOverKleinGroup) {
  const FtDiagonalization d = ft_diagonalizes(ExampleGram(), GroupSpec({2, 2}));
  EXPECT_TRUE(d.diagonal);
  EXPECT_LT(MaxAbsDiff(d.diagonal_values, testing::Vec({0, 0, 3, 1})), 1e-14);

  for (const std::vector<int>& f :
       std::vector<std::vector<int>>{{6}, {2, 3}, {3, 2}}) {
    EXPECT_TRUE(ft_diagonalizes(ComplexMatrix::Identity(6, 6), GroupSpec(f))
                    .diagonal);
  }
  EXPECT_THROW(ft_diagonalizes(ExampleGram(), GroupSpec({3})),
               InvalidArgument);
}

TEST(FtDiagonalizesTest, ExampleOverZ4Fails) {
  // The DFT diagonalizes exactly the circulant matrices.
  ASSERT_FALSE(IsCirculant(ExampleGram(), 1e-12));
  const FtDiagonalization d = ft_diagonalizes(ExampleGram(), GroupSpec({4}));
  EXPECT_FALSE(d.diagonal);
  EXPECT_GT(d.max_off_diagonal, 0.1);
}

TEST(GuSpectralTest, Example) {
  const SpectralReport r = gu_spectral(ExampleGUFrame());
  EXPECT_LT(MaxAbsDiff(r.s, testing::Vec({1.0, 0.5, -1.0, -0.5})), 1e-15);
  EXPECT_LT((r.s_hat - RealVector::Map(std::vector<double>{0, 0, 1.5, 0.5}.data(), 4))
                .cwiseAbs()
                .maxCoeff(),
            1e-15);
  EXPECT_EQ(r.index_set, (std::vector<int>{2, 3}));
  EXPECT_NEAR(r.bounds.lower, 1.0, 1e-12);
  EXPECT_NEAR(r.bounds.upper, 3.0, 1e-12);
  EXPECT_NEAR(r.sigma(2), std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(r.sigma(3), 1.0, 1e-12);
  EXPECT_LT(MaxAbsDiff(r.dual_generator,
                       testing::Vec({std::sqrt(3.0) / 6.0, -0.5})),
            1e-12);
  EXPECT_LT(MaxAbsDiff(r.canonical_generator, testing::Vec({0.5, -0.5})),
            1e-12);
}

TEST(GuSpectralTest, OrthonormalBasis) {
  // Cyclic shift on C^4 with generator e_0 gives the standard basis.
  const GroupSpec z4({4});
  ComplexMatrix shift = ComplexMatrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k) shift((k + 1) % 4, k) = 1.0;
  const UnitaryRep rep = UnitaryRep::FromGenerators(z4, {shift});
  const ComplexVector e0 = ComplexMatrix::Identity(4, 4).col(0);
  const SpectralReport r = gu_spectral(GUFrame(rep, e0));
  for (int h = 0; h < 4; ++h) EXPECT_NEAR(r.s_hat(h), 0.5, 1e-14);
  EXPECT_NEAR(r.bounds.lower, 1.0, 1e-12);
  EXPECT_NEAR(r.bounds.upper, 1.0, 1e-12);
  EXPECT_LT(MaxAbsDiff(r.dual_generator, e0), 1e-12);
  EXPECT_LT(MaxAbsDiff(r.canonical_generator, e0), 1e-12);
}

TEST(GuSpectralTest, MatchesDirectComputation) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const GroupSpec spec = testing::RandomSpec(rng, 48);
    std::uniform_int_distribution<int> dim(1, std::min(8, spec.order()));
    const GUFrame g = testing::RandomGUFrame(rng, spec, dim(rng));
    const SpectralReport r = gu_spectral(g);
    const Frame phi = synthesize(g);
    const ComplexMatrix s = frame_operator(phi);
    EXPECT_LT(MaxAbsDiff(r.dual_generator, psd_inverse(s) * g.generator()),
              1e-8);
    EXPECT_LT(MaxAbsDiff(r.canonical_generator,
                         psd_inv_sqrt(s) * g.generator()),
              1e-8);
    const FrameBounds b = frame_bounds(phi);
    EXPECT_NEAR(r.bounds.lower, b.lower, 1e-8 * b.upper);
    EXPECT_NEAR(r.bounds.upper, b.upper, 1e-8 * b.upper);
    // Singular values of Phi are the nonzero sigma(h).
    std::vector<double> sig;
    for (int h : r.index_set) sig.push_back(r.sigma(h));
    std::sort(sig.rbegin(), sig.rend());
    const SvdResult d = svd(phi.matrix());
    for (std::size_t k = 0; k < sig.size(); ++k) {
      EXPECT_NEAR(sig[k], d.singular_values(k), 1e-8 * sig[0]);
    }
  }
}

TEST(GramToGuTest, RejectsIndefiniteOrNonGuGram) {
  // Circulant over Z2 but with eigenvalue -1.
  ComplexMatrix indefinite(2, 2);
  indefinite << 1, 2,
                2, 1;
  EXPECT_THROW(gram_to_gu(indefinite, GroupSpec({2})), NumericalError);
  ComplexMatrix g = ExampleGram();
  g(0, 2) = g(2, 0) = 2.0;
  EXPECT_THROW(gram_to_gu(g, GroupSpec({2, 2})), InvalidArgument);
}

TEST(GuDualTest, MatchesFrameCoreColumnwise) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const GroupSpec spec = testing::RandomSpec(rng, 32);
    const GUFrame g =
        testing::RandomGUFrame(rng, spec, std::min(4, spec.order()));
    EXPECT_LT(MaxAbsDiff(synthesize(gu_dual(g)).matrix(),
                         dual_frame(synthesize(g)).matrix()),
              1e-8);
    EXPECT_LT(MaxAbsDiff(synthesize(gu_canonical(g)).matrix(),
                         canonical_tight(synthesize(g)).matrix()),
              1e-8);
  }
  const ComplexMatrix example_dual = synthesize(gu_dual(ExampleGUFrame())).matrix();
  const double a = std::sqrt(3.0) / 6.0;
  ComplexMatrix expected(2, 4);
  expected << a, a, -a, -a,
              -0.5, 0.5, 0.5, -0.5;
  EXPECT_LT(MaxAbsDiff(example_dual, expected), 1e-12);
}

TEST(GuDualTest, TightAndIdempotent) {
  const GUFrame canon = gu_canonical(ExampleGUFrame());
  // The canonical frame is normalized tight: its dual is itself and its
  // canonical frame is itself.
  EXPECT_LT(MaxAbsDiff(gu_canonical(canon).generator(), canon.generator()),
            1e-12);
  const GUFrame scaled(canon.rep(), 3.0 * canon.generator());  // A = 9
  EXPECT_LT(MaxAbsDiff(gu_dual(scaled).generator(), scaled.generator() / 9.0),
            1e-12);
}

TEST(GramToGuTest, ExampleGram) {
  const GUFrame g = gram_to_gu(ExampleGram(), GroupSpec({2, 2}));
  EXPECT_EQ(g.dim(), 2);
  EXPECT_LT(MaxAbsDiff(gram_matrix(synthesize(g).matrix()), ExampleGram()),
            1e-12);
}

TEST(GramToGuTest, IdentityGivesOrthonormalBasis) {
  const GUFrame g = gram_to_gu(ComplexMatrix::Identity(5, 5), GroupSpec({5}));
  EXPECT_EQ(g.dim(), 5);
  const ComplexMatrix phi = synthesize(g).matrix();
  EXPECT_LT(MaxAbsDiff(phi.adjoint() * phi, ComplexMatrix::Identity(5, 5)),
            1e-12);
}

TEST(GramToGuTest, RandomRoundTrip) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const GroupSpec spec = testing::RandomSpec(rng, 40);
    const GUFrame src =
        testing::RandomGUFrame(rng, spec, std::min(5, spec.order()));
    const ComplexMatrix gram = gram_matrix(synthesize(src).matrix());
    const GUFrame out = gram_to_gu(gram, spec);
    EXPECT_LT(MaxAbsDiff(gram_matrix(synthesize(out).matrix()), gram), 1e-9);
  }
  EXPECT_THROW(gram_to_gu(ExampleGram(), GroupSpec({4})), InvalidArgument);
}

TEST(GuFromFrameTest, RecoversGroup) {
  std::mt19937_64 rng(59);
  const GroupSpec spec({3, 3});
  const GUFrame src = testing::RandomGUFrame(rng, spec, 4);
  const Frame f = synthesize(src);
  const GUFrame rec = gu_from_frame(f, spec);
  EXPECT_LT(MaxAbsDiff(synthesize(rec).matrix(), f.matrix()), 1e-9);

  const GUFrame example = gu_from_frame(Frame(ExampleFrameMatrix()),
                                        GroupSpec({2, 2}));
  for (int q = 0; q < 4; ++q) {
    EXPECT_LT(MaxAbsDiff(example.rep()[q], testing::ExampleRep()[q]), 1e-12);
  }
}

TEST(GuPropertiesTest, BoundsSandwichAndCommutation) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const GroupSpec spec = testing::RandomSpec(rng, 36);
    std::uniform_int_distribution<int> dim(1, std::min(6, spec.order()));
    const int m = dim(rng);
    const GUFrame g = testing::RandomGUFrame(rng, spec, m);
    const Frame phi = synthesize(g);
    const FrameBounds b = frame_bounds(phi);
    const double avg =
        static_cast<double>(spec.order()) / m * g.generator().squaredNorm();
    EXPECT_LE(b.lower, avg * (1 + 1e-12));
    EXPECT_GE(b.upper, avg * (1 - 1e-12));
    const ComplexMatrix s = frame_operator(phi);
    for (int q = 0; q < spec.order(); ++q) {
      EXPECT_LT(max_abs(s * g.rep()[q] - g.rep()[q] * s), 1e-9 * b.upper);
    }
    const ComplexMatrix gram = gram_matrix(phi.matrix());
    EXPECT_TRUE(is_permuted_gram(gram, 1e-9 * b.upper).permuted);
    EXPECT_TRUE(ft_diagonalizes(gram, spec).diagonal);
  }
}

}  // namespace
}  // namespace guframe
