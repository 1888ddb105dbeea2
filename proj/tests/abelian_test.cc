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
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "support/test_util.h"

namespace guframe {
namespace {

using testing::MaxAbsDiff;

TEST(GroupSpecTest, EnumerateKleinGroup) {
  const GroupSpec spec({2, 2});
  const std::vector<GroupElement> elems = spec.enumerate();
  ASSERT_EQ(elems.size(), 4u);
  EXPECT_EQ(elems[0].residues(), (std::vector<int>{0, 0}));
  EXPECT_EQ(elems[1].residues(), (std::vector<int>{0, 1}));
  EXPECT_EQ(elems[2].residues(), (std::vector<int>{1, 0}));
  EXPECT_EQ(elems[3].residues(), (std::vector<int>{1, 1}));
}

TEST(GroupSpecTest, EnumerateTrivialAndCyclic) {
  const std::vector<GroupElement> trivial = GroupSpec({1}).enumerate();
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_EQ(trivial[0].residues(), (std::vector<int>{0}));

  const std::vector<GroupElement> z3 = GroupSpec::Cyclic(3).enumerate();
  ASSERT_EQ(z3.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(z3[i].residues()[0], i);
}

TEST(GroupSpecTest, RejectsBadFactors) {
  EXPECT_THROW((void)GroupSpec({}), InvalidArgument);
  EXPECT_THROW((void)GroupSpec({2, 0}), InvalidArgument);
  EXPECT_THROW((void)GroupSpec({-3}), InvalidArgument);
}

TEST(GroupElementTest, Arithmetic) {
  const GroupSpec klein({2, 2});
  EXPECT_EQ(add(GroupElement(klein, {0, 1}), GroupElement(klein, {1, 1})),
            GroupElement(klein, {1, 0}));

  const GroupSpec z3 = GroupSpec::Cyclic(3);
  EXPECT_EQ(add(GroupElement(z3, {2}), GroupElement(z3, {2})),
            GroupElement(z3, {1}));

  const GroupSpec spec({3, 4});
  for (const GroupElement& g : spec.enumerate()) {
    EXPECT_EQ(add(g, neg(g)), spec.identity());
  }
}

TEST(GroupElementTest, SpecMismatchThrows) {
  const GroupElement a(GroupSpec({2, 2}), {1, 0});
  const GroupElement b(GroupSpec({4}), {1});
  EXPECT_THROW(add(a, b), InvalidArgument);
  EXPECT_THROW(ft_kernel(a, b), InvalidArgument);
  EXPECT_THROW(GroupElement(GroupSpec({2}), {2}), InvalidArgument);
  EXPECT_THROW(GroupElement(GroupSpec({2, 2}), {1}), InvalidArgument);
}

// Exhaustive group axioms on the index arithmetic for every spec with n <= 64
// drawn from a fixed family.
TEST(GroupSpecTest, IndexArithmeticIsAGroup) {
  const std::vector<std::vector<int>> families = {
      {1}, {2}, {5}, {2, 2}, {2, 3}, {4, 4}, {2, 2, 2}, {3, 3, 2}, {8, 8},
      {2, 4, 8}};
  for (const std::vector<int>& f : families) {
    const GroupSpec spec(f);
    const int n = spec.order();
    ASSERT_LE(n, 64);
    for (int a = 0; a < n; ++a) {
      EXPECT_EQ(spec.add_index(a, 0), a);
      EXPECT_EQ(spec.add_index(a, spec.neg_index(a)), 0);
      for (int b = 0; b < n; ++b) {
        EXPECT_EQ(spec.add_index(a, b), spec.add_index(b, a));
        const GroupElement sum = add(spec.element(a), spec.element(b));
        EXPECT_EQ(sum.index(), spec.add_index(a, b));
        for (int c = 0; c < n; c += 3) {
          EXPECT_EQ(spec.add_index(spec.add_index(a, b), c),
                    spec.add_index(a, spec.add_index(b, c)));
        }
      }
    }
  }
}

TEST(FourierTest, KernelValues) {
  const GroupSpec klein({2, 2});
  const Complex k = ft_kernel(GroupElement(klein, {1, 1}),
                              GroupElement(klein, {1, 0}));
  EXPECT_NEAR(std::abs(k - Complex(-1.0, 0.0)), 0.0, 1e-15);

  const GroupSpec z4 = GroupSpec::Cyclic(4);
  const Complex expected = std::exp(Complex(0.0, -2.0 * M_PI / 4.0));
  EXPECT_NEAR(std::abs(ft_kernel(GroupElement(z4, {1}), GroupElement(z4, {1})) -
                       expected), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(expected - Complex(0.0, -1.0)), 0.0, 1e-15);

  const GroupSpec spec({3, 5});
  for (const GroupElement& q : spec.enumerate()) {
    EXPECT_EQ(ft_kernel(spec.identity(), q), Complex(1.0, 0.0));
  }
}

TEST(FourierTest, KernelIsMultiplicative) {
  for (const std::vector<int>& f :
       std::vector<std::vector<int>>{{6}, {2, 3}, {3, 3}, {2, 2, 2}}) {
    const GroupSpec spec(f);
    const std::vector<GroupElement> e = spec.enumerate();
    for (const GroupElement& h : e) {
      for (const GroupElement& q : e) {
        for (const GroupElement& r : e) {
          EXPECT_NEAR(std::abs(ft_kernel(h, add(q, r)) -
                               ft_kernel(h, q) * ft_kernel(h, r)),
                      0.0, 1e-12);
        }
        EXPECT_NEAR(std::abs(ft_kernel(h, q)), 1.0, 1e-15);
      }
    }
  }
}

TEST(FourierTest, KleinMatrixIsHalfHadamard) {
  ComplexMatrix expected(4, 4);
  expected << 1, 1, 1, 1,
              1, -1, 1, -1,
              1, 1, -1, -1,
              1, -1, -1, 1;
  expected *= 0.5;
  EXPECT_EQ(MaxAbsDiff(ft_matrix(GroupSpec({2, 2})), expected), 0.0);
  EXPECT_EQ(ft_matrix(GroupSpec({1}))(0, 0), Complex(1.0, 0.0));
}

TEST(FourierTest, CyclicMatrixIsScaledDft) {
  const int n = 7;
  const ComplexMatrix f = ft_matrix(GroupSpec::Cyclic(n));
  for (int h = 0; h < n; ++h) {
    for (int q = 0; q < n; ++q) {
      const Complex dft = std::exp(Complex(0.0, -2.0 * M_PI * h * q / n)) /
                          std::sqrt(static_cast<double>(n));
      EXPECT_NEAR(std::abs(f(h, q) - dft), 0.0, 1e-14);
    }
  }
}

TEST(FourierTest, MatrixIsUnitary) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const GroupSpec spec = testing::RandomSpec(rng, 256);
    const ComplexMatrix f = ft_matrix(spec);
    const ComplexMatrix id = ComplexMatrix::Identity(spec.order(), spec.order());
    EXPECT_LT(MaxAbsDiff(f * f.adjoint(), id), 1e-9) << spec.order();
  }
}

TEST(FourierTest, ApplyExampleSequence) {
  const GroupSpec klein({2, 2});
  const ComplexVector s = testing::Vec({1.0, 0.5, -1.0, -0.5});
  const ComplexVector s_hat = ft_apply(klein, s);
  EXPECT_LT(MaxAbsDiff(s_hat, testing::Vec({0.0, 0.0, 1.5, 0.5})), 1e-15);

  ComplexVector delta = ComplexVector::Zero(6);
  delta(0) = 1.0;
  const ComplexVector flat = ft_apply(GroupSpec({2, 3}), delta);
  for (Eigen::Index i = 0; i < 6; ++i) {
    EXPECT_NEAR(std::abs(flat(i) - 1.0 / std::sqrt(6.0)), 0.0, 1e-15);
  }
}

TEST(FourierTest, RoundTrip) {
  std::mt19937_64 rng(11);
  const GroupSpec spec({3, 4, 2});
  const ComplexVector v = testing::RandomVector(rng, spec.order());
  EXPECT_LT(MaxAbsDiff(ift_apply(spec, ft_apply(spec, v)), v), 1e-12);
  EXPECT_THROW(ft_apply(spec, ComplexVector::Zero(5)), InvalidArgument);
  EXPECT_THROW(ift_apply(spec, ComplexVector::Zero(5)), InvalidArgument);
}

}  // namespace
}  // namespace guframe
