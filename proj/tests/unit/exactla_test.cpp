// Copyright 2026 The tvb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tvb/subspace.hpp"

namespace tvb {
namespace {

using testing::Gen;

TEST(Rat, LowestTermsAndStrings) {
  EXPECT_EQ(Rat(6, -4).str(), "-3/2");
  EXPECT_EQ(Rat(4, 2).str(), "2");
  EXPECT_EQ(Rat::parse("-10/4"), Rat(-5, 2));
  EXPECT_EQ(Rat::parse("+7"), Rat(7));
  EXPECT_EQ(Rat::parse("0/5").str(), "0");
  EXPECT_THROW(Rat::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rat::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rat::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rat::parse(""), std::invalid_argument);
  EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
}

TEST(Rat, BigIntegersStayExact) {
  Rat x(1);
  for (int i = 0; i < 100; ++i) x *= Rat(3, 2);
  for (int i = 0; i < 100; ++i) x /= Rat(3, 2);
  EXPECT_TRUE(x.is_one());
  EXPECT_THROW(Rat::parse("123456789012345678901234567890").to_int64(), std::range_error);
}

TEST(Rref, Examples) {
  EXPECT_EQ(rref(Mat{{2, 0}, {0, 3}}), (Mat{{1, 0}, {0, 1}}));
  EXPECT_EQ(rref(Mat{{1, 2}, {2, 4}}), (Mat{{1, 2}, {0, 0}}));
}

TEST(Rref, IdempotentAndRowSpacePreserving) {
  Gen g(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat m = g.mat(5, 5, 0.6);
    const Mat once = rref(m);
    EXPECT_EQ(rref(once), once);
    EXPECT_EQ(Subspace::row_space(m), Subspace::row_space(once));
  }
}

TEST(Matrix, DeterminantAndInverse) {
  EXPECT_EQ(determinant(Mat{{0, -1}, {1, -1}}), Rat(1));
  const auto inv = inverse(Mat{{0, -1}, {1, -1}});
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, (Mat{{-1, 1}, {-1, 0}}));
  EXPECT_FALSE(inverse(Mat{{1, 2}, {2, 4}}));
  Gen g(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = g.invertible(4);
    EXPECT_EQ(a * *inverse(a), Mat::identity(4));
  }
}

TEST(Subspace, CanonicalUnderRescalingAndReordering) {
  Gen g(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec> vs{g.vec(4), g.vec(4), g.vec(4)};
    const Subspace s = Subspace::span(4, vs);
    std::reverse(vs.begin(), vs.end());
    for (auto& v : vs)
      for (auto& x : v) x *= Rat(-7, 3);
    EXPECT_EQ(Subspace::span(4, vs), s);
  }
}

TEST(Intersect, Examples) {
  const Subspace x = Subspace::span(2, {{1, 0}});
  const Subspace y = Subspace::span(2, {{0, 1}});
  EXPECT_EQ(intersect(x, y), Subspace::zero(2));
  EXPECT_EQ(intersect(x, x), x);

  // Joint membership system solved by the oracle gives span{(0,1,0)}.
  const Subspace a = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  const Subspace b = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
  const Subspace expected = Subspace::span(3, {{0, 1, 0}});
  ASSERT_EQ(testing::intersect_by_joint_system(a, b), expected);
  EXPECT_EQ(intersect(a, b), expected);
  EXPECT_THROW(intersect(x, a), std::invalid_argument);
}

TEST(Sum, Examples) {
  const Subspace x = Subspace::span(2, {{1, 0}});
  EXPECT_EQ(sum(x, Subspace::zero(2)), x);
  EXPECT_EQ(sum(x, Subspace::span(2, {{0, 1}})), Subspace::full(2));
  EXPECT_THROW(sum(x, Subspace::zero(3)), std::invalid_argument);
}

TEST(Lattice, ModularLawAndAgreementWithJointSystem) {
  Gen g(200);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    const Subspace s = g.subspace(n, n);
    const Subspace t = g.subspace(n, n);
    const Subspace meet = intersect(s, t);
    EXPECT_EQ(sum(s, t).dim() + meet.dim(), s.dim() + t.dim());
    EXPECT_EQ(meet, testing::intersect_by_joint_system(s, t));
  }
}

TEST(Lattice, CommutativeAssociativeIdempotent) {
  Gen g(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Subspace a = g.subspace(4, 3);
    const Subspace b = g.subspace(4, 3);
    const Subspace c = g.subspace(4, 3);
    EXPECT_EQ(intersect(a, b), intersect(b, a));
    EXPECT_EQ(sum(a, b), sum(b, a));
    EXPECT_EQ(intersect(intersect(a, b), c), intersect(a, intersect(b, c)));
    EXPECT_EQ(sum(sum(a, b), c), sum(a, sum(b, c)));
    EXPECT_EQ(sum(a, a), a);
    EXPECT_EQ(intersect(a, a), a);
  }
}

TEST(ComplementWithin, Examples) {
  const Subspace t = Subspace::span(3, {{1, 2, 0}, {0, 1, 1}});
  EXPECT_EQ(complement_within(Subspace::zero(3), t), t);
  EXPECT_EQ(complement_within(t, t), Subspace::zero(3));
  // Pivot rule: the complement vanishes on s's pivot column 0.
  EXPECT_EQ(complement_within(Subspace::span(2, {{1, 1}}), Subspace::full(2)),
            Subspace::span(2, {{0, 1}}));
  EXPECT_THROW(complement_within(Subspace::span(2, {{1, 1}}), Subspace::span(2, {{1, 0}})),
               std::invalid_argument);
}

TEST(ComplementWithin, DirectSumProperty) {
  Gen g(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Subspace t = g.subspace(5, 5);
    std::vector<Vec> inside;
    for (int k = 0; k < 2; ++k) {
      Vec v(5);
      for (std::size_t i = 0; i < t.dim(); ++i) {
        const Rat c = g.rat();
        for (std::size_t j = 0; j < 5; ++j) v[j] += c * t.basis()(i, j);
      }
      inside.push_back(std::move(v));
    }
    const Subspace s = Subspace::span(5, inside);
    const Subspace c = complement_within(s, t);
    EXPECT_EQ(c.dim() + s.dim(), t.dim());
    EXPECT_TRUE(intersect(c, s).is_zero());
    EXPECT_EQ(sum(c, s), t);
  }
}

TEST(SolveMatConstraints, NoConstraintsGivesAllOfEnd) {
  const auto basis = solve_mat_constraints({}, 2);
  ASSERT_EQ(basis.size(), 4u);
  EXPECT_EQ(basis[0], Mat::unit(2, 0, 0));
  EXPECT_EQ(basis[1], Mat::unit(2, 0, 1));
  EXPECT_EQ(basis[2], Mat::unit(2, 1, 0));
  EXPECT_EQ(basis[3], Mat::unit(2, 1, 1));
}

TEST(SolveMatConstraints, CoordinateLinesGiveDiagonal) {
  const Subspace l1 = Subspace::span(2, {{1, 0}});
  const Subspace l2 = Subspace::span(2, {{0, 1}});
  const std::vector<MatConstraint> cs{{{1, 0}, l1}, {{0, 1}, l2}};
  const auto basis = solve_mat_constraints(cs, 2);
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], Mat::unit(2, 0, 0));
  EXPECT_EQ(basis[1], Mat::unit(2, 1, 1));
}

TEST(SolveMatConstraints, GenericLinesGiveScalars) {
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<MatConstraint> cs;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n);
      e[i] = 1;
      cs.push_back({e, Subspace::span(n, {e})});
    }
    const Vec ones(n, Rat(1));
    cs.push_back({ones, Subspace::span(n, {ones})});
    const auto basis = solve_mat_constraints(cs, n);
    ASSERT_EQ(basis.size(), 1u) << "n=" << n;
    EXPECT_EQ(basis[0], Mat::identity(n));
  }
}

TEST(SolveMatConstraints, SolutionsSatisfyConstraintsAndRedundancyIsHarmless) {
  Gen g(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = static_cast<std::size_t>(g.integer(1, 3));
    std::vector<MatConstraint> cs;
    for (int k = 0; k < 3; ++k) cs.push_back({g.vec(r), g.subspace(r, r)});
    const auto basis = solve_mat_constraints(cs, r);
    for (const auto& a : basis) {
      for (const auto& c : cs) EXPECT_TRUE(c.target.contains(a.apply(c.w)));
    }
    std::vector<Vec> flat;
    for (const auto& a : basis) flat.push_back(a.flat());
    EXPECT_EQ(rank(Mat::from_rows(flat, r * r)), basis.size());

    auto redundant = cs;
    redundant.push_back({Vec(cs[0].w.size(), Rat(0)), cs[0].target});
    Vec doubled = cs[0].w;
    for (auto& x : doubled) x *= Rat(2);
    redundant.push_back({doubled, cs[0].target});
    EXPECT_EQ(solve_mat_constraints(redundant, r), basis);
  }
  EXPECT_THROW(solve_mat_constraints(std::vector<MatConstraint>{{{1}, Subspace::full(2)}}, 2),
               std::invalid_argument);
}

}  // namespace
}  // namespace tvb
