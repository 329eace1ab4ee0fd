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
#include "tvb/fixtures.hpp"
#include "tvb/klyachko.hpp"

namespace tvb {
namespace {

using testing::Gen;

Subspace line(std::size_t n, Vec v) { return Subspace::span(n, {std::move(v)}); }

Subspace ray_span(const Fan& f, std::size_t k) {
  Vec v;
  for (auto c : f.rays[k].coords) v.emplace_back(c);
  return line(f.n, std::move(v));
}

TEST(Normalize, DropsRedundantFullStep) {
  const Filtration f = Filtration::normalize(1, {{0, Subspace::full(1)}, {1, Subspace::zero(1)}});
  EXPECT_EQ(f.steps(), (std::vector<FiltrationStep>{{1, Subspace::zero(1)}}));
}

TEST(Normalize, AlreadyNormalIsUnchanged) {
  const std::vector<FiltrationStep> raw{{1, Subspace::zero(1)}};
  EXPECT_EQ(Filtration::normalize(1, raw).steps(), raw);
}

TEST(Normalize, SortsAndAppendsZero) {
  const Subspace l = line(2, {1, 1});
  EXPECT_EQ(Filtration::normalize(2, {{1, Subspace::zero(2)}, {0, l}}).steps(),
            (std::vector<FiltrationStep>{{0, l}, {1, Subspace::zero(2)}}));
  EXPECT_EQ(Filtration::normalize(2, {{3, l}}).steps(),
            (std::vector<FiltrationStep>{{3, l}, {4, Subspace::zero(2)}}));
}

TEST(Normalize, RejectsBadData) {
  const Subspace a = line(2, {1, 0});
  const Subspace b = line(2, {0, 1});
  EXPECT_THROW(Filtration::normalize(2, {}), std::invalid_argument);
  EXPECT_THROW(Filtration::normalize(2, {{0, Subspace::zero(2)}, {1, a}}), std::invalid_argument);
  EXPECT_THROW(Filtration::normalize(2, {{0, a}, {1, b}}), std::invalid_argument);
  EXPECT_THROW(Filtration::normalize(2, {{0, a}, {0, b}}), std::invalid_argument);
  EXPECT_THROW(Filtration::normalize(2, {{0, Subspace::zero(3)}}), std::invalid_argument);
  EXPECT_NO_THROW(Filtration::normalize(2, {{0, a}, {0, a}, {1, Subspace::zero(2)}}));
}

TEST(EvalFiltration, TangentAndExtremes) {
  const Fan f = fan_pn(3);
  const ToricBundle t = tangent_bundle(f);
  for (std::size_t k = 0; k < f.rays.size(); ++k) {
    EXPECT_EQ(eval_filtration(t.filtration(k), 1), ray_span(f, k));
    EXPECT_TRUE(eval_filtration(t.filtration(k), 0).is_full());
    EXPECT_TRUE(eval_filtration(t.filtration(k), 2).is_zero());
  }
  Gen g(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Filtration x = g.filtration(3);
    EXPECT_TRUE(eval_filtration(x, -1000000).is_full());
    EXPECT_TRUE(eval_filtration(x, 1000000).is_zero());
  }
}

TEST(LineBundle, Conventions) {
  const Fan p1 = fan_pn(1);
  const ToricBundle o = trivial_line_bundle(p1);
  for (const auto& fl : o.filtrations())
    EXPECT_EQ(fl.steps(), (std::vector<FiltrationStep>{{0, Subspace::zero(1)}}));

  const std::vector<std::int64_t> one_one{1, 1};
  EXPECT_EQ(line_bundle(p1, one_one), tangent_bundle(p1));

  const std::vector<std::int64_t> a{2, -2};
  const std::vector<std::int64_t> zero{0, 0};
  const ToricBundle la = line_bundle(p1, a);
  EXPECT_NE(la, line_bundle(p1, zero));
  EXPECT_EQ(la.rank(), 1u);
  EXPECT_EQ(la, tensor_line(line_bundle(p1, zero), a));
}

TEST(Tangent, Shapes) {
  const ToricBundle t2 = tangent_bundle(fan_pn(2));
  for (const auto& fl : t2.filtrations()) {
    ASSERT_EQ(fl.steps().size(), 2u);
    EXPECT_EQ(fl.steps()[0].threshold, 0);
    EXPECT_EQ(fl.steps()[0].space.dim(), 1u);
    EXPECT_EQ(fl.steps()[1].threshold, 1);
  }
  const Fan pp = fan_product(fan_pn(1), fan_pn(1));
  const ToricBundle t = tangent_bundle(pp);
  ASSERT_EQ(t.filtrations().size(), 4u);
  // Rays are (1,0), (-1,0), (0,1), (0,-1).
  EXPECT_EQ(t.filtration(0).at(1), t.filtration(1).at(1));
  EXPECT_EQ(t.filtration(2).at(1), t.filtration(3).at(1));
  EXPECT_NE(t.filtration(0).at(1), t.filtration(2).at(1));
}

TEST(DirectSum, TangentPlusTrivial) {
  const Fan p1 = fan_pn(1);
  const ToricBundle s = direct_sum(tangent_bundle(p1), trivial_line_bundle(p1));
  EXPECT_EQ(s.rank(), 2u);
  for (const auto& fl : s.filtrations()) {
    EXPECT_EQ(fl.steps(), (std::vector<FiltrationStep>{{0, line(2, {1, 0})}, {1, Subspace::zero(2)}}));
  }
}

TEST(DirectSum, BlockwiseDimensionsAndZeroRankIdentity) {
  Gen g(8);
  const Fan f = fan_pn(2);
  for (int trial = 0; trial < 20; ++trial) {
    const ToricBundle v = g.bundle_on(f, 2);
    const ToricBundle w = g.bundle_on(f, 1);
    const ToricBundle s = direct_sum(v, w);
    for (std::size_t k = 0; k < f.rays.size(); ++k)
      for (std::int64_t i = -4; i <= 4; ++i)
        EXPECT_EQ(s.filtration(k).at(i).dim(), v.filtration(k).at(i).dim() + w.filtration(k).at(i).dim());
    std::vector<Filtration> empty(f.rays.size(), Filtration::single_jump(0, 0));
    const ToricBundle zero(f, 0, empty);
    EXPECT_EQ(direct_sum(v, zero), v);
  }
  EXPECT_THROW(direct_sum(tangent_bundle(fan_pn(1)), tangent_bundle(fan_pn(2))),
               std::invalid_argument);
}

TEST(TensorLine, IdentityAndInverse) {
  Gen g(9);
  const Fan f = fan_hirzebruch(2);
  for (int trial = 0; trial < 20; ++trial) {
    const ToricBundle v = g.bundle_on(f, 2);
    std::vector<std::int64_t> a, neg, zero(f.rays.size(), 0);
    for (std::size_t k = 0; k < f.rays.size(); ++k) {
      a.push_back(g.integer(-3, 3));
      neg.push_back(-a.back());
    }
    EXPECT_EQ(tensor_line(v, zero), v);
    EXPECT_EQ(tensor_line(tensor_line(v, a), neg), v);
  }
}

TEST(ConeGrading, TangentP2FirstCone) {
  const Fan f = fan_pn(2);
  const ToricBundle t = tangent_bundle(f);
  const Cone sigma{{0, 1}};
  const GradingResult res = cone_grading(t, sigma);
  ASSERT_EQ(res.status, GradingStatus::kGraded);
  const auto u = dual_basis(f, sigma);
  const auto& pieces = res.grading->pieces;
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(pieces.at(u[0]), ray_span(f, 0));
  EXPECT_EQ(pieces.at(u[1]), ray_span(f, 1));
  EXPECT_TRUE(verify_grading(t, *res.grading));
}

TEST(ConeGrading, ThreeLinesIsIncompatible) {
  const ToricBundle v = fixtures::three_lines();
  EXPECT_EQ(testing::inclusion_exclusion_deficit(v), -1);
  const GradingResult res = cone_grading(v, v.fan().max_cones[0]);
  EXPECT_EQ(res.status, GradingStatus::kIncompatible);
  EXPECT_FALSE(res.certificate.empty());
  EXPECT_FALSE(adapted_basis_oracle(v, v.fan().max_cones[0]).has_value());
}

TEST(ConeGrading, RankOneHasSinglePiece) {
  const Fan f = fan_pn(2);
  const std::vector<std::int64_t> a{2, -1, 3};
  const ToricBundle l = line_bundle(f, a);
  for (const auto& c : f.max_cones) {
    const auto res = cone_grading(l, c);
    ASSERT_EQ(res.status, GradingStatus::kGraded);
    const auto u = dual_basis(f, c);
    Character expected{std::vector<std::int64_t>(2, 0)};
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t j = 0; j < 2; ++j) expected.coords[j] += a[c.ray_indices[k]] * u[k].coords[j];
    ASSERT_EQ(res.grading->pieces.size(), 1u);
    EXPECT_EQ(res.grading->pieces.begin()->first, expected);
  }
}

TEST(IsVectorBundle, FixturesCompatible) {
  for (const auto& [name, b] : fixtures::fixture_bundles()) {
    const auto verdict = is_vector_bundle(b);
    ASSERT_TRUE(verdict.compatible()) << name << ": " << verdict.certificate;
    ASSERT_EQ(verdict.gradings.size(), b.fan().max_cones.size());
    for (const auto& gr : verdict.gradings) {
      std::size_t total = 0;
      for (const auto& [u, s] : gr.pieces) total += s.dim();
      EXPECT_EQ(total, b.rank()) << name;
      EXPECT_TRUE(verify_grading(b, gr)) << name;
    }
  }
}

TEST(IsVectorBundle, ThreeLinesEmbeddedNamesCone) {
  // Lines on rays 1, 2, 3 of P3; only cone {1,2,3} (index 3) sees all three.
  const Fan f = fan_pn(3);
  const ToricBundle base = fixtures::three_lines();
  std::vector<Filtration> filts{Filtration::single_jump(2, 0)};
  for (std::size_t k = 0; k < 3; ++k) filts.push_back(base.filtration(k));
  const ToricBundle v(f, 2, filts);
  const auto verdict = is_vector_bundle(v);
  EXPECT_FALSE(verdict.compatible());
  ASSERT_TRUE(verdict.failing_cone.has_value());
  EXPECT_EQ(*verdict.failing_cone, 3u);
  EXPECT_THROW(equivariant_chern_data(v), std::invalid_argument);
}

TEST(ConeGrading, TwoDimensionalConesAlwaysCompatible) {
  Gen g(77);
  for (int trial = 0; trial < 150; ++trial) {
    const auto r = static_cast<std::size_t>(g.integer(1, 4));
    const ToricBundle v = g.cone_bundle(2, r);
    const auto res = cone_grading(v, v.fan().max_cones[0]);
    EXPECT_EQ(res.status, GradingStatus::kGraded) << res.certificate;
  }
}

TEST(ConeGrading, GreedyAgreesWithOracle) {
  Gen g(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(g.integer(1, 3));
    const auto r = static_cast<std::size_t>(g.integer(1, 3));
    const ToricBundle v = g.cone_bundle(n, r);
    const Cone& c = v.fan().max_cones[0];
    const auto res = cone_grading(v, c);
    const auto basis = adapted_basis_oracle(v, c);
    EXPECT_EQ(res.status == GradingStatus::kGraded, basis.has_value()) << "trial " << trial;
    if (basis) EXPECT_TRUE(verify_grading(v, grading_from_basis(v, c, *basis)));
  }
}

TEST(ConeGrading, IndeterminateAboveOracleLimit) {
  const ToricBundle v = fixtures::three_lines();
  GradingOptions opts;
  opts.oracle_rank_limit = 1;
  EXPECT_EQ(cone_grading(v, v.fan().max_cones[0], opts).status, GradingStatus::kIndeterminate);
}

TEST(Chern, Examples) {
  const Fan p1 = fan_pn(1);
  const ChernData triv = equivariant_chern_data(trivial_line_bundle(p1));
  for (const auto& cone : triv.per_cone)
    EXPECT_EQ(cone, (std::vector<std::pair<Character, std::size_t>>{{Character{{0}}, 1}}));

  // In each cone's own dual coordinate the tangent piece sits at 1.
  const ChernData t = equivariant_chern_data(tangent_bundle(p1));
  ASSERT_EQ(t.per_cone.size(), 2u);
  for (std::size_t c = 0; c < 2; ++c) {
    const auto u = dual_basis(p1, p1.max_cones[c]);
    EXPECT_EQ(t.per_cone[c], (std::vector<std::pair<Character, std::size_t>>{{u[0], 1}}));
  }
}

TEST(Chern, InvariantUnderTraversalOrder) {
  Gen g(55);
  for (int trial = 0; trial < 60; ++trial) {
    const Fan f = trial % 2 ? fan_pn(2) : fan_hirzebruch(1);
    const ToricBundle v = direct_sum(g.bundle_on(f, 1), tangent_bundle(f));
    const ChernData base = equivariant_chern_data(v);
    GradingOptions opts;
    opts.shuffle_seed = static_cast<std::uint64_t>(trial + 1);
    EXPECT_EQ(equivariant_chern_data(v, opts), base);
  }
}

TEST(Chern, TensorLineShiftsCharacters) {
  Gen g(66);
  for (const auto& [name, b] : fixtures::fixture_bundles()) {
    const Fan& f = b.fan();
    std::vector<std::int64_t> a;
    for (std::size_t k = 0; k < f.rays.size(); ++k) a.push_back(g.integer(-2, 2));
    const ChernData before = equivariant_chern_data(b);
    const ChernData after = equivariant_chern_data(tensor_line(b, a));
    ASSERT_EQ(after.per_cone.size(), before.per_cone.size());
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
      const auto u = dual_basis(f, f.max_cones[c]);
      std::vector<std::int64_t> shift(f.n, 0);
      for (std::size_t k = 0; k < f.n; ++k)
        for (std::size_t j = 0; j < f.n; ++j) shift[j] += a[f.max_cones[c].ray_indices[k]] * u[k].coords[j];
      std::vector<std::pair<Character, std::size_t>> expected;
      for (auto [ch, m] : before.per_cone[c]) {
        for (std::size_t j = 0; j < f.n; ++j) ch.coords[j] += shift[j];
        expected.emplace_back(ch, m);
      }
      std::sort(expected.begin(), expected.end());
      auto got = after.per_cone[c];
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expected) << name << " cone " << c;
    }
  }
}

}  // namespace
}  // namespace tvb
