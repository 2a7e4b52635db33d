// Copyright 2026 The digifix Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "digifix/error.hpp"
#include "digifix/solve.hpp"
#include "support.hpp"

namespace digifix {
namespace {

using testing::Rng;

const Point p1{0, 0, 0, 0, 0}, p2{2, 0, 0, 0, 0}, p3{1, 1, 1, 1, 1};

ScalarFamily linear(Rational c, FamilyRole role = FamilyRole::Psi) { return ScalarFamily::linear(std::move(c), role); }

TEST(Picard, Examples) {
  auto X = make_image(DigitalImage::interval(0, 4));
  auto c = solve_picard(SelfMap::constant(X, Point{3}), Metric::lp(1), Point{0});
  EXPECT_EQ(c.outcome, Outcome::FixedPoint);
  EXPECT_EQ(c.point, Point{3});
  EXPECT_LE(c.iterations, 2u);

  auto C = make_image(DigitalImage(5, 5, {p1, p2, p3}));
  std::vector<std::pair<Point, Point>> pairs{{p1, p1}, {p2, p1}, {p3, p2}};
  auto f = SelfMap::from_pairs(C, pairs);
  auto tr = solve_picard(f, Metric::lp(1), p3);
  EXPECT_EQ(tr.orbit, (std::vector<Point>{p3, p2, p1, p1}));
  EXPECT_EQ(tr.outcome, Outcome::FixedPoint);
  EXPECT_EQ(tr.point, p1);

  auto B = make_image(DigitalImage::interval(0, 1));
  std::vector<std::pair<Point, Point>> flip{{Point{0}, Point{1}}, {Point{1}, Point{0}}};
  auto d = solve_picard(SelfMap::from_pairs(B, flip), Metric::lp(1), Point{0});
  EXPECT_EQ(d.outcome, Outcome::Diverged);
  EXPECT_EQ(d.cycle, (std::vector<Point>{Point{0}, Point{1}}));
  EXPECT_THROW(solve_picard(SelfMap::identity(B), Metric::lp(1), Point{0}, 0), InvalidArgument);
  EXPECT_THROW(solve_picard(SelfMap::identity(B), Metric::lp(1), Point{5}), InvalidArgument);
}

TEST(Picard, PsiBound) {
  auto Y = make_image(DigitalImage(1, 1, {Point{0}, Point{1}, Point{3}, Point{7}}));
  SelfMap half(Y, {0, 0, 1, 2});  // 7 -> 3 -> 1 -> 0
  auto ok = solve_picard(half, Metric::lp(1), Point{7}, std::nullopt, linear(Rational(1, 2)));
  EXPECT_EQ(ok.outcome, Outcome::FixedPoint);
  EXPECT_EQ(ok.point, Point{0});
  auto X = make_image(DigitalImage::interval(0, 4));
  SelfMap shift(X, {0, 0, 1, 2, 3});  // x -> x - 1
  auto bad = solve_picard(shift, Metric::lp(1), Point{4}, std::nullopt, linear(Rational(1, 2)));
  EXPECT_EQ(bad.outcome, Outcome::HypothesisViolated);
  EXPECT_EQ(bad.violated, "d(x_n,x_n+1) <= psi^n(d(x_0,x_1))");
  auto notpsi = solve_picard(shift, Metric::lp(1), Point{4}, std::nullopt, linear(Rational(1)));
  EXPECT_EQ(notpsi.violated, "psi in Psi");
}

TEST(Inverse, Examples) {
  auto X = make_image(DigitalImage::interval(0, 2));
  auto id = solve_inverse_iteration(SelfMap::identity(X), Metric::lp(1), AlphaFn::constant(1), linear(Rational(1, 2)),
                                    Point{1});
  EXPECT_EQ(id.outcome, Outcome::FixedPoint);
  EXPECT_EQ(id.point, Point{1});

  auto R = make_image(DigitalImage(2, 2, {Point{0, 0}, Point{1, 0}, Point{1, 1}}));
  std::vector<std::pair<Point, Point>> rot{{Point{0, 0}, Point{1, 0}}, {Point{1, 0}, Point{1, 1}}, {Point{1, 1}, Point{0, 0}}};
  auto r = solve_inverse_iteration(SelfMap::from_pairs(R, rot), Metric::lp(2), AlphaFn::constant(1),
                                   linear(Rational(1, 2)), Point{0, 0});
  EXPECT_EQ(r.outcome, Outcome::HypothesisViolated);
  EXPECT_EQ(r.violated, "generalised expansive inequality at (x_n,x_n+1)");

  SelfMap swap(X, {0, 2, 1});
  auto s = solve_inverse_iteration(swap, Metric::lp(1), AlphaFn::constant(1), linear(Rational(1, 2)), Point{0});
  EXPECT_EQ(s.outcome, Outcome::FixedPoint);
  EXPECT_EQ(s.point, Point{0});

  auto nb = solve_inverse_iteration(SelfMap::constant(X, Point{0}), Metric::lp(1), AlphaFn::constant(1),
                                    linear(Rational(1, 2)), Point{0});
  EXPECT_EQ(nb.violated, "T bijective");
  auto lowalpha = solve_inverse_iteration(swap, Metric::lp(1), AlphaFn::constant(Rational(1, 2)),
                                          linear(Rational(1, 2)), Point{0});
  EXPECT_EQ(lowalpha.violated, "alpha(x_0,T^-1(x_0)) >= 1");
}

TEST(Jungck, Examples) {
  auto X = make_image(DigitalImage::interval(0, 3));
  auto tr = solve_jungck(SelfMap::constant(X, Point{2}), SelfMap::identity(X), Metric::lp(1), Rational(1, 2), Point{0});
  EXPECT_EQ(tr.outcome, Outcome::CommonFixedPoint);
  EXPECT_EQ(tr.point, Point{2});
  auto both = solve_jungck(SelfMap::identity(X), SelfMap::identity(X), Metric::lp(1), Rational(1, 2), Point{0});
  EXPECT_EQ(both.outcome, Outcome::HypothesisViolated);
  EXPECT_EQ(both.violated, "d(S(x),S(y)) <= alpha d(T(x),T(y))");
  auto alpha = solve_jungck(SelfMap::constant(X, Point{2}), SelfMap::identity(X), Metric::lp(1), Rational(1), Point{0});
  EXPECT_EQ(alpha.violated, "0 < alpha < 1");
  auto single = make_image(DigitalImage::interval(0, 0));
  auto one = solve_jungck(SelfMap::identity(single), SelfMap::identity(single), Metric::lp(1), Rational(1, 2), Point{0});
  EXPECT_EQ(one.outcome, Outcome::CommonFixedPoint);
}

// Brute-force oracle: all commuting pairs with S(X) in T(X) that satisfy the
// contraction condition have exactly one common fixed point, which Jungck finds.
TEST(JungckProperty, MatchesBruteForceOnFourPoints) {
  Rng rng(41);
  auto X = make_image(DigitalImage::interval(0, 3));
  int qualifying = 0;
  for (int i = 0; i < 20000 && qualifying < 300; ++i) {
    auto s = testing::random_map(rng, X);
    auto t = rng.uniform(0, 3) == 0 ? SelfMap::identity(X) : testing::random_map(rng, X);
    if (!commute(s, t).holds() || !range_contained(s, t).holds()) continue;
    if (!is_jungck_contraction(s, t, Metric::lp(1), Rational(1, 2)).holds()) continue;
    ++qualifying;
    std::vector<std::size_t> common;
    for (std::size_t k = 0; k < X->size(); ++k) {
      if (s(k) == k && t(k) == k) common.push_back(k);
    }
    ASSERT_EQ(common.size(), 1u);
    for (std::size_t x0 = 0; x0 < X->size(); ++x0) {
      auto tr = solve_jungck(s, t, Metric::lp(1), Rational(1, 2), X->point(x0));
      ASSERT_EQ(tr.outcome, Outcome::CommonFixedPoint);
      EXPECT_EQ(tr.point, X->point(common[0]));
      for (std::size_t n = 1; n < tr.orbit.size(); ++n) {
        EXPECT_EQ(t.apply(tr.orbit[n]), s.apply(tr.orbit[n - 1]));
      }
    }
  }
  EXPECT_GE(qualifying, 50);
}

TEST(AlphaPsiPhi, Examples) {
  auto X = make_image(DigitalImage::interval(0, 2));
  auto c = solve_alpha_psi_phi(SelfMap::constant(X, Point{1}), Metric::lp(1), AlphaFn::constant(1),
                               linear(Rational(1, 2), FamilyRole::Phi), linear(Rational(1, 2), FamilyRole::Phi), Point{0});
  EXPECT_EQ(c.outcome, Outcome::FixedPoint);
  EXPECT_EQ(c.point, Point{1});

  auto B = make_image(DigitalImage::interval(0, 1));
  std::vector<std::pair<Point, Point>> flip{{Point{0}, Point{1}}, {Point{1}, Point{0}}};
  auto v = solve_alpha_psi_phi(SelfMap::from_pairs(B, flip), Metric::lp(1), AlphaFn::constant(1), linear(Rational(1)),
                               ScalarFamily::constant(Rational(-1)), Point{0});
  EXPECT_EQ(v.outcome, Outcome::HypothesisViolated);
  EXPECT_EQ(v.violated, "psi in Phi");
}

// Maps on three points that satisfy every hypothesis with psi = 3t/4, phi = t/4
// reach the brute-force fixed point.
TEST(AlphaPsiPhiProperty, FixedPointsMatchBruteForce) {
  auto X = make_image(DigitalImage::interval(0, 2));
  auto psi = linear(Rational(3, 4), FamilyRole::Phi);
  auto phi = linear(Rational(1, 4), FamilyRole::Phi);
  int qualifying = 0;
  for (const auto& m : {Metric::lp(1), Metric::lp(2)}) {
    for (SelfMap::Index a = 0; a < 3; ++a) {
      for (SelfMap::Index b = 0; b < 3; ++b) {
        for (SelfMap::Index c = 0; c < 3; ++c) {
          SelfMap t(X, {a, b, c});
          if (!is_alpha_psi_phi_contractive(t, m, AlphaFn::constant(1), psi, phi).holds()) continue;
          ++qualifying;
          auto fps = testing::oracle_fixed_points(t);
          ASSERT_EQ(fps.size(), 1u);
          for (std::size_t x0 = 0; x0 < 3; ++x0) {
            auto tr = solve_alpha_psi_phi(t, m, AlphaFn::constant(1), psi, phi, X->point(x0));
            EXPECT_EQ(tr.outcome, Outcome::FixedPoint);
            EXPECT_EQ(tr.point, X->point(fps[0]));
          }
        }
      }
    }
  }
  EXPECT_GT(qualifying, 0);
}

// Contractions stabilize no later than the first n with alpha*^n d(x0,x1) < min distance,
// and their orbit distances strictly decrease until 0.
TEST(PicardProperty, ContractionStabilizationBound) {
  Rng rng(42);
  int contractions = 0;
  for (int i = 0; i < 4000; ++i) {
    auto X = testing::random_image(rng, 6, 3);
    if (X->size() < 2) continue;
    auto f = testing::random_map(rng, X);
    for (const auto& m : testing::test_metrics()) {
      auto cf = contraction_factor(f, m);
      for (std::size_t x0 = 0; x0 < X->size(); ++x0) {
        auto tr = solve_picard(f, m, X->point(x0));
        if (tr.outcome == Outcome::FixedPoint) {
          EXPECT_EQ(f.apply(*tr.point), *tr.point);
          auto fps = testing::oracle_fixed_points(f);
          EXPECT_NE(std::find(fps.begin(), fps.end(), X->require_index(*tr.point)), fps.end());
        }
        if (!cf.is_contraction()) continue;
        ++contractions;
        ASSERT_EQ(tr.outcome, Outcome::FixedPoint);
        ExactValue alpha = cf.value();
        ExactValue mpd = min_positive_distance(*X, m).value.value();
        ExactValue bound = distance(m, tr.orbit[0], tr.orbit[1]).value();
        std::size_t n = 0;
        while (!(bound < mpd)) {
          bound = ExactValue(bound.bounds(64).second * alpha.bounds(64).second);
          ++n;
        }
        // stabilization index: first n with x_n = x_{n+1}
        std::size_t stab = 0;
        while (tr.orbit[stab] != tr.orbit[stab + 1]) ++stab;
        EXPECT_LE(stab, n + 1);
        for (std::size_t k = 1; k + 1 < tr.orbit.size() && k <= stab; ++k) {
          EXPECT_LT(testing::oracle_power(m, tr.orbit[k], tr.orbit[k + 1]),
                    testing::oracle_power(m, tr.orbit[k - 1], tr.orbit[k]));
        }
      }
    }
  }
  EXPECT_GT(contractions, 100);
}

TEST(Uniqueness, AlphaGate) {
  auto X = make_image(DigitalImage::interval(0, 1));
  EXPECT_EQ(fixed_point_uniqueness(SelfMap::identity(X), AlphaFn::constant(1)).verdict, Verdict::Fails);
  EXPECT_EQ(fixed_point_uniqueness(SelfMap::identity(X), AlphaFn::constant(0)).verdict, Verdict::Holds);
}

}  // namespace
}  // namespace digifix
