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

#include "digifix/core.hpp"
#include "digifix/error.hpp"
#include "support.hpp"

namespace digifix {
namespace {

using testing::Rng;

const Point p1{0, 0, 0, 0, 0}, p2{2, 0, 0, 0, 0}, p3{1, 1, 1, 1, 1};

TEST(Adjacency, Examples) {
  EXPECT_TRUE(cu_adjacent(p1, p3, 5));
  EXPECT_FALSE(cu_adjacent(Point{3, 7}, Point{3, 7}, 2));
  EXPECT_FALSE(cu_adjacent(Point{0, 0}, Point{2, 0}, 2));
  EXPECT_FALSE(cu_adjacent(Point{0, 0}, Point{1, 1}, 1));
  EXPECT_TRUE(cu_adjacent(Point{0, 0}, Point{1, 1}, 2));
}

TEST(Adjacency, Errors) {
  EXPECT_THROW(cu_adjacent(Point{0}, Point{0, 1}, 1), InvalidArgument);
  EXPECT_THROW(cu_adjacent(Point{0, 0}, Point{0, 1}, 3), InvalidArgument);
  EXPECT_THROW(cu_adjacent(Point{0, 0}, Point{0, 1}, 0), InvalidArgument);
}

TEST(Adjacency, Degree) {
  EXPECT_EQ(adjacency_degree(1, 2), 4);
  EXPECT_EQ(adjacency_degree(3, 3), 26);
  EXPECT_EQ(adjacency_degree(1, 1), 2);
  EXPECT_EQ(adjacency_degree(2, 2), 8);
  EXPECT_EQ(adjacency_degree(1, 3), 6);
  EXPECT_EQ(adjacency_degree(2, 3), 18);
  EXPECT_THROW(adjacency_degree(3, 2), InvalidArgument);
  for (int n = 1; n <= 6; ++n) {
    for (int u = 1; u <= n; ++u) EXPECT_EQ(adjacency_degree(u, n), testing::oracle_degree(u, n));
  }
}

TEST(AdjacencyProperty, SymmetricIrreflexiveMonotone) {
  Rng rng(1);
  for (int i = 0; i < 3000; ++i) {
    int n = static_cast<int>(rng.uniform(1, 4));
    Point p = testing::random_point(rng, n, -2, 2);
    Point q = testing::random_point(rng, n, -2, 2);
    for (int u = 1; u <= n; ++u) {
      bool a = cu_adjacent(p, q, u);
      EXPECT_EQ(a, testing::oracle_adjacent(p, q, u));
      EXPECT_EQ(a, cu_adjacent(q, p, u));
      EXPECT_FALSE(cu_adjacent(p, p, u));
      if (a) {
        for (int v = u; v <= n; ++v) EXPECT_TRUE(cu_adjacent(p, q, v));
      }
    }
  }
}

TEST(DigitalImage, Validation) {
  EXPECT_THROW(DigitalImage(2, 1, {}), InvalidArgument);
  EXPECT_THROW(DigitalImage(2, 1, {Point{0, 0}, Point{0, 0}}), InvalidArgument);
  EXPECT_THROW(DigitalImage(2, 1, {Point{0}}), InvalidArgument);
  EXPECT_THROW(DigitalImage(2, 3, {Point{0, 0}}), InvalidArgument);
  DigitalImage img(2, 1, {Point{1, 0}, Point{0, 0}});
  EXPECT_EQ(img.point(0), (Point{0, 0}));
  EXPECT_EQ(img.index_of(Point{1, 0}), 1u);
  EXPECT_FALSE(img.index_of(Point{5, 5}).has_value());
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(DigitalImage::interval(0, 5)).size(), 1u);
  EXPECT_EQ(connected_components(DigitalImage(2, 2, {Point{0, 0}, Point{2, 0}})).size(), 2u);
  DigitalImage counter(5, 5, {p1, p2, p3});
  EXPECT_EQ(connected_components(counter).size(), 1u);
  EXPECT_FALSE(cu_adjacent(p1, p2, 5));
}

TEST(ComponentsProperty, PartitionMatchesUnionFind) {
  Rng rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    ImagePtr img = testing::random_image(rng, 8, 3);
    auto comps = connected_components(*img);
    auto roots = testing::oracle_components(*img);
    std::set<std::size_t> distinct(roots.begin(), roots.end());
    ASSERT_EQ(comps.size(), distinct.size());
    std::size_t total = 0;
    for (const auto& block : comps) {
      total += block.size();
      auto r = roots[img->require_index(block.front())];
      for (const auto& p : block) EXPECT_EQ(roots[img->require_index(p)], r);
    }
    EXPECT_EQ(total, img->size());
    EXPECT_EQ(is_connected(*img), distinct.size() == 1);
  }
}

TEST(Distance, Examples) {
  EXPECT_EQ(distance(Metric::lp(2), Point{0, 0}, Point{1, 1}).power(), Rational(2));
  EXPECT_EQ(distance(Metric::lp(2), Point{0, 0}, Point{1, 1}).to_string(), "sqrt(2)");
  EXPECT_EQ(distance(Metric::lp(1), Point{1, 0}, Point{1, 1}).value(), ExactValue(1));
  EXPECT_EQ(distance(Metric::reciprocal(), Point{2}, Point{4}).value(), ExactValue(Rational(1, 4)));
  EXPECT_THROW(distance(Metric::reciprocal(), Point{0}, Point{4}), InvalidArgument);
  EXPECT_THROW(distance(Metric::reciprocal(), Point{1, 1}, Point{4, 1}), InvalidArgument);
  EXPECT_THROW(Metric::lp(0), InvalidArgument);
}

TEST(Distance, CompareAgainstScalar) {
  auto d = distance(Metric::lp(2), Point{0, 0, 0, 0, 0}, Point{1, 1, 1, 1, 1});  // sqrt(5)
  EXPECT_EQ(d.compare(Rational(2)), std::strong_ordering::greater);
  EXPECT_EQ(d.compare(Rational(9, 4)), std::strong_ordering::less);
  EXPECT_EQ(distance(Metric::lp(2), Point{0, 0}, Point{3, 4}).compare(Rational(5)), std::strong_ordering::equal);
}

TEST(Metric, Parse) {
  EXPECT_EQ(Metric::parse("lp:3"), Metric::lp(3));
  EXPECT_EQ(Metric::parse("linf"), Metric::linf());
  EXPECT_EQ(Metric::parse("reciprocal"), Metric::reciprocal());
  EXPECT_THROW(Metric::parse("lp:x"), InvalidArgument);
  EXPECT_THROW(Metric::parse("lp:1.5"), InvalidArgument);
  EXPECT_EQ(Metric::lp(2).to_string(), "lp:2");
}

// Metric axioms, with the triangle inequality decided exactly.
TEST(DistanceProperty, MetricAxioms) {
  Rng rng(3);
  for (int i = 0; i < 1500; ++i) {
    int n = static_cast<int>(rng.uniform(1, 4));
    Point p = testing::random_point(rng, n, -4, 4);
    Point q = testing::random_point(rng, n, -4, 4);
    Point r = testing::random_point(rng, n, -4, 4);
    for (const auto& m : testing::test_metrics()) {
      auto dpq = distance(m, p, q), dqp = distance(m, q, p);
      EXPECT_EQ(dpq.power(), Rational(testing::oracle_power(m, p, q)));
      EXPECT_EQ(dpq, dqp);
      EXPECT_EQ(dpq.is_zero(), p == q);
      if (p != q) EXPECT_NE(dpq.compare(Rational(1)), std::strong_ordering::less);
      ExactValue lhs = distance(m, p, r).value();
      ExactValue rhs = dpq.value() + distance(m, q, r).value();
      EXPECT_LE(lhs, rhs);
      EXPECT_NEAR(static_cast<double>(lhs.to_double()), static_cast<double>(testing::oracle_distance(m, p, r)), 1e-9);
    }
  }
}

TEST(LatticeBounds, Examples) {
  auto sq = DigitalImage(2, 2, {Point{0, 0}, Point{0, 1}, Point{1, 0}, Point{1, 1}});
  EXPECT_TRUE(lp_lattice_bounds_check(sq, Metric::lp(2)).passed);
  EXPECT_TRUE(lp_lattice_bounds_check(DigitalImage(5, 5, {p1, p2, p3}), Metric::lp(1)).passed);
  EXPECT_TRUE(lp_lattice_bounds_check(DigitalImage(2, 2, {Point{0, 0}, Point{1, 1}}), Metric::linf()).passed);
  EXPECT_THROW(lp_lattice_bounds_check(DigitalImage::interval(1, 3), Metric::reciprocal()), InvalidArgument);
}

TEST(LatticeBoundsProperty, AlwaysPassesOnLattices) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    auto img = testing::random_image(rng, 6, 3);
    for (const auto& m : testing::test_metrics()) EXPECT_TRUE(lp_lattice_bounds_check(*img, m).passed);
  }
}

TEST(Diameter, Examples) {
  EXPECT_TRUE(diameter(DigitalImage(1, 1, {Point{4}}), Metric::lp(2)).value.is_zero());
  DigitalImage noncont(2, 2, {Point{0, 0}, Point{1, 1}, Point{2, 0}});
  EXPECT_EQ(diameter(noncont, Metric::lp(1)).value.value(), ExactValue(2));
  auto d2 = diameter(noncont, Metric::lp(2));
  EXPECT_EQ(d2.value.value(), ExactValue(2));
  EXPECT_EQ(d2.pair->first, (Point{0, 0}));
  EXPECT_EQ(d2.pair->second, (Point{2, 0}));
  DigitalImage exl(2, 2, {Point{0, 0}, Point{1, 0}, Point{1, 1}});
  EXPECT_EQ(min_positive_distance(exl, Metric::lp(2)).value.value(), ExactValue(1));
  EXPECT_THROW(min_positive_distance(DigitalImage(1, 1, {Point{4}}), Metric::lp(2)), InvalidArgument);
}

TEST(Diameter, ReciprocalMinimum) {
  const std::int64_t N = 12;
  auto mpd = min_positive_distance(DigitalImage::interval(1, N), Metric::reciprocal());
  EXPECT_EQ(mpd.value.power(), Rational(1, N * (N - 1)));
  EXPECT_EQ(mpd.pair->first, (Point{N - 1}));
  EXPECT_EQ(mpd.pair->second, (Point{N}));
}

TEST(DiameterProperty, BruteForce) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    auto img = testing::random_image(rng, 7, 3);
    if (img->size() < 2) continue;
    for (const auto& m : testing::test_metrics()) {
      std::int64_t hi = 0, lo = INT64_MAX;
      for (const auto& a : img->points()) {
        for (const auto& b : img->points()) {
          if (a == b) continue;
          hi = std::max(hi, testing::oracle_power(m, a, b));
          lo = std::min(lo, testing::oracle_power(m, a, b));
        }
      }
      EXPECT_EQ(diameter(*img, m).value.power(), Rational(hi));
      EXPECT_EQ(min_positive_distance(*img, m).value.power(), Rational(lo));
      EXPECT_GE(diameter(*img, m).value, min_positive_distance(*img, m).value);
    }
  }
}

TEST(Stabilization, Examples) {
  Point a{0}, b{1};
  std::vector<Point> s1{a, b, b, b};
  EXPECT_EQ(sequence_stabilization(s1, Metric::lp(1)), 1u);
  std::vector<Point> s2{a, b, a, b};
  EXPECT_FALSE(sequence_stabilization(s2, Metric::lp(1)).has_value());
  std::vector<Point> s3{b, b};
  EXPECT_EQ(sequence_stabilization(s3, Metric::lp(1)), 0u);
  std::vector<Point> empty;
  EXPECT_THROW(sequence_stabilization(empty, Metric::lp(1)), InvalidArgument);
}

// |1/m - 1/n| over the prefix, evaluated directly.
std::int64_t oracle_least_n0(std::int64_t N, const Rational& eps) {
  for (std::int64_t n0 = 0; n0 <= N; ++n0) {
    bool ok = true;
    for (std::int64_t m = n0 + 1; m <= N && ok; ++m) {
      for (std::int64_t n = m + 1; n <= N && ok; ++n) ok = Rational(1, m) - Rational(1, n) < eps;
    }
    if (ok) return n0;
  }
  return N;
}

TEST(ReciprocalDemo, HundredTenth) {
  auto r = reciprocal_metric_demo(100, Rational(1, 10));
  EXPECT_EQ(r.analytic_n0, 20);
  EXPECT_TRUE(r.analytic_window_verified);
  EXPECT_EQ(r.least_prefix_n0, oracle_least_n0(100, Rational(1, 10)));
  EXPECT_TRUE(r.no_limit_in_prefix);
  ASSERT_EQ(r.candidates.size(), 100u);
  EXPECT_EQ(r.candidates[0].limit, 1);
  EXPECT_EQ(r.candidates[0].tail_distance, Rational(100, 101));
  EXPECT_GE(r.candidates[0].tail_distance, Rational(99, 100));
  for (const auto& c : r.candidates) {
    EXPECT_EQ(c.tail_distance, Rational(1, c.limit) - Rational(1, 101));
    EXPECT_EQ(c.bound, Rational(1, c.limit) - Rational(1, 100));
    EXPECT_GE(c.tail_distance, c.bound);
    EXPECT_GT(c.tail_distance, 0);
  }
}

TEST(ReciprocalDemo, SmallAndLate) {
  auto r = reciprocal_metric_demo(2, Rational(2));
  EXPECT_TRUE(r.analytic_window_verified);
  EXPECT_EQ(r.least_prefix_n0, 0);
  auto late = reciprocal_metric_demo(50, Rational(1, 25));
  EXPECT_EQ(late.analytic_n0, 50);
  EXPECT_TRUE(late.analytic_window_verified);
  EXPECT_EQ(late.least_prefix_n0, oracle_least_n0(50, Rational(1, 25)));
  EXPECT_THROW(reciprocal_metric_demo(1, Rational(1)), InvalidArgument);
  EXPECT_THROW(reciprocal_metric_demo(5, Rational(0)), InvalidArgument);
}

}  // namespace
}  // namespace digifix
