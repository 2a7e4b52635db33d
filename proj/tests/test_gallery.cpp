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

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "digifix/error.hpp"
#include "digifix/gallery.hpp"
#include "digifix/json_io.hpp"
#include "support.hpp"

namespace digifix {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const ClaimResult& claim(const SuiteReport& r, const std::string& id) {
  for (const auto& c : r.claims) {
    if (c.id == id) return c;
  }
  throw std::runtime_error("no claim " + id);
}

TEST(Gallery, EveryCaseConfirmed) {
  for (const auto& id : gallery_cases()) {
    auto r = gallery_run(id);
    EXPECT_EQ(r.verdict, SuiteVerdict::Confirmed) << id;
    EXPECT_FALSE(r.claims.empty()) << id;
    for (const auto& c : r.claims) EXPECT_TRUE(c.passed) << id << ": " << c.id << " got " << c.actual;
  }
  EXPECT_THROW(gallery_run("nope"), InvalidArgument);
}

TEST(Gallery, GoldenBytes) {
  for (const auto& id : gallery_cases()) {
    std::ostringstream out, err;
    int code = cli::run({"gallery", "--case", id, "--json"}, out, err);
    EXPECT_EQ(code, 0) << id;
    EXPECT_EQ(out.str(), slurp(std::string(DIGIFIX_GOLDEN_DIR) + "/" + id + ".json")) << id;
    EXPECT_EQ(to_json(gallery_run(id)).dump(2) + "\n", out.str()) << id;
  }
}

TEST(Gallery, CounterAgainstIntegerOracle) {
  auto r = gallery_run("counter");
  const Point p1{0, 0, 0, 0, 0}, p2{2, 0, 0, 0, 0}, p3{1, 1, 1, 1, 1};
  // f(p1) = p1, f(p3) = p2: squared l2 distances 4 and 5, so 2 > sqrt(5)/2 iff 4 > 5/4
  EXPECT_EQ(testing::oracle_power(Metric::lp(2), p1, p2), 4);
  EXPECT_EQ(testing::oracle_power(Metric::lp(2), p1, p3), 5);
  const auto& l2 = claim(r, "phi-contraction-l2");
  ASSERT_TRUE(l2.witness);
  EXPECT_EQ(l2.witness->points, (std::vector<Point>{p1, p3}));
  ASSERT_TRUE(l2.witness->inequality);
  EXPECT_EQ(l2.witness->inequality->lhs, ExactValue(2));
  EXPECT_EQ(l2.witness->inequality->rhs, ExactValue::root(Rational(5, 4), 2));
  // l1 factor: pairs (p1,p2) -> 0/2, (p1,p3) -> 2/5, (p2,p3) -> 2/5
  EXPECT_EQ(claim(r, "contraction-factor-l1").actual, "2/5");
  EXPECT_EQ(claim(r, "not-continuous").witness->points.size(), 2u);
}

TEST(Gallery, ExpansiveNoncontAgainstIntegerOracle) {
  auto r = gallery_run("expansive-noncont");
  EXPECT_EQ(testing::oracle_power(Metric::lp(2), Point{1, 1}, Point{0, 0}), 2);
  EXPECT_EQ(testing::oracle_power(Metric::lp(2), Point{0, 0}, Point{2, 0}), 4);
  const auto& l2 = claim(r, "expansive-l2");
  EXPECT_EQ(l2.witness->inequality->lhs, ExactValue::root(Rational(2), 2));
  EXPECT_EQ(l2.witness->inequality->rhs, ExactValue(2));
  EXPECT_EQ(claim(r, "not-continuous").witness->points, (std::vector<Point>{Point{1, 1}, Point{2, 0}}));
  EXPECT_EQ(claim(r, "gen-expansive-distinct").actual, "holds");
}

TEST(Gallery, DalalWindows) {
  for (auto [lo, hi] : {std::pair<std::int64_t, std::int64_t>{-20, 20}, {-5, 5}, {-1, 1}}) {
    GalleryOptions o;
    o.window = {lo, hi};
    auto r = gallery_run("dalal", o);
    EXPECT_EQ(r.verdict, SuiteVerdict::Confirmed) << lo;
    EXPECT_EQ(r.instances.front(), "window [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
  // x - 1 and x + 1 never fix an integer
  for (std::int64_t x = -20; x <= 20; ++x) {
    EXPECT_NE(x - 1, x);
    EXPECT_NE(x + 1, x);
  }
}

TEST(Gallery, ErratumWitness) {
  auto r = gallery_run("ranijyo-338");
  const auto& w = claim(r, "erratum-witness");
  EXPECT_EQ(w.witness->points, (std::vector<Point>{Point{0}, Point{1}}));
  // S = 2 - x^2, T = x^2: |S(0) - S(1)| = 1, |T(0) - T(1)| = 1
  EXPECT_EQ(w.witness->inequality->lhs, ExactValue(1));
  EXPECT_EQ(w.witness->inequality->rhs, ExactValue(Rational(1, 2)));
  EXPECT_EQ(claim(r, "coincidence-points").actual, "-1,1");
}

TEST(Gallery, ReciprocalAgainstBruteForce) {
  auto r = gallery_run("reciprocal-cauchy");
  EXPECT_TRUE(claim(r, "cauchy-window").passed);
  const Rational eps(1, 10);
  for (int m = 21; m <= 100; ++m) {
    for (int n = 21; n <= 100; ++n) EXPECT_LT(abs(Rational(1, m) - Rational(1, n)), eps);
  }
  auto demo = reciprocal_metric_demo(100, eps);
  ASSERT_EQ(demo.candidates.size(), 100u);
  for (const auto& c : demo.candidates) {
    Rational tail = -1;
    for (int k = 101; k <= 300; ++k) {
      Rational d = abs(Rational(1, k) - Rational(1, c.limit));
      if (tail < 0 || d < tail) tail = d;
    }
    EXPECT_EQ(c.tail_distance, tail) << c.limit;
    EXPECT_GE(tail, Rational(1, c.limit) - Rational(1, 100));
    EXPECT_GT(tail, 0);
  }
}

TEST(Gallery, Sridevi) {
  auto r = gallery_run("sridevi-312");
  EXPECT_EQ(claim(r, "corrected-solver-rejects").actual, "hypothesis-violated: psi in Phi");
  EXPECT_EQ(claim(r, "corrected-solver-phi").actual, "failed");
  EXPECT_EQ(claim(r, "no-fixed-point").actual, "holds");
}

}  // namespace
}  // namespace digifix
