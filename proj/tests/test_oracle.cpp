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

#include <cstdlib>
#include <set>

#include "digifix/error.hpp"
#include "digifix/oracle.hpp"
#include "support.hpp"

namespace digifix {
namespace {

TEST(Enumerate, CountsAndDistinct) {
  for (std::int64_t k : {0, 1, 2, 3}) {
    auto X = make_image(DigitalImage::interval(0, k));
    auto maps = enumerate_self_maps(X);
    std::size_t n = X->size();
    std::size_t expected = 1;
    for (std::size_t i = 0; i < n; ++i) expected *= n;
    EXPECT_EQ(maps.size(), expected);
    EXPECT_EQ(self_map_count(n), expected);
    std::set<std::vector<SelfMap::Index>> seen;
    for (const auto& m : maps) seen.insert(m.table());
    EXPECT_EQ(seen.size(), expected);
  }
  EXPECT_EQ(self_map_count(30), UINT64_MAX);
}

TEST(Enumerate, StopsEarlyAndRespectsBudget) {
  auto X = make_image(DigitalImage::interval(0, 2));
  int visited = 0;
  for_each_self_map(X, [&](const SelfMap&) { return ++visited < 5; });
  EXPECT_EQ(visited, 5);
  EXPECT_THROW(enumerate_self_maps(X, 26), BudgetExceeded);
  EXPECT_NO_THROW(enumerate_self_maps(X, 27));
  auto big = make_image(DigitalImage::interval(0, 8));
  EXPECT_THROW(enumerate_self_maps(big), BudgetExceeded);
}

TEST(Enumerate, BudgetFromEnvironment) {
  ::setenv("DIGIFIX_BUDGET", "10", 1);
  EXPECT_EQ(enumeration_budget(), 10u);
  ::unsetenv("DIGIFIX_BUDGET");
  EXPECT_EQ(enumeration_budget(), kDefaultBudget);
}

TEST(Corpus, Contents) {
  auto c = corpus();
  std::set<std::string> names;
  for (const auto& img : c) names.insert(img.name);
  EXPECT_EQ(names.size(), c.size());
  for (const char* n : {"interval-0-3", "counter", "expansive-exl", "expansive-noncont", "disconnected-pair"}) {
    EXPECT_TRUE(names.count(n)) << n;
  }
  EXPECT_FALSE(corpus_image("nope"));
  auto r1 = random_image(7, 4, 2, 2);
  auto r2 = random_image(7, 4, 2, 2);
  EXPECT_EQ(*r1.image, *r2.image);
  EXPECT_EQ(r1.image->size(), 4u);
}

TEST(Parse, SuitesAndScenarios) {
  EXPECT_EQ(parse_suite("wusdc-structure"), SuiteId::WusdcStructure);
  EXPECT_FALSE(parse_suite("bogus"));
  EXPECT_EQ(parse_scenario("c"), ConstancyScenario::C);
  EXPECT_FALSE(parse_scenario("f"));
  EXPECT_THROW(run_suite(SuiteId::Constancy, corpus(), suite_metrics(), 2), InvalidArgument);
}

TEST(Merge, VerdictRules) {
  SuiteReport a;
  a.verdict = SuiteVerdict::Inapplicable;
  SuiteReport b;
  b.maps = 3;
  merge(a, b);
  EXPECT_EQ(a.verdict, SuiteVerdict::Confirmed);
  EXPECT_EQ(a.maps, 3u);
  SuiteReport c;
  c.verdict = SuiteVerdict::Inapplicable;
  merge(a, c);
  EXPECT_EQ(a.verdict, SuiteVerdict::Confirmed);
  SuiteReport d;
  d.verdict = SuiteVerdict::Refuted;
  d.witness = SuiteWitness{"x", nullptr, std::nullopt, {}, {}, "first"};
  merge(a, d);
  SuiteReport e;
  e.verdict = SuiteVerdict::Refuted;
  e.witness = SuiteWitness{"y", nullptr, std::nullopt, {}, {}, "second"};
  merge(a, e);
  EXPECT_EQ(a.verdict, SuiteVerdict::Refuted);
  EXPECT_EQ(a.witness->detail, "first");
}

TEST(Suites, SmallCorpusConfirmed) {
  for (auto id : {SuiteId::CompatEquivalence, SuiteId::ExpansiveIsometry, SuiteId::WusdcStructure,
                  SuiteId::ContractionPhiEquivalence, SuiteId::SolverSoundness}) {
    auto r = run_suite(id, corpus(), suite_metrics(), 3);
    EXPECT_EQ(r.verdict, SuiteVerdict::Confirmed) << to_string(id);
    EXPECT_GT(r.maps, 0u);
  }
}

TEST(Suites, ConstancyScenarios) {
  auto X = *corpus_image("interval-0-3");
  for (auto s : {ConstancyScenario::A, ConstancyScenario::B, ConstancyScenario::C, ConstancyScenario::D,
                 ConstancyScenario::E}) {
    auto r = verify_constancy(X, Metric::lp(1), s);
    EXPECT_EQ(r.verdict, SuiteVerdict::Confirmed) << to_string(s);
    EXPECT_EQ(r.maps, 256u);
  }
  auto pair = *corpus_image("disconnected-pair");
  auto d = verify_constancy(pair, Metric::lp(1), ConstancyScenario::A);
  EXPECT_EQ(d.verdict, SuiteVerdict::Inapplicable);
  EXPECT_FALSE(d.notes.empty());
}

// Independent count: onto maps with d(Tx,Ty) >= d(x,y) everywhere are exactly the
// isometries, and both counts come from integer powers only.
TEST(Suites, ExpansiveCountMatchesIsometryOracle) {
  for (const auto& img : corpus()) {
    if (img.image->size() > 4) continue;
    for (const auto& m : suite_metrics()) {
      std::size_t expansive = 0, isometries = 0;
      const auto& X = *img.image;
      for (const auto& f : enumerate_self_maps(img.image)) {
        bool iso = true;
        for (std::size_t i = 0; i < X.size(); ++i) {
          for (std::size_t j = 0; j < X.size(); ++j) {
            iso = iso && testing::oracle_power(m, X.point(f(i)), X.point(f(j))) ==
                             testing::oracle_power(m, X.point(i), X.point(j));
          }
        }
        isometries += iso;
        expansive += f.is_surjective() && is_expansive(f, m, Rational(1)).holds();
      }
      EXPECT_EQ(expansive, isometries) << img.name << " " << m.to_string();
    }
  }
}

// Every suite confirms on seeded random images of size 1-4, dimension 1-3 and any u.
TEST(Suites, RandomImagesConfirmed) {
  for (std::uint64_t seed = 1; seed <= 36; ++seed) {
    std::size_t size = 1 + seed % 4;
    int dim = 1 + static_cast<int>((seed / 4) % 3);
    int u = 1 + static_cast<int>(seed % dim);
    auto img = random_image(seed, size, dim, u);
    ASSERT_EQ(img.image->size(), size);
    std::vector<NamedImage> one{img};
    for (auto id : {SuiteId::CompatEquivalence, SuiteId::ExpansiveIsometry, SuiteId::WusdcStructure,
                    SuiteId::ContractionPhiEquivalence, SuiteId::SolverSoundness}) {
      auto r = run_suite(id, one, suite_metrics(), 4);
      EXPECT_TRUE(r.ok()) << to_string(id) << " on " << img.name << ": " << (r.witness ? r.witness->detail : "");
    }
    for (auto s : {ConstancyScenario::A, ConstancyScenario::B, ConstancyScenario::C, ConstancyScenario::D,
                   ConstancyScenario::E}) {
      auto r = run_suite(SuiteId::Constancy, one, suite_metrics(), 4, s);
      EXPECT_TRUE(r.ok()) << to_string(s) << " on " << img.name;
    }
  }
}

}  // namespace
}  // namespace digifix
