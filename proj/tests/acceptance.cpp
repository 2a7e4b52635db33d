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


// Acceptance run: one PASS/FAIL line per criterion, with its time limit.
// Exit status is the number of failed criteria (capped at 1).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "digifix/gallery.hpp"
#include "digifix/oracle.hpp"

namespace digifix {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void need(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

const ClaimResult* find_claim(const SuiteReport& r, const std::string& id) {
  for (const auto& c : r.claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

bool claim_passed(const SuiteReport& r, const std::string& id) {
  auto* c = find_claim(r, id);
  return c && c->passed;
}

bool witness_is(const SuiteReport& r, const std::string& id, const std::vector<Point>& pts) {
  auto* c = find_claim(r, id);
  return c && c->witness && c->witness->points == pts;
}

bool inequality_is(const SuiteReport& r, const std::string& id, const ExactValue& lhs, const ExactValue& rhs) {
  auto* c = find_claim(r, id);
  return c && c->witness && c->witness->inequality && c->witness->inequality->lhs == lhs &&
         c->witness->inequality->rhs == rhs;
}

Outcome counter() {
  Outcome o;
  auto r = gallery_run("counter");
  const Point p1{0, 0, 0, 0, 0}, p3{1, 1, 1, 1, 1};
  need(o, r.verdict == SuiteVerdict::Confirmed, "gallery verdict");
  need(o, claim_passed(r, "not-continuous") && find_claim(r, "not-continuous")->witness, "continuity witness");
  need(o, claim_passed(r, "phi-contraction-l1"), "phi-contraction under lp:1");
  need(o, claim_passed(r, "phi-contraction-l2") && witness_is(r, "phi-contraction-l2", {p1, p3}), "lp:2 witness pair");
  auto rhs = ExactValue::root(Rational(5, 4), 2);
  need(o, inequality_is(r, "phi-contraction-l2", ExactValue(2), rhs) && ExactValue(2) > rhs, "2 > sqrt(5)/2");
  if (o.ok) o.detail = "witness (p1,p3): 2 > " + rhs.to_string();
  return o;
}

Outcome expansive_noncont() {
  Outcome o;
  auto r = gallery_run("expansive-noncont");
  need(o, r.verdict == SuiteVerdict::Confirmed, "gallery verdict");
  need(o, claim_passed(r, "expansive-l1"), "lp:1 expansive");
  auto sqrt2 = ExactValue::root(Rational(2), 2);
  need(o, claim_passed(r, "expansive-l2") && inequality_is(r, "expansive-l2", sqrt2, ExactValue(2)) &&
              sqrt2 < ExactValue(2),
       "lp:2 witness sqrt(2) < 2");
  need(o, claim_passed(r, "not-continuous") && witness_is(r, "not-continuous", {Point{1, 1}, Point{2, 0}}),
       "c_2 continuity witness (p1,p2)");
  need(o, claim_passed(r, "gen-expansive-distinct"), "generalised expansive, distinct pairs");
  if (o.ok) o.detail = "all bullets reproduced, distinct-pairs reading";
  return o;
}

Outcome dalal() {
  Outcome o;
  auto r = gallery_run("dalal");
  need(o, r.verdict == SuiteVerdict::Confirmed, "gallery verdict");
  need(o, !r.instances.empty() && r.instances.front() == "window [-20,20]", "window label");
  for (const char* id : {"ranges-and-compatibility", "f-condition", "no-fixed-points"}) {
    need(o, claim_passed(r, id), id);
  }
  auto a = WindowMap::affine(1, -1, -20, 20);
  auto s = WindowMap::affine(1, 1, -20, 20);
  need(o, fixed_points(a).empty() && fixed_points(s).empty(), "no fixed points");
  if (o.ok) o.detail = std::to_string(r.claims.size()) + " claims on window [-20,20]";
  return o;
}

Outcome suite(SuiteId id, std::size_t max_size, std::uint64_t min_pairs = 0) {
  Outcome o;
  auto r = run_suite(id, corpus(), suite_metrics(), max_size);
  need(o, r.verdict == SuiteVerdict::Confirmed, r.witness ? r.witness->detail : "not confirmed");
  need(o, r.pairs >= min_pairs, "too few pairs enumerated");
  if (o.ok) {
    o.detail = std::to_string(r.maps) + " maps, " + std::to_string(r.pairs) + " pairs, " +
               std::to_string(r.qualifying) + " qualifying, 0 violations";
  }
  return o;
}

Outcome constancy() {
  Outcome o;
  std::vector<NamedImage> intervals;
  for (int k = 0; k <= 4; ++k) {
    auto img = corpus_image(k == 0 ? "singleton" : "interval-0-" + std::to_string(k));
    need(o, img.has_value(), "interval [0," + std::to_string(k) + "] missing from the corpus");
    if (img) intervals.push_back(*img);
  }
  std::uint64_t qualifying = 0;
  for (auto s : {ConstancyScenario::A, ConstancyScenario::B, ConstancyScenario::C, ConstancyScenario::D,
                 ConstancyScenario::E}) {
    auto r = run_suite(SuiteId::Constancy, intervals, suite_metrics(), 5, s);
    need(o, r.verdict == SuiteVerdict::Confirmed,
         "scenario " + to_string(s) + ": " + (r.witness ? r.witness->detail : "not confirmed"));
    qualifying += r.qualifying;
  }
  if (o.ok) o.detail = "scenarios a-e, " + std::to_string(qualifying) + " qualifying, 0 violations";
  return o;
}

Outcome sridevi_ranijyo() {
  Outcome o;
  auto s = gallery_run("sridevi-312");
  need(o, s.verdict == SuiteVerdict::Confirmed, "sridevi-312 verdict");
  need(o, claim_passed(s, "contractive-inequality") && claim_passed(s, "no-fixed-point"), "counterexample");
  need(o, claim_passed(s, "corrected-solver-rejects") && claim_passed(s, "corrected-solver-phi"),
       "corrected solver rejection");
  auto r = gallery_run("ranijyo-338");
  need(o, r.verdict == SuiteVerdict::Confirmed, "ranijyo-338 verdict");
  need(o, witness_is(r, "erratum-witness", {Point{0}, Point{1}}) &&
              inequality_is(r, "erratum-witness", ExactValue(1), ExactValue(Rational(1, 2))),
       "erratum witness x=0, y=1: 1 > 1/2");
  if (o.ok) o.detail = "T(x)=1-x rejected; erratum witness (0,1): 1 > 1/2";
  return o;
}

Outcome reciprocal() {
  Outcome o;
  auto d = reciprocal_metric_demo(100, Rational(1, 10));
  need(o, d.analytic_n0 == 20 && d.analytic_window_verified, "Cauchy window beyond 20");
  need(o, d.candidates.size() == 100, "candidate count");
  for (const auto& c : d.candidates) {
    need(o, c.tail_distance >= c.bound && c.tail_distance > 0, "limit L = " + std::to_string(c.limit));
  }
  need(o, d.no_limit_in_prefix, "no-limit flag");
  if (o.ok) o.detail = "window n0 = 20, 100 candidate limits excluded";
  return o;
}

struct Criterion {
  int number;
  std::string name;
  double limit_ms;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace digifix

int main() {
  using namespace digifix;
  std::vector<Criterion> criteria{
      {1, "gallery counter", 1000, counter},
      {2, "gallery expansive-noncont", 1000, expansive_noncont},
      {3, "gallery dalal", 1000, dalal},
      {4, "compat-equivalence |X|<=4", 30000, [] { return suite(SuiteId::CompatEquivalence, 4, 65536); }},
      {5, "expansive-isometry |X|<=4", 10000, [] { return suite(SuiteId::ExpansiveIsometry, 4); }},
      {6, "wusdc-structure |X|<=4", 10000, [] { return suite(SuiteId::WusdcStructure, 4); }},
      {7, "contraction-phi-equivalence |X|<=3", 5000,
       [] { return suite(SuiteId::ContractionPhiEquivalence, 3); }},
      {8, "constancy a-e on [0,k], k<=4", 10000, constancy},
      {9, "solver soundness |X|<=3", 30000, [] { return suite(SuiteId::SolverSoundness, 3); }},
      {10, "gallery sridevi-312 and ranijyo-338", 1000, sridevi_ranijyo},
      {11, "reciprocal demo N=100 eps=1/10", 1000, reciprocal},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    bool in_time = ms < c.limit_ms;
    bool pass = o.ok && in_time;
    if (!in_time && o.ok) o.detail = "over the time limit";
    failed += !pass;
    std::printf("criterion %2d %-4s %-38s %9.1f ms (limit %6.0f ms)  %s\n", c.number, pass ? "PASS" : "FAIL",
                c.name.c_str(), ms, c.limit_ms, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
