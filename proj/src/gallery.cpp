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


#include "digifix/gallery.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "digifix/error.hpp"
#include "digifix/solve.hpp"

namespace digifix {

std::vector<std::string> gallery_cases() {
  return {"counter",     "dalal",       "expansive-rotation",        "expansive-noncont",
          "sridevi-312", "ranijyo-338", "weakly-compatible-vacuous", "reciprocal-cauchy"};
}

namespace {

std::vector<Point> pts(std::initializer_list<std::int64_t> xs) {
  std::vector<Point> out;
  for (auto x : xs) out.push_back(Point{x});
  return out;
}

ClaimResult from_report(std::string id, std::string text, const ClassificationReport& rep,
                        Verdict expected, std::optional<std::vector<Point>> expected_witness = {}) {
  ClaimResult c;
  c.id = std::move(id);
  c.claim = std::move(text);
  c.expected = to_string(expected);
  c.actual = to_string(rep.verdict);
  c.witness = rep.witness;
  c.parameters = rep.parameters;
  c.notes = rep.notes;
  c.passed = rep.verdict == expected;
  if (expected_witness) {
    c.passed = c.passed && rep.witness && rep.witness->points == *expected_witness;
    std::string w;
    for (const auto& p : *expected_witness) w += (w.empty() ? "" : " ") + p.to_string();
    c.expected += " with witness " + w;
  }
  return c;
}

// Several reports that must all hold; the first failure is the witness.
ClaimResult all_of(std::string id, std::string text,
                   const std::vector<std::pair<std::string, ClassificationReport>>& parts,
                   Verdict expected) {
  ClassificationReport combined;
  combined.verdict = expected;
  for (const auto& [label, rep] : parts) {
    if (rep.holds()) continue;
    combined = rep;
    combined.witness->detail = label + ": " + combined.witness->detail;
    break;
  }
  ClaimResult c = from_report(std::move(id), std::move(text), combined, expected);
  if (c.passed) {
    std::string list;
    for (const auto& [label, rep] : parts) list += (list.empty() ? "" : ", ") + label;
    c.notes = "checked: " + list;
    if (!parts.empty() && !parts.front().second.notes.empty()) {
      c.notes += "; " + parts.front().second.notes;
    }
  }
  return c;
}

ClaimResult value_claim(std::string id, std::string text, std::string expected,
                        std::string actual, std::string notes = {}) {
  ClaimResult c;
  c.id = std::move(id);
  c.claim = std::move(text);
  c.passed = expected == actual;
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  c.notes = std::move(notes);
  return c;
}

ClassificationReport bool_report(std::string name, bool holds, Verdict ok, std::vector<Point> w,
                                 std::string detail, std::string notes = {}) {
  ClassificationReport r;
  r.class_name = std::move(name);
  r.verdict = holds ? ok : Verdict::Fails;
  if (!holds) r.witness = Witness{std::move(w), std::nullopt, std::move(detail)};
  r.notes = std::move(notes);
  return r;
}

std::string window_label(std::int64_t lo, std::int64_t hi) {
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

ImagePtr image_named(const std::string& name) { return corpus_image(name)->image; }

void case_counter(SuiteReport& r) {
  ImagePtr X = image_named("counter");
  Point p1{0, 0, 0, 0, 0}, p2{2, 0, 0, 0, 0}, p3{1, 1, 1, 1, 1};
  std::vector<std::pair<Point, Point>> pairs{{p1, p1}, {p2, p1}, {p3, p2}};
  SelfMap f = SelfMap::from_pairs(X, pairs);
  auto half = ScalarFamily::linear(Rational(1, 2), FamilyRole::Phi);
  r.claims.push_back(from_report("not-continuous", "f is not (c_5,c_5)-continuous",
                                 is_continuous(f, 5), Verdict::Fails,
                                 std::vector<Point>{p1, p3}));
  r.claims.push_back(from_report("phi-contraction-l1",
                                 "f is a digital phi-contraction for phi(t) = t/2 under l_1",
                                 is_phi_contraction(f, Metric::lp(1), half), Verdict::Holds));
  r.claims.push_back(from_report("phi-contraction-l2",
                                 "under l_2 the pair (p1,p3) refutes it: 2 > sqrt(5)/2",
                                 is_phi_contraction(f, Metric::lp(2), half), Verdict::Fails,
                                 std::vector<Point>{p1, p3}));
  auto cf = contraction_factor(f, Metric::lp(1));
  r.claims.push_back(value_claim("contraction-factor-l1",
                                 "the l_1 contraction factor is max{0, 2/5, 2/5} = 2/5", "2/5",
                                 cf.value().to_string()));
}

void case_expansive_noncont(SuiteReport& r) {
  ImagePtr X = image_named("expansive-noncont");
  Point p0{0, 0}, p1{1, 1}, p2{2, 0};
  std::vector<std::pair<Point, Point>> pairs{{p0, p1}, {p1, p2}, {p2, p0}};
  SelfMap t = SelfMap::from_pairs(X, pairs);
  r.claims.push_back(from_report("expansive-l1", "T is expansive (k = 1) under the Manhattan metric",
                                 is_expansive(t, Metric::lp(1), Rational(1)), Verdict::Holds));
  r.claims.push_back(from_report("expansive-l2",
                                 "T is not expansive under the Euclidean metric: "
                                 "d(T(p0),T(p2)) = sqrt(2) < 2 = d(p0,p2)",
                                 is_expansive(t, Metric::lp(2), Rational(1)), Verdict::Fails,
                                 std::vector<Point>{p0, p2}));
  r.claims.push_back(from_report("not-continuous", "T is not (c_2,c_2)-continuous",
                                 is_continuous(t, 2), Verdict::Fails, std::vector<Point>{p1, p2}));
  auto alpha = AlphaFn::constant(Rational(1, 3));
  auto psi = ScalarFamily::linear(Rational(1, 2), FamilyRole::Psi);
  r.claims.push_back(from_report(
      "gen-expansive-distinct",
      "T is generalised alpha-psi-expansive for psi(t) = t/2, alpha = 1/3 (x != y)",
      is_gen_alpha_psi_expansive(t, Metric::lp(1), alpha, psi, PairScope::DistinctPairs),
      Verdict::Holds));
  auto all = from_report(
      "gen-expansive-all-pairs",
      "read over all x, y the inequality fails on the diagonal: psi(0) = 0 < (1/3) M(x,x) = 2/3",
      is_gen_alpha_psi_expansive(t, Metric::lp(1), alpha, psi, PairScope::AllPairs),
      Verdict::Fails, std::vector<Point>{p0, p0});
  all.notes = "the formula gives M(x,x) = d(x,T(x)) = 2, while the worked proof uses M(x,x) = 0";
  r.claims.push_back(std::move(all));
  std::string values;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) values += (values.empty() ? "" : ",") + m_value(i, j, t, Metric::lp(1)).to_string();
    }
  }
  r.claims.push_back(value_claim("m-value", "M(p_i,p_j) = 2 whenever i != j", "2,2,2,2,2,2",
                                 values));
}

void case_expansive_rotation(SuiteReport& r) {
  ImagePtr X = image_named("expansive-exl");
  Point p0{0, 0}, p1{1, 0}, p2{1, 1};
  std::vector<std::pair<Point, Point>> pairs{{p0, p1}, {p1, p2}, {p2, p0}};
  SelfMap f = SelfMap::from_pairs(X, pairs);
  auto inv = invert(f);
  std::vector<std::pair<std::string, ClassificationReport>> iso{
      {"bijective", bool_report("bijective", inv.has_value(), Verdict::Holds, {}, "not one-to-one")},
      {"f continuous", is_continuous(f, 2)}};
  if (inv) iso.push_back({"f^-1 continuous", is_continuous(*inv, 2)});
  r.claims.push_back(all_of("isomorphism", "f is a (c_2,c_2)-isomorphism", iso, Verdict::Holds));
  bool inverse_is_back_rotation =
      inv && inv->apply(p0) == p2 && inv->apply(p1) == p0 && inv->apply(p2) == p1;
  r.claims.push_back(from_report(
      "inverse", "f^-1 is the rotation p_i -> p_(i-1 mod 3)",
      bool_report("inverse", inverse_is_back_rotation, Verdict::Holds, {}, "unexpected inverse"),
      Verdict::Holds));
  r.claims.push_back(from_report("not-expansive-l1", "f is not expansive under l_1",
                                 is_expansive(f, Metric::lp(1), Rational(1)), Verdict::Fails,
                                 std::vector<Point>{p0, p2}));
  r.claims.push_back(from_report("not-expansive-l2",
                                 "f is not expansive under l_2: d(f(p2),f(p0)) = 1 < sqrt(2)",
                                 is_expansive(f, Metric::lp(2), Rational(1)), Verdict::Fails,
                                 std::vector<Point>{p0, p2}));
  auto linf = from_report("expansive-linf",
                          "under the max metric all three distances equal 1, so f is expansive",
                          is_expansive(f, Metric::linf(), Rational(1)), Verdict::Holds);
  linf.notes = "the failure d(p1,p2) = 1 != 2^(1/p) needs a finite p";
  r.claims.push_back(std::move(linf));
}

void case_dalal(SuiteReport& r, std::int64_t lo, std::int64_t hi) {
  WindowMap a = WindowMap::affine(1, -1, lo, hi);
  WindowMap b = a;
  WindowMap s = WindowMap::affine(1, 1, lo, hi);
  WindowMap t = s;
  r.claims.push_back(all_of(
      "ranges-and-compatibility",
      "S(X) in B(X), T(X) in A(X), and the pairs (A,S), (B,T) commute, hence are compatible",
      {{"S(X) in B(X)", range_contained(s, b)},
       {"T(X) in A(X)", range_contained(t, a)},
       {"A S = S A", commute(a, s)},
       {"B T = T B", commute(b, t)},
       {"(A,S) weakly compatible", is_weakly_compatible(a, s)},
       {"(B,T) weakly compatible", is_weakly_compatible(b, t)}},
      Verdict::HoldsOnWindow));
  r.claims.push_back(all_of("continuous", "A, B, S and T are c_1-continuous",
                            {{"A", is_continuous(a)},
                             {"B", is_continuous(b)},
                             {"S", is_continuous(s)},
                             {"T", is_continuous(t)}},
                            Verdict::HoldsOnWindow));
  // The counterexample's F is identically 0.
  auto F = [](const std::array<std::int64_t, 6>&) { return std::int64_t{0}; };
  std::uint64_t evaluated = 0;
  bool f_ok = true;
  for (std::int64_t x = lo; x <= hi; ++x) {
    for (std::int64_t y = lo; y <= hi; ++y) {
      std::array<std::int64_t, 6> args{std::abs(a(x) - b(y)), std::abs(s(x) - t(y)),
                                       std::abs(a(x) - s(x)), std::abs(b(y) - t(y)),
                                       std::abs(a(x) - t(y)), std::abs(b(y) - s(x))};
      f_ok = f_ok && F(args) <= 0;
      ++evaluated;
    }
  }
  r.claims.push_back(from_report(
      "f-condition", "F(d(Ax,By), d(Sx,Ty), d(Ax,Sx), d(By,Ty), d(Ax,Ty), d(By,Sx)) = 0 <= 0",
      bool_report("f-condition", f_ok, Verdict::HoldsOnWindow, {}, "F > 0",
                  std::to_string(evaluated) + " pairs evaluated on window " +
                      window_label(lo, hi)),
      Verdict::HoldsOnWindow));
  std::vector<std::pair<std::string, ClassificationReport>> none;
  for (auto [label, m] : {std::pair{"A", &a}, {"B", &b}, {"S", &s}, {"T", &t}}) {
    auto fp = fixed_points(*m);
    none.push_back({std::string(label) + " has no fixed point",
                    bool_report("no-fixed-point", fp.empty(), Verdict::HoldsOnWindow,
                                fp.empty() ? std::vector<Point>{} : pts({fp.front()}),
                                "fixed point found",
                                "verified on window " + window_label(lo, hi))});
  }
  r.claims.push_back(
      all_of("no-fixed-points", "none of A, B, S, T has a fixed point", none,
             Verdict::HoldsOnWindow));
}

void case_sridevi(SuiteReport& r) {
  ImagePtr X = make_image(DigitalImage::interval(0, 1));
  SelfMap t = SelfMap::from_pairs(
      X, std::vector<std::pair<Point, Point>>{{Point{0}, Point{1}}, {Point{1}, Point{0}}});
  auto alpha = AlphaFn::constant(Rational(1));
  auto psi = ScalarFamily::linear(Rational(1), FamilyRole::Psi);
  auto phi = ScalarFamily::constant(Rational(-1), FamilyRole::Phi);
  const Metric l1 = Metric::lp(1);
  r.claims.push_back(from_report("alpha-admissible", "T(x) = 1-x is alpha-admissible for alpha = 1",
                                 is_alpha_admissible(t, alpha), Verdict::Holds));
  r.claims.push_back(from_report(
      "alpha-x0", "alpha(x_0,T(x_0)) >= 1 at x_0 = 0",
      bool_report("alpha-x0", alpha(0, t(0)) >= 1, Verdict::Holds, pts({0, 1}), "alpha < 1"),
      Verdict::Holds));
  r.claims.push_back(from_report("continuous", "T is c_1-continuous", is_continuous(t, 1),
                                 Verdict::Holds));
  r.claims.push_back(from_report(
      "contractive-inequality",
      "alpha psi(d(Tx,Ty)) <= psi(M(x,y)) - phi(M(x,y)) with psi(x) = x, phi(x) = -1",
      is_alpha_psi_phi_contractive(t, l1, alpha, psi, phi), Verdict::Holds));
  auto fp = fixed_points(t);
  r.claims.push_back(from_report(
      "no-fixed-point", "T has no fixed points",
      bool_report("no-fixed-point", fp.empty(), Verdict::Holds, fp, "fixed point found"),
      Verdict::Holds));
  auto m = phi_membership(phi, default_grid());
  r.claims.push_back(value_claim("phi-not-in-Phi", "phi(x) = -1 is not in Phi", "refuted",
                                 to_string(m.verdict), m.reason));
  auto trace = solve_alpha_psi_phi(t, l1, alpha, psi, phi, Point{0});
  r.claims.push_back(value_claim(
      "corrected-solver-rejects",
      "the corrected theorem's solver rejects the instance because psi(x) = x is not in Phi",
      "hypothesis-violated: psi in Phi",
      to_string(trace.outcome) + (trace.violated.empty() ? "" : ": " + trace.violated),
      trace.checks.empty() ? "" : trace.checks.front().detail));
  auto phi_check = std::find_if(trace.checks.begin(), trace.checks.end(),
                                [](const Check& c) { return c.name == "phi in Phi"; });
  r.claims.push_back(value_claim(
      "corrected-solver-phi", "the same solver also rejects phi(x) = -1 as a member of Phi",
      "failed", phi_check == trace.checks.end() ? "not checked" : phi_check->passed ? "passed" : "failed",
      phi_check == trace.checks.end() ? "" : phi_check->detail));
}

void case_ranijyo(SuiteReport& r, std::int64_t lo, std::int64_t hi) {
  WindowMap s = WindowMap::from_function(lo, hi, [](std::int64_t x) { return 2 - x * x; });
  WindowMap t = WindowMap::from_function(lo, hi, [](std::int64_t x) { return x * x; });
  if (s.in_window(0) && s.in_window(1)) {
    Rational ds = std::abs(s(0) - s(1));
    Rational dt = std::abs(t(0) - t(1));
    ClassificationReport direct;
    direct.class_name = "jungck-contraction";
    direct.parameters = {{"alpha", "1/2"}, {"x", "0"}, {"y", "1"}};
    direct.verdict = ds <= dt / 2 ? Verdict::Holds : Verdict::Fails;
    if (direct.verdict == Verdict::Fails) {
      direct.witness = Witness{pts({0, 1}),
                               Inequality{"d(S(x),S(y))", ExactValue(ds), "<=",
                                          "(1/2)*d(T(x),T(y))", ExactValue(dt / 2)},
                               "evaluated at x = 0, y = 1"};
    }
    r.claims.push_back(from_report("erratum-witness",
                                   "d(S(x),S(y)) <= (1/2) d(T(x),T(y)) fails at x = 0, y = 1: "
                                   "1 > 1/2",
                                   direct, Verdict::Fails, pts({0, 1})));
  }
  r.claims.push_back(from_report("half-contraction-refuted",
                                 "d(S(x),S(y)) <= (1/2) d(T(x),T(y)) fails on the window",
                                 is_jungck_contraction(s, t, Rational(1, 2)), Verdict::Fails));
  bool equal = true;
  std::vector<Point> w;
  for (std::int64_t x = lo; x <= hi && equal; ++x) {
    for (std::int64_t y = x + 1; y <= hi && equal; ++y) {
      equal = std::abs(s(x) - s(y)) == std::abs(t(x) - t(y));
      if (!equal) w = pts({x, y});
    }
  }
  r.claims.push_back(from_report(
      "distances-equal", "d(S(x),S(y)) = d(T(x),T(y)) for all x, y",
      bool_report("distances-equal", equal, Verdict::HoldsOnWindow, w, "distances differ",
                  "verified on window " + window_label(lo, hi)),
      Verdict::HoldsOnWindow));
  std::string cps;
  for (auto x : coincidence_points(s, t)) cps += (cps.empty() ? "" : ",") + std::to_string(x);
  r.claims.push_back(value_claim("coincidence-points", "S(x) = T(x) exactly at x = -1 and x = 1",
                                 lo <= -1 && hi >= 1 ? "-1,1" : cps, cps,
                                 "verified on window " + window_label(lo, hi)));
}

void case_weakly_vacuous(SuiteReport& r) {
  ImagePtr X = make_image(DigitalImage::interval(0, 1));
  SelfMap s = SelfMap::constant(X, Point{0});
  SelfMap t = SelfMap::constant(X, Point{1});
  auto cps = coincidence_points(s, t);
  r.claims.push_back(from_report(
      "no-coincidence", "S = 0 and T = 1 have no coincidence points",
      bool_report("no-coincidence", cps.empty(), Verdict::Holds, cps, "coincidence found"),
      Verdict::Holds));
  r.claims.push_back(from_report("weakly-compatible", "S and T are weakly compatible (vacuously)",
                                 is_weakly_compatible(s, t), Verdict::Holds));
}

void case_reciprocal(SuiteReport& r) {
  auto demo = reciprocal_metric_demo(100, Rational(1, 10));
  r.claims.push_back(from_report(
      "cauchy-window", "with N = 100 and epsilon = 1/10, |1/m - 1/n| < epsilon for all m, n > 20",
      bool_report("cauchy-window", demo.analytic_n0 == 20 && demo.analytic_window_verified,
                  Verdict::Holds, {}, "window check failed",
                  "least n0 valid on the prefix: " + std::to_string(demo.least_prefix_n0)),
      Verdict::Holds));
  const auto& first = demo.candidates.front();
  r.claims.push_back(from_report(
      "no-limit",
      "every candidate limit L <= 100 keeps tail distance >= 1/L - 1/100 > 0",
      bool_report("no-limit", demo.no_limit_in_prefix, Verdict::Holds, {}, "a candidate converges",
                  "L = 1: tail distance " + to_string(first.tail_distance) + " >= " +
                      to_string(first.bound)),
      Verdict::Holds));
}

}  // namespace

SuiteReport gallery_run(const std::string& case_id, const GalleryOptions& options) {
  SuiteReport r;
  r.suite = "gallery:" + case_id;
  r.images = 1;
  auto window = [&](std::int64_t lo, std::int64_t hi) {
    auto w = options.window.value_or(std::make_pair(lo, hi));
    if (w.first > w.second) throw InvalidArgument("empty window");
    r.instances.push_back("window " + window_label(w.first, w.second));
    return w;
  };
  if (case_id == "counter") {
    case_counter(r);
  } else if (case_id == "dalal") {
    auto [lo, hi] = window(-20, 20);
    case_dalal(r, lo, hi);
  } else if (case_id == "expansive-rotation") {
    case_expansive_rotation(r);
  } else if (case_id == "expansive-noncont") {
    case_expansive_noncont(r);
  } else if (case_id == "sridevi-312") {
    case_sridevi(r);
  } else if (case_id == "ranijyo-338") {
    auto [lo, hi] = window(-3, 3);
    case_ranijyo(r, lo, hi);
  } else if (case_id == "weakly-compatible-vacuous") {
    case_weakly_vacuous(r);
  } else if (case_id == "reciprocal-cauchy") {
    case_reciprocal(r);
  } else {
    throw InvalidArgument("unknown gallery case '" + case_id + "'");
  }
  for (const auto& c : r.claims) {
    if (c.passed) continue;
    r.verdict = SuiteVerdict::Refuted;
    r.witness = SuiteWitness{case_id, nullptr, std::nullopt, {}, {},
                             "claim " + c.id + ": expected " + c.expected + ", got " + c.actual};
    break;
  }
  return r;
}

}  // namespace digifix
