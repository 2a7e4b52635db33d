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


#include "digifix/classify.hpp"

#include <algorithm>

#include "digifix/error.hpp"

namespace digifix {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::HoldsOnWindow:
      return "holds-on-window";
  }
  return {};
}

std::string Inequality::to_string() const {
  return lhs_label + " = " + lhs.to_string() + " " + relation + " " + rhs_label + " = " +
         rhs.to_string() + " is violated";
}

void require_lattice_metric(const DigitalImage& image, const Metric& metric) {
  if (!metric.is_lattice()) {
    throw InvalidArgument("the reciprocal metric is not accepted here; use lp:<p> or linf");
  }
  check_metric_compatible(image, metric);
}

namespace {

using Index = SelfMap::Index;

// a <=> k * b, with a and b measured under the same metric.
std::strong_ordering compare_scaled(const Distance& a, const Rational& k, const Distance& b) {
  Rational rhs = pow(k, a.metric().root_index()) * b.power();
  return compare(a.power(), rhs);
}

ClassificationReport make_report(std::string name, const Metric* metric) {
  ClassificationReport r;
  r.class_name = std::move(name);
  if (metric) r.parameters.emplace_back("metric", metric->to_string());
  return r;
}

void fail(ClassificationReport& r, std::vector<Point> points, std::optional<Inequality> ineq,
          std::string detail) {
  r.verdict = Verdict::Fails;
  r.witness = Witness{std::move(points), std::move(ineq), std::move(detail)};
}

std::string pt(const DigitalImage& X, std::size_t i) { return X.point(i).to_string(); }

std::string window_note(std::int64_t lo, std::int64_t hi) {
  return "verified on window [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

void require_same_window(const WindowMap& s, const WindowMap& t) {
  if (s.lo() != t.lo() || s.hi() != t.hi()) {
    throw InvalidArgument("window maps are defined on different windows");
  }
}

std::int64_t absdiff(std::int64_t a, std::int64_t b) { return a > b ? a - b : b - a; }

}  // namespace

ContractionFactor contraction_factor(const SelfMap& f, const Metric& metric) {
  const DigitalImage& X = f.domain();
  require_lattice_metric(X, metric);
  ContractionFactor cf;
  cf.power = 0;
  cf.root = metric.root_index();
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      Distance dx = distance(metric, X.point(i), X.point(j));
      Distance dy = distance(metric, X.point(f(i)), X.point(f(j)));
      Rational ratio = dy.power() / dx.power();
      if (!cf.argmax || ratio > cf.power) {
        cf.power = ratio;
        cf.argmax = PairWitness{X.point(i), X.point(j)};
      }
    }
  }
  return cf;
}

ClassificationReport is_phi_contraction(const SelfMap& f, const Metric& metric,
                                        const ScalarFamily& phi) {
  const DigitalImage& X = f.domain();
  require_lattice_metric(X, metric);
  auto r = make_report("phi-contraction", &metric);
  r.parameters.emplace_back("phi", phi.to_string());
  bool diagonal = phi.kind() != ScalarFamily::Kind::Table;
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = diagonal ? i : i + 1; j < X.size(); ++j) {
      ExactValue lhs = distance(metric, X.point(f(i)), X.point(f(j))).value();
      ExactValue rhs = phi(distance(metric, X.point(i), X.point(j)).value());
      if (lhs <= rhs) continue;
      fail(r, {X.point(i), X.point(j)}, Inequality{"d(f(x),f(y))", lhs, "<=", "phi(d(x,y))", rhs},
           "d(f(x),f(y)) exceeds phi(d(x,y))");
      return r;
    }
  }
  return r;
}

ClassificationReport is_phi_contractive(const SelfMap& f, const Metric& metric,
                                        const ScalarFamily& phi) {
  const DigitalImage& X = f.domain();
  require_lattice_metric(X, metric);
  auto r = make_report("phi-contractive", &metric);
  r.parameters.emplace_back("phi", phi.to_string());
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      ExactValue lhs = phi(distance(metric, X.point(f(i)), X.point(f(j))).value());
      ExactValue rhs = phi(distance(metric, X.point(i), X.point(j)).value());
      if (lhs < rhs) continue;
      fail(r, {X.point(i), X.point(j)},
           Inequality{"phi(d(f(x),f(y)))", lhs, "<", "phi(d(x,y))", rhs},
           "phi(d(f(x),f(y))) is not below phi(d(x,y))");
      return r;
    }
  }
  return r;
}

ClassificationReport is_expansive(const SelfMap& f, const Metric& metric, const Rational& k) {
  if (k < 1) throw InvalidArgument("expansive constant k must be >= 1");
  const DigitalImage& X = f.domain();
  require_lattice_metric(X, metric);
  auto r = make_report("expansive", &metric);
  r.parameters.emplace_back("k", to_string(k));
  if (!f.is_surjective()) {
    auto range = f.range();
    for (std::size_t i = 0; i < X.size(); ++i) {
      if (!std::binary_search(range.begin(), range.end(), static_cast<Index>(i))) {
        fail(r, {X.point(i)}, std::nullopt, "not onto: " + pt(X, i) + " has no preimage");
        return r;
      }
    }
  }
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      Distance dx = distance(metric, X.point(i), X.point(j));
      Distance dy = distance(metric, X.point(f(i)), X.point(f(j)));
      if (compare_scaled(dy, k, dx) >= 0) continue;
      fail(r, {X.point(i), X.point(j)},
           Inequality{"d(f(x),f(y))", dy.value(), ">=", "k*d(x,y)", dx.value() * k},
           "expansion inequality fails");
      return r;
    }
  }
  return r;
}

ExactValue m_value(std::size_t x, std::size_t y, const SelfMap& f, const Metric& metric) {
  const DigitalImage& X = f.domain();
  auto d = [&](std::size_t a, std::size_t b) {
    return distance(metric, X.point(a), X.point(b)).value();
  };
  const Rational half(1, 2);
  ExactValue m = d(x, y);
  m = max(m, (d(x, f(x)) + d(y, f(y))) * half);
  m = max(m, (d(x, f(y)) + d(y, f(x))) * half);
  return m;
}

ExactValue m_value_contractive(std::size_t x, std::size_t y, const SelfMap& f,
                               const Metric& metric) {
  const DigitalImage& X = f.domain();
  auto d = [&](std::size_t a, std::size_t b) {
    return distance(metric, X.point(a), X.point(b)).value();
  };
  ExactValue m = d(x, y);
  m = max(m, d(x, f(x)));
  m = max(m, d(y, f(y)));
  m = max(m, (d(x, f(y)) + d(y, f(x))) * Rational(1, 2));
  return m;
}

ClassificationReport is_gen_alpha_psi_expansive(const SelfMap& f, const Metric& metric,
                                                const AlphaFn& alpha, const ScalarFamily& psi,
                                                PairScope scope) {
  const DigitalImage& X = f.domain();
  require_lattice_metric(X, metric);
  auto r = make_report("generalised-alpha-psi-expansive", &metric);
  r.parameters.emplace_back("alpha", alpha.to_string());
  r.parameters.emplace_back("psi", psi.to_string());
  r.parameters.emplace_back("pairs", scope == PairScope::AllPairs ? "all" : "distinct");
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = 0; j < X.size(); ++j) {
      if (i == j && scope == PairScope::DistinctPairs) continue;
      ExactValue lhs = psi(distance(metric, X.point(f(i)), X.point(f(j))).value());
      ExactValue rhs = m_value(i, j, f, metric) * alpha(i, j);
      if (lhs >= rhs) continue;
      fail(r, {X.point(i), X.point(j)},
           Inequality{"psi(d(T(x),T(y)))", lhs, ">=", "alpha(x,y)*M(x,y)", rhs},
           i == j ? "fails on the diagonal, where M(x,x) = d(x,T(x))" : "inequality fails");
      return r;
    }
  }
  return r;
}

ClassificationReport is_alpha_psi_phi_contractive(const SelfMap& f, const Metric& metric,
                                                  const AlphaFn& alpha, const ScalarFamily& psi,
                                                  const ScalarFamily& phi) {
  const DigitalImage& X = f.domain();
  require_lattice_metric(X, metric);
  auto r = make_report("alpha-psi-phi-contractive", &metric);
  r.parameters.emplace_back("alpha", alpha.to_string());
  r.parameters.emplace_back("psi", psi.to_string());
  r.parameters.emplace_back("phi", phi.to_string());
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = 0; j < X.size(); ++j) {
      ExactValue lhs = psi(distance(metric, X.point(f(i)), X.point(f(j))).value()) * alpha(i, j);
      ExactValue m = m_value_contractive(i, j, f, metric);
      ExactValue rhs = psi(m) - phi(m);
      if (lhs <= rhs) continue;
      fail(r, {X.point(i), X.point(j)},
           Inequality{"alpha(x,y)*psi(d(T(x),T(y)))", lhs, "<=", "psi(M(x,y))-phi(M(x,y))", rhs},
           "contractive inequality fails");
      return r;
    }
  }
  return r;
}

ClassificationReport is_alpha_admissible(const SelfMap& f, const AlphaFn& alpha) {
  const DigitalImage& X = f.domain();
  auto r = make_report("alpha-admissible", nullptr);
  r.parameters.emplace_back("alpha", alpha.to_string());
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = 0; j < X.size(); ++j) {
      if (alpha(i, j) < 1 || alpha(f(i), f(j)) >= 1) continue;
      fail(r, {X.point(i), X.point(j)},
           Inequality{"alpha(T(x),T(y))", ExactValue(alpha(f(i), f(j))), ">=", "1",
                      ExactValue(1)},
           "alpha(x,y) = " + to_string(alpha(i, j)) + " >= 1 but alpha(T(x),T(y)) < 1");
      return r;
    }
  }
  return r;
}

ClassificationReport is_wusdc(const SelfMap& f, const Metric& metric) {
  const DigitalImage& X = f.domain();
  require_lattice_metric(X, metric);
  auto r = make_report("wusdc", &metric);
  r.notes =
      "decided as d(T(x),T(y)) < d(x,y) for x != y; on a finite space this is equivalent to "
      "the epsilon-delta definition (for each epsilon take delta below the gap to the next "
      "realized distance)";
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      Distance dx = distance(metric, X.point(i), X.point(j));
      Distance dy = distance(metric, X.point(f(i)), X.point(f(j)));
      if (dy < dx) continue;
      fail(r, {X.point(i), X.point(j)},
           Inequality{"d(T(x),T(y))", dy.value(), "<", "d(x,y)", dx.value()},
           "no strict decrease");
      return r;
    }
  }
  return r;
}

ClassificationReport is_continuous(const SelfMap& f, int u) {
  auto r = make_report("digitally-continuous", nullptr);
  r.parameters.emplace_back("u", std::to_string(u));
  auto c = is_digitally_continuous(f, u);
  if (!c.holds) {
    const auto& w = *c.witness;
    fail(r, {w.first, w.second}, std::nullopt,
         "c_" + std::to_string(u) + "-adjacent points whose images " +
             f.apply(w.first).to_string() + ", " + f.apply(w.second).to_string() +
             " are neither equal nor adjacent");
  }
  return r;
}

ClassificationReport is_continuous(const WindowMap& f) {
  auto r = make_report("digitally-continuous", nullptr);
  r.parameters.emplace_back("u", "1");
  r.parameters.emplace_back("window", f.label());
  r.verdict = Verdict::HoldsOnWindow;
  r.notes = window_note(f.lo(), f.hi());
  auto c = is_digitally_continuous(f);
  if (!c.holds) {
    const auto& w = *c.witness;
    fail(r, {w.first, w.second}, std::nullopt,
         "adjacent integers with images " + std::to_string(f(w.first[0])) + ", " +
             std::to_string(f(w.second[0])) + " that are neither equal nor adjacent");
  }
  return r;
}

std::vector<Point> coincidence_points(const SelfMap& s, const SelfMap& t) {
  if (!same_domain(s, t)) throw InvalidArgument("maps are defined on different domains");
  std::vector<Point> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s(i) == t(i)) out.push_back(s.domain().point(i));
  }
  return out;
}

std::vector<std::int64_t> coincidence_points(const WindowMap& s, const WindowMap& t) {
  require_same_window(s, t);
  std::vector<std::int64_t> out;
  for (std::int64_t x = s.lo(); x <= s.hi(); ++x) {
    if (s(x) == t(x)) out.push_back(x);
  }
  return out;
}

ClassificationReport is_weakly_compatible(const SelfMap& s, const SelfMap& t) {
  if (!same_domain(s, t)) throw InvalidArgument("maps are defined on different domains");
  const DigitalImage& X = s.domain();
  auto r = make_report("weakly-compatible", nullptr);
  std::size_t count = 0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (s(i) != t(i)) continue;
    ++count;
    if (s(t(i)) == t(s(i))) continue;
    fail(r, {X.point(i)}, std::nullopt,
         "coincidence point where S(T(x)) = " + pt(X, s(t(i))) + " but T(S(x)) = " +
             pt(X, t(s(i))));
    return r;
  }
  if (count == 0) r.notes = "no coincidence points; holds vacuously";
  return r;
}

ClassificationReport is_weakly_compatible(const WindowMap& s, const WindowMap& t) {
  require_same_window(s, t);
  auto r = make_report("weakly-compatible", nullptr);
  r.parameters.emplace_back("window", s.label());
  r.verdict = Verdict::HoldsOnWindow;
  auto coincidences = coincidence_points(s, t);
  for (std::int64_t x : coincidences) {
    std::int64_t st = s(t(x));  // throws WindowEscape when t(x) leaves the window
    std::int64_t ts = t(s(x));
    if (st == ts) continue;
    fail(r, {Point{x}}, std::nullopt,
         "S(T(x)) = " + std::to_string(st) + " but T(S(x)) = " + std::to_string(ts));
    return r;
  }
  r.notes = window_note(s.lo(), s.hi());
  if (coincidences.empty()) r.notes += "; no coincidence points, holds vacuously";
  return r;
}

ClassificationReport commute(const SelfMap& s, const SelfMap& t) {
  if (!same_domain(s, t)) throw InvalidArgument("maps are defined on different domains");
  const DigitalImage& X = s.domain();
  auto r = make_report("commuting", nullptr);
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (s(t(i)) == t(s(i))) continue;
    fail(r, {X.point(i)}, std::nullopt,
         "S(T(x)) = " + pt(X, s(t(i))) + " but T(S(x)) = " + pt(X, t(s(i))));
    return r;
  }
  return r;
}

ClassificationReport commute(const WindowMap& s, const WindowMap& t) {
  require_same_window(s, t);
  auto r = make_report("commuting", nullptr);
  r.parameters.emplace_back("window", s.label());
  r.verdict = Verdict::HoldsOnWindow;
  std::size_t checked = 0;
  for (std::int64_t x = s.lo(); x <= s.hi(); ++x) {
    if (!s.in_window(t(x)) || !t.in_window(s(x))) continue;
    ++checked;
    std::int64_t st = s(t(x)), ts = t(s(x));
    if (st == ts) continue;
    fail(r, {Point{x}}, std::nullopt,
         "S(T(x)) = " + std::to_string(st) + " but T(S(x)) = " + std::to_string(ts));
    return r;
  }
  r.notes = window_note(s.lo(), s.hi()) + " at " + std::to_string(checked) +
            " points where both compositions are defined";
  return r;
}

ClassificationReport range_contained(const SelfMap& s, const SelfMap& t) {
  if (!same_domain(s, t)) throw InvalidArgument("maps are defined on different domains");
  const DigitalImage& X = s.domain();
  auto r = make_report("range-contained", nullptr);
  auto range = t.range();
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (std::binary_search(range.begin(), range.end(), s(i))) continue;
    fail(r, {X.point(i)}, std::nullopt,
         "S(x) = " + pt(X, s(i)) + " is not a value of T");
    return r;
  }
  return r;
}

ClassificationReport range_contained(const WindowMap& s, const WindowMap& t) {
  require_same_window(s, t);
  auto r = make_report("range-contained", nullptr);
  r.parameters.emplace_back("window", s.label());
  r.verdict = Verdict::HoldsOnWindow;
  std::vector<std::int64_t> values;
  for (std::int64_t x = t.lo(); x <= t.hi(); ++x) values.push_back(t(x));
  std::sort(values.begin(), values.end());
  for (std::int64_t x = s.lo(); x <= s.hi(); ++x) {
    std::int64_t v = s(x);
    if (v <= s.lo() || v >= s.hi()) continue;
    if (std::binary_search(values.begin(), values.end(), v)) continue;
    fail(r, {Point{x}}, std::nullopt,
         "S(x) = " + std::to_string(v) + " is not a value of T on the window");
    return r;
  }
  r.notes = window_note(s.lo(), s.hi()) + " for values in the window interior";
  return r;
}

ClassificationReport is_jungck_contraction(const SelfMap& s, const SelfMap& t,
                                           const Metric& metric, const Rational& alpha) {
  if (!same_domain(s, t)) throw InvalidArgument("maps are defined on different domains");
  const DigitalImage& X = s.domain();
  require_lattice_metric(X, metric);
  auto r = make_report("jungck-contraction", &metric);
  r.parameters.emplace_back("alpha", to_string(alpha));
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      Distance ds = distance(metric, X.point(s(i)), X.point(s(j)));
      Distance dt = distance(metric, X.point(t(i)), X.point(t(j)));
      if (compare_scaled(ds, alpha, dt) <= 0) continue;
      fail(r, {X.point(i), X.point(j)},
           Inequality{"d(S(x),S(y))", ds.value(), "<=", "alpha*d(T(x),T(y))", dt.value() * alpha},
           "contraction inequality fails");
      return r;
    }
  }
  return r;
}

ClassificationReport is_jungck_contraction(const WindowMap& s, const WindowMap& t,
                                           const Rational& alpha) {
  require_same_window(s, t);
  auto r = make_report("jungck-contraction", nullptr);
  r.parameters.emplace_back("metric", "lp:1");
  r.parameters.emplace_back("alpha", to_string(alpha));
  r.parameters.emplace_back("window", s.label());
  r.verdict = Verdict::HoldsOnWindow;
  for (std::int64_t x = s.lo(); x <= s.hi(); ++x) {
    for (std::int64_t y = x + 1; y <= s.hi(); ++y) {
      Rational ds = absdiff(s(x), s(y));
      Rational dt = absdiff(t(x), t(y));
      if (ds <= alpha * dt) continue;
      fail(r, {Point{x}, Point{y}},
           Inequality{"d(S(x),S(y))", ExactValue(ds), "<=", "alpha*d(T(x),T(y))",
                      ExactValue(alpha * dt)},
           "contraction inequality fails");
      return r;
    }
  }
  r.notes = window_note(s.lo(), s.hi());
  return r;
}

CompatibilityFlags compatibility_class(const SelfMap& s, const SelfMap& t, const Metric& metric) {
  if (!same_domain(s, t)) throw InvalidArgument("maps are defined on different domains");
  require_lattice_metric(s.domain(), metric);
  CompatibilityFlags flags;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s(x) != t(x)) continue;
    ++flags.coincidence_count;
    Index sx = s(x), tx = t(x);
    if (s(tx) != t(sx)) flags.compatible = false;
    if (s(tx) != t(tx) || t(sx) != s(sx)) flags.type_a = false;
    if (s(sx) != t(tx)) flags.type_p = false;
  }
  return flags;
}

}  // namespace digifix
