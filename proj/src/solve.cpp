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


#include "digifix/solve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "digifix/error.hpp"

namespace digifix {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::FixedPoint:
      return "fixed-point";
    case Outcome::CommonFixedPoint:
      return "common-fixed-point";
    case Outcome::Diverged:
      return "diverged";
    case Outcome::HypothesisViolated:
      return "hypothesis-violated";
  }
  return {};
}

std::size_t default_maxiter(const DigitalImage& image) { return 4 * image.size() + 8; }

std::vector<Rational> membership_grid(const DigitalImage& image, const Metric& metric) {
  std::vector<Rational> grid = default_grid();
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      auto q = distance(metric, image.point(i), image.point(j)).value().as_rational();
      if (q && std::find(grid.begin(), grid.end(), *q) == grid.end()) grid.push_back(*q);
    }
  }
  return grid;
}

namespace {

std::size_t resolve_maxiter(const DigitalImage& X, std::optional<std::size_t> maxiter) {
  if (!maxiter) return default_maxiter(X);
  if (*maxiter < 1) throw InvalidArgument("maxiter must be at least 1");
  return *maxiter;
}

SolveTrace start(std::string scheme, std::size_t maxiter) {
  SolveTrace tr;
  tr.scheme = std::move(scheme);
  tr.maxiter = maxiter;
  return tr;
}

// Records a check; returns false (and marks the trace) when it failed.
bool record(SolveTrace& tr, std::string name, bool passed, std::string detail,
            std::optional<Witness> witness = std::nullopt) {
  tr.checks.push_back({name, passed, detail});
  if (!passed) {
    tr.outcome = Outcome::HypothesisViolated;
    if (tr.violated.empty()) {
      tr.violated = std::move(name);
      tr.witness = std::move(witness);
    }
  }
  return passed;
}

bool record(SolveTrace& tr, std::string name, const ClassificationReport& r) {
  std::string detail = r.holds() ? "holds" : r.witness->detail;
  if (r.witness && r.witness->inequality) detail += ": " + r.witness->inequality->to_string();
  return record(tr, std::move(name), r.holds(), std::move(detail), r.witness);
}

bool record(SolveTrace& tr, std::string name, const MembershipReport& m) {
  std::string detail = to_string(m.verdict) + ": " + m.reason;
  return record(tr, std::move(name), m.admissible(), std::move(detail));
}

void finish_fixed_point(SolveTrace& tr, const SelfMap& f, std::size_t x) {
  if (f(x) != x) throw std::logic_error(tr.scheme + ": reported point is not fixed");
  tr.outcome = Outcome::FixedPoint;
  tr.point = f.domain().point(x);
}

void finish_cycle(SolveTrace& tr, const std::vector<std::size_t>& orbit, std::size_t repeated,
                  const DigitalImage& X) {
  tr.outcome = Outcome::Diverged;
  auto first = std::find(orbit.begin(), orbit.end(), repeated);
  for (auto it = first; it + 1 != orbit.end(); ++it) tr.cycle.push_back(X.point(*it));
}

}  // namespace

SolveTrace solve_picard(const SelfMap& f, const Metric& metric, const Point& x0,
                        std::optional<std::size_t> maxiter,
                        const std::optional<ScalarFamily>& psi) {
  const DigitalImage& X = f.domain();
  require_lattice_metric(X, metric);
  SolveTrace tr = start("picard", resolve_maxiter(X, maxiter));
  std::size_t x = X.require_index(x0);
  if (psi) {
    auto grid = membership_grid(X, metric);
    if (!record(tr, "psi in Psi", psi_membership(*psi, grid))) return tr;
  }
  std::vector<std::size_t> orbit{x};
  std::set<std::size_t> visited{x};
  tr.orbit.push_back(x0);
  ExactValue d01;
  for (std::size_t n = 0; n < tr.maxiter; ++n) {
    std::size_t next = f(x);
    orbit.push_back(next);
    tr.orbit.push_back(X.point(next));
    tr.iterations = n + 1;
    if (psi) {
      ExactValue step = distance(metric, X.point(x), X.point(next)).value();
      if (n == 0) d01 = step;
      ExactValue bound = eval_family(*psi, d01, static_cast<unsigned>(n));
      if (step > bound) {
        record(tr, "d(x_n,x_n+1) <= psi^n(d(x_0,x_1))", false,
               "breached at n = " + std::to_string(n),
               Witness{{X.point(x), X.point(next)},
                       Inequality{"d(x_n,x_n+1)", step, "<=", "psi^n(d(x_0,x_1))", bound},
                       "orbit step exceeds the psi bound at n = " + std::to_string(n)});
        return tr;
      }
    }
    if (next == x) {
      if (psi) record(tr, "d(x_n,x_n+1) <= psi^n(d(x_0,x_1))", true, "holds along the orbit");
      finish_fixed_point(tr, f, x);
      return tr;
    }
    if (!visited.insert(next).second) {
      finish_cycle(tr, orbit, next, X);
      return tr;
    }
    x = next;
  }
  tr.outcome = Outcome::Diverged;
  return tr;
}

SolveTrace solve_inverse_iteration(const SelfMap& f, const Metric& metric, const AlphaFn& alpha,
                                   const ScalarFamily& psi, const Point& x0,
                                   std::optional<std::size_t> maxiter) {
  const DigitalImage& X = f.domain();
  require_lattice_metric(X, metric);
  SolveTrace tr = start("inverse", resolve_maxiter(X, maxiter));
  std::size_t x = X.require_index(x0);
  auto inv = invert(f);
  if (!record(tr, "T bijective", inv.has_value(),
              inv ? "T is a bijection" : "T is not one-to-one, so T^-1 does not exist")) {
    return tr;
  }
  if (!record(tr, "psi in Psi", psi_membership(psi, membership_grid(X, metric)))) return tr;
  std::size_t x1 = (*inv)(x);
  Rational a01 = alpha(x, x1);
  if (!record(tr, "alpha(x_0,T^-1(x_0)) >= 1", a01 >= 1, "alpha = " + to_string(a01),
              Witness{{X.point(x), X.point(x1)},
                      Inequality{"alpha(x_0,T^-1(x_0))", ExactValue(a01), ">=", "1",
                                 ExactValue(1)},
                      "alpha(x_0,T^-1(x_0)) < 1"})) {
    return tr;
  }
  if (!record(tr, "T^-1 alpha-admissible", is_alpha_admissible(*inv, alpha))) return tr;

  std::vector<std::size_t> orbit{x};
  std::set<std::size_t> visited{x};
  tr.orbit.push_back(x0);
  for (std::size_t n = 0; n < tr.maxiter; ++n) {
    std::size_t next = (*inv)(x);
    orbit.push_back(next);
    tr.orbit.push_back(X.point(next));
    tr.iterations = n + 1;
    ExactValue lhs = psi(distance(metric, X.point(f(x)), X.point(f(next))).value());
    ExactValue rhs = m_value(x, next, f, metric) * alpha(x, next);
    if (lhs < rhs) {
      record(tr, "generalised expansive inequality at (x_n,x_n+1)", false,
             "fails at n = " + std::to_string(n),
             Witness{{X.point(x), X.point(next)},
                     Inequality{"psi(d(T(x),T(y)))", lhs, ">=", "alpha(x,y)*M(x,y)", rhs},
                     "expansive inequality fails along the orbit"});
      return tr;
    }
    if (next == x) {
      record(tr, "generalised expansive inequality at (x_n,x_n+1)", true, "holds along the orbit");
      finish_fixed_point(tr, f, x);
      return tr;
    }
    if (!visited.insert(next).second) {
      finish_cycle(tr, orbit, next, X);
      return tr;
    }
    x = next;
  }
  tr.outcome = Outcome::Diverged;
  return tr;
}

SolveTrace solve_jungck(const SelfMap& s, const SelfMap& t, const Metric& metric,
                        const Rational& alpha, const Point& x0,
                        std::optional<std::size_t> maxiter) {
  if (!same_domain(s, t)) throw InvalidArgument("maps are defined on different domains");
  const DigitalImage& X = s.domain();
  require_lattice_metric(X, metric);
  SolveTrace tr = start("jungck", resolve_maxiter(X, maxiter));
  std::size_t x = X.require_index(x0);
  if (!record(tr, "0 < alpha < 1", alpha > 0 && alpha < 1, "alpha = " + to_string(alpha))) {
    return tr;
  }
  if (!record(tr, "S and T commute", commute(s, t))) return tr;
  if (!record(tr, "S(X) subset of T(X)", range_contained(s, t))) return tr;
  if (!record(tr, "d(S(x),S(y)) <= alpha d(T(x),T(y))",
              is_jungck_contraction(s, t, metric, alpha))) {
    return tr;
  }

  // preimage[v] = least index i with T(i) = v
  std::vector<std::optional<std::size_t>> preimage(X.size());
  for (std::size_t i = X.size(); i-- > 0;) preimage[t(i)] = i;

  std::vector<std::size_t> orbit{x};
  std::set<std::size_t> visited{x};
  tr.orbit.push_back(x0);
  tr.images.push_back(X.point(t(x)));
  for (std::size_t n = 1; n <= tr.maxiter; ++n) {
    std::size_t next = *preimage[s(x)];
    orbit.push_back(next);
    tr.orbit.push_back(X.point(next));
    tr.images.push_back(X.point(t(next)));
    tr.iterations = n;
    if (t(next) == t(x)) {
      std::size_t tp = t(next);
      if (s(tp) != t(tp)) throw std::logic_error("jungck: S(t) != T(t) after stabilization");
      std::size_t z = s(tp);
      if (s(z) != z || t(z) != z) throw std::logic_error("jungck: S(t) is not a common fixed point");
      auto common = common_fixed_points(s, t);
      record(tr, "unique common fixed point", common.size() == 1,
             std::to_string(common.size()) + " common fixed point(s) by exhaustion");
      if (common.size() != 1) throw std::logic_error("jungck: common fixed point is not unique");
      tr.outcome = Outcome::CommonFixedPoint;
      tr.point = X.point(z);
      return tr;
    }
    if (!visited.insert(next).second) {
      finish_cycle(tr, orbit, next, X);
      return tr;
    }
    x = next;
  }
  tr.outcome = Outcome::Diverged;
  return tr;
}

ClassificationReport fixed_point_uniqueness(const SelfMap& t, const AlphaFn& alpha) {
  const DigitalImage& X = t.domain();
  ClassificationReport r;
  r.class_name = "fixed-point-uniqueness";
  r.parameters.emplace_back("alpha", alpha.to_string());
  for (std::size_t u = 0; u < X.size(); ++u) {
    if (t(u) != u) continue;
    for (std::size_t v = 0; v < X.size(); ++v) {
      if (v == u || t(v) != v || alpha(u, v) < 1) continue;
      r.verdict = Verdict::Fails;
      r.witness = Witness{{X.point(u), X.point(v)}, std::nullopt,
                          "distinct fixed points with alpha(u,v) >= 1"};
      return r;
    }
  }
  return r;
}

SolveTrace solve_alpha_psi_phi(const SelfMap& t, const Metric& metric, const AlphaFn& alpha,
                               const ScalarFamily& psi, const ScalarFamily& phi, const Point& x0,
                               std::optional<std::size_t> maxiter) {
  const DigitalImage& X = t.domain();
  require_lattice_metric(X, metric);
  SolveTrace tr = start("alphapsiphi", resolve_maxiter(X, maxiter));
  std::size_t x = X.require_index(x0);
  auto grid = membership_grid(X, metric);
  bool psi_ok = record(tr, "psi in Phi", phi_membership(psi, grid));
  bool phi_ok = record(tr, "phi in Phi", phi_membership(phi, grid));
  if (!psi_ok || !phi_ok) return tr;
  if (!record(tr, "T alpha-admissible", is_alpha_admissible(t, alpha))) return tr;
  Rational a01 = alpha(x, t(x));
  if (!record(tr, "alpha(x_0,T(x_0)) >= 1", a01 >= 1, "alpha = " + to_string(a01),
              Witness{{X.point(x), X.point(t(x))},
                      Inequality{"alpha(x_0,T(x_0))", ExactValue(a01), ">=", "1", ExactValue(1)},
                      "alpha(x_0,T(x_0)) < 1"})) {
    return tr;
  }
  if (!record(tr, "alpha-psi-phi contractive inequality",
              is_alpha_psi_phi_contractive(t, metric, alpha, psi, phi))) {
    return tr;
  }

  std::vector<std::size_t> orbit{x};
  std::set<std::size_t> visited{x};
  tr.orbit.push_back(x0);
  std::optional<Distance> previous;
  for (std::size_t n = 0; n < tr.maxiter; ++n) {
    std::size_t next = t(x);
    orbit.push_back(next);
    tr.orbit.push_back(X.point(next));
    tr.iterations = n + 1;
    if (next == x) {
      record(tr, "strict decrease of d(x_n,x_n+1)", true, "holds along the orbit");
      finish_fixed_point(tr, t, x);
      auto unique = fixed_point_uniqueness(t, alpha);
      tr.checks.push_back({"uniqueness", unique.holds(),
                           unique.holds() ? "fixed points u, v with alpha(u,v) >= 1 coincide"
                                          : unique.witness->detail});
      return tr;
    }
    Distance step = distance(metric, X.point(x), X.point(next));
    if (previous && !(step < *previous)) {
      record(tr, "strict decrease of d(x_n,x_n+1)", false, "fails at n = " + std::to_string(n),
             Witness{{X.point(x), X.point(next)},
                     Inequality{"d(x_n,x_n+1)", step.value(), "<", "d(x_n-1,x_n)",
                                previous->value()},
                     "orbit distances do not decrease"});
      return tr;
    }
    previous = step;
    if (!visited.insert(next).second) {
      finish_cycle(tr, orbit, next, X);
      return tr;
    }
    x = next;
  }
  tr.outcome = Outcome::Diverged;
  return tr;
}

}  // namespace digifix
