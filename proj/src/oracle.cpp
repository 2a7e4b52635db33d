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


#include "digifix/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <random>
#include <set>

#include "digifix/error.hpp"
#include "digifix/solve.hpp"

namespace digifix {

std::uint64_t enumeration_budget() {
  const char* env = std::getenv("DIGIFIX_BUDGET");
  if (!env || !*env) return kDefaultBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) {
    throw InvalidArgument("DIGIFIX_BUDGET must be a positive integer, got '" + std::string(env) +
                          "'");
  }
  return v;
}

std::uint64_t self_map_count(std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / std::max<std::size_t>(n, 1)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= n;
  }
  return total;
}

void for_each_self_map(const ImagePtr& image, const std::function<bool(const SelfMap&)>& visit,
                       std::uint64_t budget) {
  const std::size_t n = image->size();
  std::uint64_t count = self_map_count(n);
  if (count > budget) {
    throw BudgetExceeded("enumerating " + std::to_string(n) + "^" + std::to_string(n) +
                         " self-maps exceeds the budget of " + std::to_string(budget));
  }
  std::vector<SelfMap::Index> table(n, 0);
  while (true) {
    if (!visit(SelfMap(image, table))) return;
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++table[k] < n) break;
      table[k] = 0;
      if (k == 0) return;
    }
  }
}

std::vector<SelfMap> enumerate_self_maps(const ImagePtr& image, std::uint64_t budget) {
  std::vector<SelfMap> maps;
  for_each_self_map(
      image,
      [&](const SelfMap& f) {
        maps.push_back(f);
        return true;
      },
      budget);
  return maps;
}

std::vector<NamedImage> corpus() {
  std::vector<NamedImage> out;
  out.push_back({"singleton", make_image(DigitalImage::interval(0, 0))});
  for (int k = 1; k <= 4; ++k) {
    out.push_back({"interval-0-" + std::to_string(k), make_image(DigitalImage::interval(0, k))});
  }
  out.push_back({"counter", make_image(DigitalImage(
                                5, 5, {{0, 0, 0, 0, 0}, {2, 0, 0, 0, 0}, {1, 1, 1, 1, 1}}))});
  out.push_back({"expansive-exl", make_image(DigitalImage(2, 2, {{0, 0}, {1, 0}, {1, 1}}))});
  out.push_back({"expansive-noncont", make_image(DigitalImage(2, 2, {{0, 0}, {1, 1}, {2, 0}}))});
  std::vector<Point> square{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  out.push_back({"square-c1", make_image(DigitalImage(2, 1, square))});
  out.push_back({"square-c2", make_image(DigitalImage(2, 2, square))});
  out.push_back({"disconnected-pair", make_image(DigitalImage(2, 2, {{0, 0}, {2, 0}}))});
  std::vector<Point> corner{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  out.push_back({"corner-c1", make_image(DigitalImage(3, 1, corner))});
  out.push_back({"corner-c3", make_image(DigitalImage(3, 3, corner))});
  return out;
}

std::optional<NamedImage> corpus_image(const std::string& name) {
  for (auto& entry : corpus()) {
    if (entry.name == name) return entry;
  }
  return std::nullopt;
}

NamedImage random_image(std::uint64_t seed, std::size_t size, int dimension, int u) {
  std::size_t capacity = 1;
  for (int i = 0; i < dimension; ++i) capacity *= 4;
  if (size == 0 || size > capacity) throw InvalidArgument("random_image: size out of range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(0, 3);
  std::set<Point> points;
  while (points.size() < size) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(dimension));
    for (auto& v : c) v = coord(rng);
    points.insert(Point(std::move(c)));
  }
  return {"random-" + std::to_string(seed),
          make_image(DigitalImage(dimension, u, {points.begin(), points.end()}))};
}

std::vector<Metric> suite_metrics() { return {Metric::lp(1), Metric::lp(2), Metric::linf()}; }

std::string to_string(SuiteVerdict v) {
  switch (v) {
    case SuiteVerdict::Confirmed:
      return "confirmed";
    case SuiteVerdict::Refuted:
      return "refuted";
    case SuiteVerdict::Inapplicable:
      return "inapplicable";
  }
  return {};
}

void merge(SuiteReport& a, const SuiteReport& b) {
  a.instances.insert(a.instances.end(), b.instances.begin(), b.instances.end());
  a.images += b.images;
  a.maps += b.maps;
  a.pairs += b.pairs;
  a.qualifying += b.qualifying;
  a.notes.insert(a.notes.end(), b.notes.begin(), b.notes.end());
  a.claims.insert(a.claims.end(), b.claims.begin(), b.claims.end());
  a.wall_ms += b.wall_ms;
  if (a.verdict == SuiteVerdict::Refuted) return;
  if (b.verdict == SuiteVerdict::Refuted) {
    a.verdict = SuiteVerdict::Refuted;
    a.witness = b.witness;
  } else if (b.verdict == SuiteVerdict::Confirmed) {
    a.verdict = SuiteVerdict::Confirmed;
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

SuiteReport begin(std::string suite, const NamedImage& image, const Metric& metric) {
  SuiteReport r;
  r.suite = std::move(suite);
  r.instances.push_back(image.name + "/" + metric.to_string());
  r.images = 1;
  return r;
}

void refute(SuiteReport& r, const NamedImage& image, const Metric& metric,
            std::vector<SelfMap> maps, std::string detail,
            std::vector<std::pair<std::string, std::string>> parameters = {}) {
  r.verdict = SuiteVerdict::Refuted;
  r.witness = SuiteWitness{image.name, image.image, metric, std::move(maps),
                           std::move(parameters), std::move(detail)};
}

void inapplicable(SuiteReport& r, std::string why) {
  r.verdict = SuiteVerdict::Inapplicable;
  r.notes.push_back(r.instances.front() + ": inapplicable, " + std::move(why));
}

// Integer r-th powers of all pairwise distances, row-major.
class PowerTable {
 public:
  PowerTable(const DigitalImage& X, const Metric& metric) : n_(X.size()), p_(n_ * n_, 0) {
    require_lattice_metric(X, metric);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const Rational& q = distance(metric, X.point(i), X.point(j)).power();
        p_[i * n_ + j] = static_cast<std::int64_t>(numerator(q));
      }
    }
  }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return p_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<std::int64_t> p_;
};

bool preserves_distances(const SelfMap& f, const PowerTable& P) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (P(f(i), f(j)) != P(i, j)) return false;
    }
  }
  return true;
}

// Max over distinct pairs of P(s)/P(t), absent if some pair has P(t) = 0 < P(s).
std::optional<Rational> ratio_power(const SelfMap& s, const SelfMap& t, const PowerTable& P) {
  Rational best = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      std::int64_t ps = P(s(i), s(j));
      std::int64_t pt = P(t(i), t(j));
      if (ps == 0) continue;
      if (pt == 0) return std::nullopt;
      Rational q(ps, pt);
      if (q > best) best = q;
    }
  }
  return best;
}

// A rational alpha in (0,1) with alpha^r >= power, given power < 1.
Rational alpha_above(const Rational& power, unsigned r) {
  Rational c = rational_between(ExactValue::root(power, r), Rational(1));
  return c == 0 ? Rational(1, 2) : c;
}

}  // namespace

SuiteReport verify_compat_equivalence(const NamedImage& image, const Metric& metric) {
  auto t0 = Clock::now();
  SuiteReport r = begin("compat-equivalence", image, metric);
  require_lattice_metric(*image.image, metric);
  auto maps = enumerate_self_maps(image.image);
  r.maps = maps.size();
  for (const auto& s : maps) {
    for (const auto& t : maps) {
      ++r.pairs;
      auto flags = compatibility_class(s, t, metric);
      if (flags.coincidence_count > 0) ++r.qualifying;
      bool weak = is_weakly_compatible(s, t).holds();
      if (flags.agree() && flags.compatible == weak) continue;
      refute(r, image, metric, {s, t},
             "compatible=" + std::to_string(flags.compatible) +
                 " typeA=" + std::to_string(flags.type_a) +
                 " typeP=" + std::to_string(flags.type_p) + " weak=" + std::to_string(weak));
      r.wall_ms = elapsed_ms(t0);
      return r;
    }
  }
  r.wall_ms = elapsed_ms(t0);
  return r;
}

SuiteReport verify_expansive_isometry(const NamedImage& image, const Metric& metric) {
  auto t0 = Clock::now();
  SuiteReport r = begin("expansive-isometry", image, metric);
  PowerTable P(*image.image, metric);
  for_each_self_map(image.image, [&](const SelfMap& f) {
    ++r.maps;
    if (!f.is_surjective()) return true;
    if (!is_expansive(f, metric, Rational(1)).holds()) return true;
    ++r.qualifying;
    if (preserves_distances(f, P)) return true;
    refute(r, image, metric, {f}, "expansive with k = 1 but some distance is not preserved");
    return false;
  });
  r.wall_ms = elapsed_ms(t0);
  return r;
}

SuiteReport verify_wusdc_structure(const NamedImage& image, const Metric& metric) {
  auto t0 = Clock::now();
  SuiteReport r = begin("wusdc-structure", image, metric);
  require_lattice_metric(*image.image, metric);
  if (image.image->size() < 2) {
    inapplicable(r, "needs more than one point");
    return r;
  }
  for_each_self_map(image.image, [&](const SelfMap& f) {
    ++r.maps;
    if (!is_wusdc(f, metric).holds()) return true;
    ++r.qualifying;
    auto cf = contraction_factor(f, metric);
    std::string problem;
    if (!cf.is_contraction()) problem = "contraction factor " + cf.value().to_string() + " >= 1";
    else if (f.is_injective()) problem = "WUSDC map is one-to-one";
    else if (f.is_surjective()) problem = "WUSDC map is onto";
    if (problem.empty()) return true;
    refute(r, image, metric, {f}, problem);
    return false;
  });
  r.wall_ms = elapsed_ms(t0);
  return r;
}

SuiteReport verify_contraction_phi_equiv(const NamedImage& image, const Metric& metric) {
  auto t0 = Clock::now();
  SuiteReport r = begin("contraction-phi-equivalence", image, metric);
  require_lattice_metric(*image.image, metric);
  const auto grid = default_grid();
  const auto half = ScalarFamily::linear(Rational(1, 2), FamilyRole::Phi);
  for_each_self_map(image.image, [&](const SelfMap& f) {
    ++r.maps;
    auto cf = contraction_factor(f, metric);
    bool left = cf.is_contraction();
    // For linear phi the strict inequality is scale invariant, so phi = t/2
    // decides whether some certified linear phi works.
    bool right = is_phi_contractive(f, metric, half).holds();
    if (left) {
      ++r.qualifying;
      Rational c = alpha_above(cf.power, cf.root);
      auto phi = ScalarFamily::linear(c, FamilyRole::Phi);
      if (phi_membership(phi, grid).verdict != MembershipVerdict::Certified ||
          !is_phi_contractive(f, metric, phi).holds()) {
        refute(r, image, metric, {f}, "contraction is not phi-contractive for phi(t) = ct",
               {{"c", to_string(c)}});
        return false;
      }
    }
    if (left == right) return true;
    refute(r, image, metric, {f},
           left ? "contraction but not phi-contractive" : "phi-contractive but not a contraction");
    return false;
  });
  r.wall_ms = elapsed_ms(t0);
  return r;
}

std::optional<ConstancyScenario> parse_scenario(std::string_view text) {
  if (text.size() != 1) return std::nullopt;
  switch (text[0]) {
    case 'a': return ConstancyScenario::A;
    case 'b': return ConstancyScenario::B;
    case 'c': return ConstancyScenario::C;
    case 'd': return ConstancyScenario::D;
    case 'e': return ConstancyScenario::E;
    default: return std::nullopt;
  }
}

std::string to_string(ConstancyScenario s) {
  return std::string(1, static_cast<char>('a' + static_cast<int>(s)));
}

namespace {

// Scenario (a): T (c_u,c_u)-continuous, X c_u-connected, and
// d(Sx,Sy) <= alpha d(Tx,Ty) for some 0 < alpha < u^(-1/p). Then S is constant.
void constancy_a(SuiteReport& r, const NamedImage& image, const Metric& metric,
                 const PowerTable& P, const std::vector<SelfMap>& maps) {
  const DigitalImage& X = *image.image;
  if (!is_connected(X)) return inapplicable(r, "image is not c_u-connected");
  const std::int64_t u = metric.kind == MetricKind::Lp ? X.u() : 1;
  for (const auto& t : maps) {
    if (!is_digitally_continuous(t, X.u()).holds) continue;
    for (const auto& s : maps) {
      ++r.pairs;
      bool ok = true;
      for (std::size_t i = 0; i < X.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < X.size() && ok; ++j) {
          std::int64_t ps = P(s(i), s(j));
          ok = ps == 0 || u * ps < P(t(i), t(j));
        }
      }
      if (!ok) continue;
      ++r.qualifying;
      if (s.is_constant()) continue;
      return refute(r, image, metric, {s, t}, "S satisfies the hypotheses but is not constant");
    }
  }
}

// Scenario (b): on a c_1-connected interval, x != y implies d(Sx,Sy) < d(Tx,Ty).
// Then T is a bijection and S is neither one-to-one nor onto; if T is
// c_1-continuous, S is constant.
void constancy_b(SuiteReport& r, const NamedImage& image, const Metric& metric,
                 const PowerTable& P, const std::vector<SelfMap>& maps) {
  const DigitalImage& X = *image.image;
  if (X.dimension() != 1) return inapplicable(r, "needs a 1-dimensional image");
  if (!is_connected(X.with_u(1))) return inapplicable(r, "image is not c_1-connected");
  for (const auto& t : maps) {
    bool continuous = is_digitally_continuous(t, 1).holds;
    for (const auto& s : maps) {
      ++r.pairs;
      bool ok = true;
      for (std::size_t i = 0; i < X.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < X.size() && ok; ++j) ok = P(s(i), s(j)) < P(t(i), t(j));
      }
      if (!ok) continue;
      ++r.qualifying;
      if (X.size() > 1 && (!t.is_injective() || s.is_injective() || s.is_surjective())) {
        return refute(r, image, metric, {s, t},
                      "strict inequality holds but T is not a bijection or S is one-to-one/onto");
      }
      if (continuous && !s.is_constant()) {
        return refute(r, image, metric, {s, t}, "T is c_1-continuous but S is not constant");
      }
    }
  }
}

// Scenario (c): T a phi-contraction with phi(t) < 1 on every distance.
void constancy_c(SuiteReport& r, const NamedImage& image, const Metric& metric,
                 const PowerTable& P, const std::vector<SelfMap>& maps,
                 const ConstancyOptions& options) {
  const DigitalImage& X = *image.image;
  ExactValue diam = diameter(X, metric).value.value();
  Rational c(1, 2);
  if (options.phi_coefficient) {
    c = *options.phi_coefficient;
    if (c <= 0 || c >= 1) return inapplicable(r, "phi(t) = ct is not in Phi");
    if (!(diam * c < ExactValue(1))) return inapplicable(r, "phi(diam X) >= 1");
  } else {
    while (!(diam * c < ExactValue(1))) c /= 2;
  }
  r.notes.push_back(r.instances.front() + ": phi(t) = " + to_string(c) + " t");
  const unsigned root = metric.root_index();
  const Rational cp = pow(c, root);
  for (const auto& t : maps) {
    bool ok = true;
    for (std::size_t i = 0; i < X.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < X.size() && ok; ++j) {
        ok = Rational(P(t(i), t(j))) <= cp * P(i, j);
      }
    }
    if (!ok) continue;
    ++r.qualifying;
    if (t.is_constant()) continue;
    return refute(r, image, metric, {t}, "phi-contraction with phi < 1 is not constant",
                  {{"phi", "linear(" + to_string(c) + ")"}});
  }
}

// Scenario (d): for some alpha > 0, 1 <= d(x,y) < u^(1/p) + alpha implies
// d(Tx,Ty) < 1, with X c_u-connected. On a finite image the weakest such
// premise (alpha below the next realized distance) covers exactly the pairs
// with d(x,y) <= u^(1/p). With u = 1 every WUSDC map must also be constant.
void constancy_d(SuiteReport& r, const NamedImage& image, const Metric& metric,
                 const PowerTable& P, const std::vector<SelfMap>& maps) {
  const DigitalImage& X = *image.image;
  if (!is_connected(X)) return inapplicable(r, "image is not c_u-connected");
  const std::int64_t bound = metric.kind == MetricKind::Lp ? X.u() : 1;
  for (const auto& t : maps) {
    bool ok = true;
    for (std::size_t i = 0; i < X.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < X.size() && ok; ++j) {
        ok = P(i, j) > bound || P(t(i), t(j)) == 0;
      }
    }
    if (ok) {
      ++r.qualifying;
      if (!t.is_constant()) {
        return refute(r, image, metric, {t}, "premise holds but T is not constant");
      }
    }
    if (X.u() == 1 && is_wusdc(t, metric).holds() && !t.is_constant()) {
      return refute(r, image, metric, {t}, "WUSDC on a c_1-connected image but not constant");
    }
  }
}

// Scenario (e): d(Tx,Ty) <= psi(d(x,y)) with psi(t) = ct in Psi, X c_1-connected.
// Any admissible psi has psi(t) < t, so on a finite image such a psi exists
// iff the contraction factor is below 1, and then a rational c works.
void constancy_e(SuiteReport& r, const NamedImage& image, const Metric& metric,
                 const std::vector<SelfMap>& maps) {
  const DigitalImage& X = *image.image;
  if (!is_connected(X.with_u(1))) return inapplicable(r, "image is not c_1-connected");
  const auto grid = default_grid();
  for (const auto& t : maps) {
    auto cf = contraction_factor(t, metric);
    if (!cf.is_contraction()) continue;
    Rational c = alpha_above(cf.power, cf.root);
    auto psi = ScalarFamily::linear(c, FamilyRole::Psi);
    if (psi_membership(psi, grid).verdict != MembershipVerdict::Certified ||
        !is_phi_contraction(t, metric, psi).holds()) {
      return refute(r, image, metric, {t}, "no certified linear psi for a contraction",
                    {{"psi", psi.to_string()}});
    }
    ++r.qualifying;
    if (t.is_constant()) continue;
    return refute(r, image, metric, {t}, "psi-contraction on a c_1-connected image not constant",
                  {{"psi", psi.to_string()}});
  }
}

}  // namespace

SuiteReport verify_constancy(const NamedImage& image, const Metric& metric,
                             ConstancyScenario scenario, const ConstancyOptions& options) {
  auto t0 = Clock::now();
  SuiteReport r = begin("constancy-" + to_string(scenario), image, metric);
  PowerTable P(*image.image, metric);
  auto maps = enumerate_self_maps(image.image);
  r.maps = maps.size();
  switch (scenario) {
    case ConstancyScenario::A: constancy_a(r, image, metric, P, maps); break;
    case ConstancyScenario::B: constancy_b(r, image, metric, P, maps); break;
    case ConstancyScenario::C: constancy_c(r, image, metric, P, maps, options); break;
    case ConstancyScenario::D: constancy_d(r, image, metric, P, maps); break;
    case ConstancyScenario::E: constancy_e(r, image, metric, maps); break;
  }
  r.wall_ms = elapsed_ms(t0);
  return r;
}

SuiteReport verify_solver_soundness(const NamedImage& image, const Metric& metric,
                                    unsigned max_power) {
  auto t0 = Clock::now();
  SuiteReport r = begin("solver-soundness", image, metric);
  const DigitalImage& X = *image.image;
  PowerTable P(X, metric);
  auto maps = enumerate_self_maps(image.image);
  r.maps = maps.size();

  auto finish = [&] {
    r.wall_ms = elapsed_ms(t0);
    return r;
  };

  for (const auto& f : maps) {
    auto fixed = fixed_points(f);
    bool contraction = contraction_factor(f, metric).is_contraction();
    for (std::size_t x0 = 0; x0 < X.size(); ++x0) {
      auto tr = solve_picard(f, metric, X.point(x0));
      if (tr.outcome == Outcome::FixedPoint) {
        if (std::find(fixed.begin(), fixed.end(), *tr.point) == fixed.end()) {
          refute(r, image, metric, {f}, "picard returned a point that is not fixed",
                 {{"x0", X.point(x0).to_string()}});
          return finish();
        }
      } else if (contraction) {
        refute(r, image, metric, {f}, "picard did not stabilize on a digital contraction",
               {{"x0", X.point(x0).to_string()}});
        return finish();
      }
    }
  }

  for (const auto& s : maps) {
    for (const auto& t : maps) {
      if (!commute(s, t).holds() || !range_contained(s, t).holds()) continue;
      SelfMap sk = s;
      for (unsigned k = 1; k <= max_power; ++k) {
        if (k > 1) sk = compose(s, sk);
        ++r.pairs;
        auto ratio = ratio_power(sk, t, P);
        if (!ratio || *ratio >= 1) continue;
        ++r.qualifying;
        Rational alpha = alpha_above(*ratio, metric.root_index());
        auto common = common_fixed_points(s, t);
        for (std::size_t x0 = 0; x0 < X.size(); ++x0) {
          auto tr = solve_jungck(sk, t, metric, alpha, X.point(x0));
          bool ok = tr.outcome == Outcome::CommonFixedPoint && common.size() == 1 &&
                    common.front() == *tr.point;
          if (ok) continue;
          refute(r, image, metric, {s, t},
                 tr.outcome == Outcome::CommonFixedPoint
                     ? "jungck result differs from the brute-force common fixed point of (S, T)"
                     : "jungck failed on a hypothesis-satisfying pair: " + tr.violated,
                 {{"k", std::to_string(k)},
                  {"alpha", to_string(alpha)},
                  {"x0", X.point(x0).to_string()}});
          return finish();
        }
      }
    }
  }
  return finish();
}

std::optional<SuiteId> parse_suite(std::string_view text) {
  if (text == "compat-equivalence") return SuiteId::CompatEquivalence;
  if (text == "expansive-isometry") return SuiteId::ExpansiveIsometry;
  if (text == "wusdc-structure") return SuiteId::WusdcStructure;
  if (text == "contraction-phi-equivalence") return SuiteId::ContractionPhiEquivalence;
  if (text == "constancy") return SuiteId::Constancy;
  if (text == "solver-soundness") return SuiteId::SolverSoundness;
  return std::nullopt;
}

std::string to_string(SuiteId s) {
  switch (s) {
    case SuiteId::CompatEquivalence: return "compat-equivalence";
    case SuiteId::ExpansiveIsometry: return "expansive-isometry";
    case SuiteId::WusdcStructure: return "wusdc-structure";
    case SuiteId::ContractionPhiEquivalence: return "contraction-phi-equivalence";
    case SuiteId::Constancy: return "constancy";
    case SuiteId::SolverSoundness: return "solver-soundness";
  }
  return {};
}

SuiteReport run_suite(SuiteId id, const std::vector<NamedImage>& images,
                      const std::vector<Metric>& metrics, std::size_t max_size,
                      std::optional<ConstancyScenario> scenario) {
  if (id == SuiteId::Constancy && !scenario) {
    throw InvalidArgument("the constancy suite needs a scenario (a-e)");
  }
  SuiteReport total;
  total.suite = to_string(id);
  if (id == SuiteId::Constancy) total.suite += "-" + to_string(*scenario);
  total.verdict = SuiteVerdict::Inapplicable;
  for (const auto& image : images) {
    if (image.image->size() > max_size) continue;
    for (const auto& metric : metrics) {
      SuiteReport part;
      switch (id) {
        case SuiteId::CompatEquivalence: part = verify_compat_equivalence(image, metric); break;
        case SuiteId::ExpansiveIsometry: part = verify_expansive_isometry(image, metric); break;
        case SuiteId::WusdcStructure: part = verify_wusdc_structure(image, metric); break;
        case SuiteId::ContractionPhiEquivalence:
          part = verify_contraction_phi_equiv(image, metric);
          break;
        case SuiteId::Constancy: part = verify_constancy(image, metric, *scenario); break;
        case SuiteId::SolverSoundness: part = verify_solver_soundness(image, metric); break;
      }
      merge(total, part);
      if (total.verdict == SuiteVerdict::Refuted) return total;
    }
  }
  return total;
}

}  // namespace digifix
