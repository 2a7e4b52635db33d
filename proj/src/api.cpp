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


#include "digifix/api.hpp"

#include <chrono>

#include "digifix/error.hpp"
#include "digifix/gallery.hpp"

namespace digifix::api {

namespace {

const Json& need(const Json& req, const char* key) {
  if (!req.is_object() || !req.contains(key) || req.at(key).is_null()) {
    throw InvalidArgument(std::string("request: missing '") + key + "'");
  }
  return req.at(key);
}

std::string get_string(const Json& req, const char* key, std::string fallback) {
  if (!req.contains(key) || req.at(key).is_null()) return fallback;
  if (!req.at(key).is_string()) throw InvalidArgument(std::string("request: '") + key + "' must be a string");
  return req.at(key).get<std::string>();
}

ImagePtr optional_image(const Json& req) {
  if (!req.contains("image") || req.at("image").is_null()) return nullptr;
  return image_from_json(req.at("image"));
}

Metric metric_of(const Json& req) {
  if (!req.contains("metric") || req.at("metric").is_null()) return Metric::lp(2);
  return metric_from_json(req.at("metric"));
}

// "linear:1/2", "const:-1" or a family object.
ScalarFamily family_of(const Json& j, FamilyRole role) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto colon = s.find(':');
    if (colon == std::string::npos) throw InvalidArgument("family: expected kind:value, got '" + s + "'");
    Json obj{{"kind", s.substr(0, colon)}, {"c", s.substr(colon + 1)}};
    return family_from_json(obj, role);
  }
  return family_from_json(j, role);
}

ScalarFamily need_family(const Json& req, const char* key, FamilyRole role) {
  return family_of(need(req, key), role);
}

AlphaFn alpha_of(const Json& req, const ImagePtr& image) {
  if (!req.contains("alpha") || req.at("alpha").is_null()) return AlphaFn::constant(Rational(1));
  const Json& a = req.at("alpha");
  if (a.is_object() && a.contains("kind")) return alpha_from_json(a, image);
  return AlphaFn::constant(rational_from_json(a));
}

Rational rational_of(const Json& req, const char* key, Rational fallback) {
  if (!req.contains(key) || req.at(key).is_null()) return fallback;
  return rational_from_json(req.at(key));
}

std::optional<std::size_t> maxiter_of(const Json& req) {
  if (!req.contains("maxiter") || req.at("maxiter").is_null()) return std::nullopt;
  auto m = req.at("maxiter").get<std::int64_t>();
  if (m < 1) throw InvalidArgument("maxiter must be at least 1");
  return static_cast<std::size_t>(m);
}

Result from_report(const ClassificationReport& r) { return {to_json(r), r.holds()}; }

const SelfMap& table_map(const AnyMap& m, const std::string& cls) {
  if (auto* f = std::get_if<SelfMap>(&m)) return *f;
  throw InvalidArgument("class '" + cls + "' needs a table map on a finite image");
}

Json points_list(const std::vector<Point>& pts) {
  Json j = Json::array();
  for (const auto& p : pts) j.push_back(to_json(p));
  return j;
}

Json ints_list(const std::vector<std::int64_t>& xs) {
  Json j = Json::array();
  for (auto x : xs) j.push_back(x);
  return j;
}

Result classify_pair(const std::string& cls, const AnyMap& first, const AnyMap& second,
                     const Json& req) {
  if (first.index() != second.index()) throw InvalidArgument("both maps must be table maps or both window maps");
  if (auto* s = std::get_if<SelfMap>(&first)) {
    const SelfMap& t = std::get<SelfMap>(second);
    if (!same_domain(*s, t)) throw InvalidArgument("the two maps have different domains");
    if (cls == "weakly-compatible") return from_report(is_weakly_compatible(*s, t));
    if (cls == "commute") return from_report(commute(*s, t));
    if (cls == "range-contained") return from_report(range_contained(*s, t));
    if (cls == "jungck") {
      return from_report(is_jungck_contraction(*s, t, metric_of(req), rational_of(req, "alpha", Rational(1, 2))));
    }
    if (cls == "coincidence") {
      return {Json{{"class", "coincidence-points"}, {"points", points_list(coincidence_points(*s, t))}}, true};
    }
    if (cls == "compatibility") {
      auto flags = compatibility_class(*s, t, metric_of(req));
      Json j{{"class", "compatibility"}};
      j.update(to_json(flags));
      return {j, flags.compatible && flags.type_a && flags.type_p};
    }
  } else {
    const WindowMap& a = std::get<WindowMap>(first);
    const WindowMap& b = std::get<WindowMap>(second);
    if (cls == "weakly-compatible") {
      try {
        return from_report(is_weakly_compatible(a, b));
      } catch (const WindowEscape& e) {
        ClassificationReport r;
        r.class_name = "weakly-compatible";
        r.verdict = Verdict::Fails;
        r.witness = Witness{{}, std::nullopt, e.what()};
        r.notes = "window " + a.label();
        return from_report(r);
      }
    }
    if (cls == "commute") return from_report(commute(a, b));
    if (cls == "range-contained") return from_report(range_contained(a, b));
    if (cls == "jungck") return from_report(is_jungck_contraction(a, b, rational_of(req, "alpha", Rational(1, 2))));
    if (cls == "coincidence") {
      return {Json{{"class", "coincidence-points"}, {"points", ints_list(coincidence_points(a, b))},
                   {"notes", "verified on window " + a.label()}},
              true};
    }
  }
  throw InvalidArgument("class '" + cls + "' is not defined for this kind of map pair");
}

Result validate(const Json& req) {
  const Json& m = need(req, "map");
  if (get_string(m, "kind", "table") == "table") {
    ImagePtr image = optional_image(req);
    if (!image) throw InvalidArgument("validate: a table map needs an image");
    std::vector<std::pair<Point, Point>> pairs;
    for (const auto& pq : need(m, "pairs")) {
      if (!pq.is_array() || pq.size() != 2) throw InvalidArgument("map: pairs are [p, q]");
      pairs.emplace_back(point_from_json(pq[0]), point_from_json(pq[1]));
    }
    auto v = validate_map(*image, pairs);
    return {to_json(v), v.valid};
  }
  auto v = validate_map(std::get<WindowMap>(map_from_json(m, nullptr)));
  return {to_json(v), v.valid};
}

std::vector<Rational> grid_of(const Json& req) {
  ImagePtr image = optional_image(req);
  return image ? membership_grid(*image, metric_of(req)) : default_grid();
}

}  // namespace

std::vector<std::string> class_names() {
  return {"continuous",        "contraction",       "phi-contraction", "phi-contractive",
          "expansive",         "gen-expansive",     "alpha-psi-phi",   "alpha-admissible",
          "wusdc",             "weakly-compatible", "compatibility",   "commute",
          "range-contained",   "jungck",            "coincidence",     "fixed-points",
          "validate",          "psi-membership",    "phi-membership",  "lattice-bounds"};
}

Result classify(const Json& req) {
  std::string cls = get_string(req, "class", "");
  if (cls.empty()) throw InvalidArgument("request: missing 'class'");
  if (cls == "validate") return validate(req);
  if (cls == "psi-membership" || cls == "phi-membership") {
    bool psi = cls == "psi-membership";
    auto fam = need_family(req, psi ? "psi" : "phi", psi ? FamilyRole::Psi : FamilyRole::Phi);
    auto grid = grid_of(req);
    auto rep = psi ? psi_membership(fam, grid) : phi_membership(fam, grid);
    Json j{{"class", cls}, {"family", fam.to_string()}};
    j.update(to_json(rep));
    return {j, rep.admissible()};
  }
  ImagePtr image = optional_image(req);
  if (cls == "lattice-bounds") {
    if (!image) throw InvalidArgument("lattice-bounds needs an image");
    auto rep = lp_lattice_bounds_check(*image, metric_of(req));
    Json j{{"class", cls}};
    j.update(to_json(rep));
    return {j, rep.passed};
  }
  AnyMap first = map_from_json(need(req, "map"), image);
  if (req.contains("second") && !req.at("second").is_null()) {
    return classify_pair(cls, first, map_from_json(req.at("second"), image), req);
  }
  if (cls == "continuous") {
    if (auto* w = std::get_if<WindowMap>(&first)) return from_report(is_continuous(*w));
    const SelfMap& f = std::get<SelfMap>(first);
    int u = req.contains("u") ? req.at("u").get<int>() : f.domain().u();
    return from_report(is_continuous(f, u));
  }
  if (cls == "fixed-points") {
    if (auto* w = std::get_if<WindowMap>(&first)) {
      return {Json{{"class", cls}, {"points", ints_list(fixed_points(*w))}, {"notes", "verified on window " + w->label()}},
              true};
    }
    return {Json{{"class", cls}, {"points", points_list(fixed_points(std::get<SelfMap>(first)))}}, true};
  }
  const SelfMap& f = table_map(first, cls);
  const Metric metric = metric_of(req);
  if (cls == "contraction") {
    auto cf = contraction_factor(f, metric);
    Json j{{"class", "contraction"}, {"verdict", cf.is_contraction() ? "holds" : "fails"}};
    j.update(to_json(cf));
    return {j, cf.is_contraction()};
  }
  if (cls == "phi-contraction") return from_report(is_phi_contraction(f, metric, need_family(req, "phi", FamilyRole::Phi)));
  if (cls == "phi-contractive") return from_report(is_phi_contractive(f, metric, need_family(req, "phi", FamilyRole::Phi)));
  if (cls == "expansive") return from_report(is_expansive(f, metric, rational_of(req, "k", Rational(1))));
  if (cls == "gen-expansive") {
    std::string scope = get_string(req, "scope", "all-pairs");
    if (scope != "all-pairs" && scope != "distinct-pairs") {
      throw InvalidArgument("scope must be all-pairs or distinct-pairs");
    }
    return from_report(is_gen_alpha_psi_expansive(
        f, metric, alpha_of(req, f.domain_ptr()), need_family(req, "psi", FamilyRole::Psi),
        scope == "all-pairs" ? PairScope::AllPairs : PairScope::DistinctPairs));
  }
  if (cls == "alpha-psi-phi") {
    return from_report(is_alpha_psi_phi_contractive(f, metric, alpha_of(req, f.domain_ptr()),
                                                    need_family(req, "psi", FamilyRole::Phi),
                                                    need_family(req, "phi", FamilyRole::Phi)));
  }
  if (cls == "alpha-admissible") return from_report(is_alpha_admissible(f, alpha_of(req, f.domain_ptr())));
  if (cls == "wusdc") return from_report(is_wusdc(f, metric));
  throw InvalidArgument("unknown or incomplete class '" + cls + "'");
}

Result solve(const Json& req) {
  std::string scheme = get_string(req, "scheme", "");
  ImagePtr image = optional_image(req);
  if (!image) throw InvalidArgument("solve needs an image");
  SelfMap t = self_map_from_json(need(req, "map"), image);
  const Metric metric = metric_of(req);
  Point x0 = req.contains("x0") ? point_from_json(req.at("x0")) : image->point(0);
  auto maxiter = maxiter_of(req);
  SolveTrace trace;
  if (scheme == "picard") {
    std::optional<ScalarFamily> psi;
    if (req.contains("psi") && !req.at("psi").is_null()) psi = family_of(req.at("psi"), FamilyRole::Psi);
    trace = solve_picard(t, metric, x0, maxiter, psi);
  } else if (scheme == "inverse") {
    trace = solve_inverse_iteration(t, metric, alpha_of(req, image), need_family(req, "psi", FamilyRole::Psi),
                                    x0, maxiter);
  } else if (scheme == "jungck") {
    SelfMap s = self_map_from_json(need(req, "s"), image);
    trace = solve_jungck(s, t, metric, rational_of(req, "alpha", Rational(1, 2)), x0, maxiter);
  } else if (scheme == "alphapsiphi") {
    trace = solve_alpha_psi_phi(t, metric, alpha_of(req, image), need_family(req, "psi", FamilyRole::Phi),
                                need_family(req, "phi", FamilyRole::Phi), x0, maxiter);
  } else {
    throw InvalidArgument("unknown scheme '" + scheme + "' (picard, inverse, jungck, alphapsiphi)");
  }
  bool ok = trace.outcome == Outcome::FixedPoint || trace.outcome == Outcome::CommonFixedPoint;
  return {to_json(trace), ok};
}

Result verify(const Json& req) {
  auto id = parse_suite(get_string(req, "suite", ""));
  if (!id) throw InvalidArgument("unknown suite '" + get_string(req, "suite", "") + "'");
  std::vector<NamedImage> images;
  if (ImagePtr image = optional_image(req)) {
    images.push_back({get_string(req, "image_name", "input"), image});
  } else {
    images = corpus();
  }
  std::vector<Metric> metrics = suite_metrics();
  if (req.contains("metric") && !req.at("metric").is_null()) metrics = {metric_from_json(req.at("metric"))};
  std::size_t max_size = req.contains("max_size") ? req.at("max_size").get<std::size_t>() : 4;
  bool timing = req.value("timing", false);

  std::vector<std::optional<ConstancyScenario>> scenarios{std::nullopt};
  if (*id == SuiteId::Constancy) {
    std::string sc = get_string(req, "scenario", "all");
    if (sc == "all") {
      scenarios = {ConstancyScenario::A, ConstancyScenario::B, ConstancyScenario::C, ConstancyScenario::D,
                   ConstancyScenario::E};
    } else if (auto s = parse_scenario(sc)) {
      scenarios = {*s};
    } else {
      throw InvalidArgument("unknown scenario '" + sc + "' (a-e or all)");
    }
  }
  Json reports = Json::array();
  bool ok = true;
  for (const auto& sc : scenarios) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport r = run_suite(*id, images, metrics, max_size, sc);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    ok = ok && r.ok();
    reports.push_back(to_json(r, timing));
  }
  if (reports.size() == 1) return {reports[0], ok};
  return {Json{{"suite", to_string(*id)}, {"verdict", ok ? "confirmed" : "refuted"}, {"reports", reports}}, ok};
}

Result gallery(const Json& req) {
  GalleryOptions options;
  if (req.contains("window") && !req.at("window").is_null()) {
    const auto& w = req.at("window");
    if (!w.is_array() || w.size() != 2) throw InvalidArgument("window must be [lo, hi]");
    options.window = std::make_pair(w[0].get<std::int64_t>(), w[1].get<std::int64_t>());
  }
  if (req.value("all", false)) {
    Json reports = Json::array();
    bool ok = true;
    for (const auto& c : gallery_cases()) {
      auto r = gallery_run(c, options);
      ok = ok && r.verdict == SuiteVerdict::Confirmed;
      reports.push_back(to_json(r));
    }
    return {Json{{"suite", "gallery"}, {"verdict", ok ? "confirmed" : "refuted"}, {"reports", reports}}, ok};
  }
  auto r = gallery_run(get_string(req, "case", ""), options);
  return {to_json(r), r.verdict == SuiteVerdict::Confirmed};
}

Result enumerate(const Json& req) {
  ImagePtr image = optional_image(req);
  if (!image) {
    auto n = need(req, "size").get<std::int64_t>();
    if (n < 1) throw InvalidArgument("size must be at least 1");
    image = make_image(DigitalImage::interval(0, n - 1));
  }
  const std::uint64_t budget = enumeration_budget();
  const std::uint64_t count = self_map_count(image->size());
  if (count > budget) {
    throw BudgetExceeded(std::to_string(image->size()) + "^" + std::to_string(image->size()) +
                         " maps exceed the enumeration budget of " + std::to_string(budget));
  }
  Json j{{"size", image->size()}, {"count", count}};
  if (!req.value("count_only", false)) {
    Json maps = Json::array();
    for_each_self_map(image, [&](const SelfMap& f) {
      Json row = Json::array();
      for (auto v : f.table()) row.push_back(v);
      maps.push_back(row);
      return true;
    }, budget);
    j["points"] = points_list(image->points());
    j["tables"] = maps;
  }
  return {j, true};
}

Result demo_reciprocal(const Json& req) {
  auto n = need(req, "n").get<std::int64_t>();
  auto rep = reciprocal_metric_demo(n, rational_from_json(need(req, "epsilon")));
  return {to_json(rep), rep.analytic_window_verified && rep.no_limit_in_prefix};
}

Result distance(const Json& req) {
  const Metric metric = metric_of(req);
  Point p = point_from_json(need(req, "p"));
  Point q = point_from_json(need(req, "q"));
  return {to_json(digifix::distance(metric, p, q)), true};
}

}  // namespace digifix::api
