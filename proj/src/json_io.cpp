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


#include "digifix/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "digifix/error.hpp"

namespace digifix {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string(what) + ": missing field '" + key + "'");
  }
  return j.at(key);
}

std::int64_t int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidArgument(std::string(what) + ": expected an integer");
  return j.get<std::int64_t>();
}

Json big_to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return n.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return numerator(parse_rational(j.get<std::string>()));
  throw InvalidArgument("expected an integer");
}

Json pairs_json(const std::vector<std::pair<std::string, std::string>>& kv) {
  Json j = Json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

Json points_json(const std::vector<Point>& pts) {
  Json j = Json::array();
  for (const auto& p : pts) j.push_back(to_json(p));
  return j;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_object()) {
    BigInt num = big_from_json(field(j, "num", "rational"));
    BigInt den = j.contains("den") ? big_from_json(j.at("den")) : BigInt(1);
    if (den == 0) throw InvalidArgument("rational: zero denominator");
    return Rational(num, den);
  }
  throw InvalidArgument("rational: expected {num,den}, an integer or \"a/b\"");
}

Point point_from_json(const Json& j) {
  if (j.is_number_integer()) return Point{j.get<std::int64_t>()};
  if (!j.is_array() || j.empty()) throw InvalidArgument("point: expected a nonempty integer array");
  std::vector<std::int64_t> coords;
  for (const auto& c : j) coords.push_back(int_from_json(c, "point"));
  return Point(std::move(coords));
}

ImagePtr image_from_json(const Json& j) {
  if (j.is_object() && j.contains("interval")) {
    const auto& w = j.at("interval");
    if (!w.is_array() || w.size() != 2) throw InvalidArgument("image: interval must be [lo,hi]");
    return make_image(DigitalImage::interval(int_from_json(w[0], "image"), int_from_json(w[1], "image")));
  }
  int dim = static_cast<int>(int_from_json(field(j, "dimension", "image"), "image dimension"));
  int u = static_cast<int>(int_from_json(field(j, "u", "image"), "image u"));
  const auto& pts = field(j, "points", "image");
  if (!pts.is_array()) throw InvalidArgument("image: points must be an array");
  std::vector<Point> points;
  for (const auto& p : pts) points.push_back(point_from_json(p));
  return make_image(DigitalImage(dim, u, std::move(points)));
}

Metric metric_from_json(const Json& j) {
  if (j.is_string()) return Metric::parse(j.get<std::string>());
  const auto& kind = field(j, "kind", "metric");
  if (!kind.is_string()) throw InvalidArgument("metric: kind must be a string");
  std::string k = kind.get<std::string>();
  if (k == "lp") {
    auto p = int_from_json(field(j, "p", "metric"), "metric p");
    if (p < 1) throw InvalidArgument("metric: p must be a positive integer");
    return Metric::lp(static_cast<unsigned>(p));
  }
  if (k == "linf") return Metric::linf();
  if (k == "reciprocal") return Metric::reciprocal();
  throw InvalidArgument("metric: unknown kind '" + k + "'");
}

ScalarFamily family_from_json(const Json& j, FamilyRole default_role) {
  FamilyRole role = default_role;
  if (j.is_object() && j.contains("role")) {
    std::string r = j.at("role").get<std::string>();
    if (r == "psi") {
      role = FamilyRole::Psi;
    } else if (r == "phi") {
      role = FamilyRole::Phi;
    } else {
      throw InvalidArgument("family: role must be psi or phi");
    }
  }
  std::string kind = field(j, "kind", "family").get<std::string>();
  if (kind == "linear") return ScalarFamily::linear(rational_from_json(field(j, "c", "family")), role);
  if (kind == "const" || kind == "constant") {
    return ScalarFamily::constant(rational_from_json(field(j, "c", "family")), role);
  }
  if (kind == "table") {
    std::vector<std::pair<Rational, Rational>> samples;
    for (const auto& s : field(j, "samples", "family")) {
      if (!s.is_array() || s.size() != 2) throw InvalidArgument("family: samples are [t, value]");
      samples.emplace_back(rational_from_json(s[0]), rational_from_json(s[1]));
    }
    return ScalarFamily::table(std::move(samples), role);
  }
  throw InvalidArgument("family: unknown kind '" + kind + "'");
}

AlphaFn alpha_from_json(const Json& j, const ImagePtr& domain) {
  std::string kind = field(j, "kind", "alpha").get<std::string>();
  if (kind == "const" || kind == "constant") {
    return AlphaFn::constant(rational_from_json(field(j, "value", "alpha")));
  }
  if (kind == "table") {
    if (!domain) throw InvalidArgument("alpha: a table needs an image");
    std::vector<std::tuple<Point, Point, Rational>> entries;
    for (const auto& e : field(j, "entries", "alpha")) {
      if (!e.is_array() || e.size() != 3) throw InvalidArgument("alpha: entries are [p, q, value]");
      entries.emplace_back(point_from_json(e[0]), point_from_json(e[1]), rational_from_json(e[2]));
    }
    return AlphaFn::table(domain, entries);
  }
  throw InvalidArgument("alpha: unknown kind '" + kind + "'");
}

AnyMap map_from_json(const Json& j, const ImagePtr& domain) {
  std::string kind = field(j, "kind", "map").get<std::string>();
  if (kind == "table") return self_map_from_json(j, domain);
  const auto& w = field(j, "window", "map");
  if (!w.is_array() || w.size() != 2) throw InvalidArgument("map: window must be [lo,hi]");
  std::int64_t lo = int_from_json(w[0], "map window");
  std::int64_t hi = int_from_json(w[1], "map window");
  if (kind == "affine") {
    return WindowMap::affine(int_from_json(field(j, "a", "map"), "map a"),
                             int_from_json(field(j, "b", "map"), "map b"), lo, hi);
  }
  if (kind == "window") {
    std::vector<std::int64_t> values;
    for (const auto& v : field(j, "values", "map")) values.push_back(int_from_json(v, "map values"));
    return WindowMap(lo, hi, std::move(values));
  }
  throw InvalidArgument("map: unknown kind '" + kind + "'");
}

SelfMap self_map_from_json(const Json& j, const ImagePtr& domain) {
  std::string kind = field(j, "kind", "map").get<std::string>();
  if (kind != "table") throw InvalidArgument("map: expected a table map, got '" + kind + "'");
  if (!domain) throw InvalidArgument("map: a table map needs an image");
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& pq : field(j, "pairs", "map")) {
    if (!pq.is_array() || pq.size() != 2) throw InvalidArgument("map: pairs are [p, q]");
    pairs.emplace_back(point_from_json(pq[0]), point_from_json(pq[1]));
  }
  return SelfMap::from_pairs(domain, pairs);
}

Json to_json(const Rational& q) {
  return Json{{"num", big_to_json(numerator(q))}, {"den", big_to_json(denominator(q))}};
}

Json to_json(const Point& p) {
  Json j = Json::array();
  for (auto c : p.coords()) j.push_back(c);
  return j;
}

Json to_json(const ExactValue& v) {
  Json j = Json::object();
  if (auto q = v.as_rational()) {
    j["exact"] = to_json(*q);
  } else if (auto pw = v.single_term_power()) {
    j["p"] = v.root_index();
    j["pth_power"] = to_json(*pw);
  }
  j["text"] = v.to_string();
  j["approx"] = v.to_double();
  return j;
}

Json to_json(const Distance& d) {
  Json j = Json::object();
  j["p"] = d.metric().root_index();
  j["pth_power"] = to_json(d.power());
  j["text"] = d.to_string();
  j["approx"] = d.value().to_double();
  return j;
}

Json to_json(const Metric& m) {
  switch (m.kind) {
    case MetricKind::Lp:
      return Json{{"kind", "lp"}, {"p", m.p}};
    case MetricKind::LInfinity:
      return Json{{"kind", "linf"}};
    case MetricKind::Reciprocal:
      return Json{{"kind", "reciprocal"}};
  }
  return Json();
}

Json to_json(const DigitalImage& image) {
  return Json{{"dimension", image.dimension()}, {"u", image.u()}, {"points", points_json(image.points())}};
}

Json to_json(const SelfMap& f) {
  Json pairs = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    pairs.push_back(Json::array({to_json(f.domain().point(i)), to_json(f.domain().point(f(i)))}));
  }
  return Json{{"kind", "table"}, {"pairs", pairs}};
}

Json to_json(const WindowMap& f) {
  if (auto a = f.affine_form()) {
    return Json{{"kind", "affine"}, {"a", a->first}, {"b", a->second}, {"window", {f.lo(), f.hi()}}};
  }
  Json values = Json::array();
  for (auto x = f.lo(); x <= f.hi(); ++x) values.push_back(f(x));
  return Json{{"kind", "window"}, {"window", {f.lo(), f.hi()}}, {"values", values}};
}

Json to_json(const Witness& w) {
  Json j = Json::object();
  j["points"] = points_json(w.points);
  if (w.inequality) {
    const auto& in = *w.inequality;
    j["inequality"] = Json{{"lhs_label", in.lhs_label}, {"lhs", to_json(in.lhs)},
                           {"relation", in.relation}, {"rhs_label", in.rhs_label},
                           {"rhs", to_json(in.rhs)},  {"text", in.to_string()}};
  }
  j["detail"] = w.detail;
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j = Json::object();
  j["class"] = r.class_name;
  j["verdict"] = to_string(r.verdict);
  j["witness"] = r.witness ? to_json(*r.witness) : Json();
  j["parameters"] = pairs_json(r.parameters);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const MembershipReport& r) {
  Json j = Json::object();
  j["verdict"] = to_string(r.verdict);
  j["witness_t"] = r.witness ? to_json(*r.witness) : Json();
  j["reason"] = r.reason;
  return j;
}

Json to_json(const MapValidation& v) {
  Json j = Json::object();
  j["valid"] = v.valid;
  j["missing"] = points_json(v.missing);
  j["outside"] = points_json(v.outside);
  j["duplicated"] = points_json(v.duplicated);
  j["unknown"] = points_json(v.unknown);
  if (v.closed_subwindow) j["closed_subwindow"] = {v.closed_subwindow->first, v.closed_subwindow->second};
  j["message"] = v.message;
  return j;
}

Json to_json(const CompatibilityFlags& f) {
  return Json{{"compatible", f.compatible},
              {"type_a", f.type_a},
              {"type_p", f.type_p},
              {"agree", f.agree()},
              {"coincidence_count", f.coincidence_count}};
}

Json to_json(const ContractionFactor& c) {
  Json j = Json::object();
  j["alpha_star"] = to_json(c.value());
  j["p"] = c.root;
  j["pth_power"] = to_json(c.power);
  j["is_contraction"] = c.is_contraction();
  j["argmax"] = c.argmax ? Json::array({to_json(c.argmax->first), to_json(c.argmax->second)}) : Json();
  return j;
}

Json to_json(const SolveTrace& t) {
  Json j = Json::object();
  j["scheme"] = t.scheme;
  j["orbit"] = points_json(t.orbit);
  if (!t.images.empty()) j["images"] = points_json(t.images);
  Json outcome = Json::object();
  outcome["kind"] = to_string(t.outcome);
  if (t.point) outcome["point"] = to_json(*t.point);
  if (!t.cycle.empty()) outcome["cycle"] = points_json(t.cycle);
  if (!t.violated.empty()) outcome["check"] = t.violated;
  if (t.witness) outcome["witness"] = to_json(*t.witness);
  j["outcome"] = outcome;
  Json checks = Json::array();
  for (const auto& c : t.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = checks;
  j["iterations"] = t.iterations;
  j["maxiter"] = t.maxiter;
  return j;
}

Json to_json(const ReciprocalDemoReport& r) {
  Json j = Json::object();
  j["n"] = r.n;
  j["epsilon"] = to_json(r.epsilon);
  j["analytic_n0"] = r.analytic_n0;
  j["analytic_window_verified"] = r.analytic_window_verified;
  j["least_prefix_n0"] = r.least_prefix_n0;
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    cands.push_back(Json{{"limit", c.limit},
                         {"tail_distance", to_json(c.tail_distance)},
                         {"bound", to_json(c.bound)}});
  }
  j["candidates"] = cands;
  j["no_limit_in_prefix"] = r.no_limit_in_prefix;
  return j;
}

Json to_json(const BoundsCheckReport& r) {
  Json j = Json::object();
  j["passed"] = r.passed;
  j["violated"] = r.violated;
  j["witness"] = r.witness ? Json::array({to_json(r.witness->first), to_json(r.witness->second)}) : Json();
  j["pairs_checked"] = r.pairs_checked;
  return j;
}

Json to_json(const SuiteReport& r, bool timing) {
  Json j = Json::object();
  j["suite"] = r.suite;
  j["verdict"] = to_string(r.verdict);
  j["counts"] = Json{{"images", r.images}, {"maps", r.maps}, {"pairs", r.pairs}, {"qualifying", r.qualifying}};
  j["instances"] = r.instances;
  if (r.witness) {
    const auto& w = *r.witness;
    Json wj = Json::object();
    wj["image_name"] = w.image_name;
    wj["image"] = w.image ? to_json(*w.image) : Json();
    wj["metric"] = w.metric ? to_json(*w.metric) : Json();
    Json maps = Json::array();
    for (const auto& m : w.maps) maps.push_back(to_json(m));
    wj["maps"] = maps;
    wj["parameters"] = pairs_json(w.parameters);
    wj["detail"] = w.detail;
    j["witness"] = wj;
  } else {
    j["witness"] = Json();
  }
  if (!r.claims.empty()) {
    Json claims = Json::array();
    for (const auto& c : r.claims) {
      Json cj = Json::object();
      cj["id"] = c.id;
      cj["claim"] = c.claim;
      cj["expected"] = c.expected;
      cj["actual"] = c.actual;
      cj["passed"] = c.passed;
      cj["witness"] = c.witness ? to_json(*c.witness) : Json();
      cj["parameters"] = pairs_json(c.parameters);
      cj["notes"] = c.notes;
      claims.push_back(cj);
    }
    j["claims"] = claims;
  }
  j["notes"] = r.notes;
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

}  // namespace digifix
