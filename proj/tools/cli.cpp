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


#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "digifix/api.hpp"
#include "digifix/error.hpp"
#include "digifix/gallery.hpp"

namespace digifix::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// A file path holding JSON, or an inline value passed through as a string.
Json file_or_value(const std::string& text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) {
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidArgument("malformed inline JSON: " + std::string(e.what()));
    }
  }
  if (std::filesystem::is_regular_file(text)) return read_json_file(text);
  return text;
}

Json point_arg(const std::string& text) {
  if (!text.empty() && text.front() == '[') return Json::parse(text);
  Json p = Json::array();
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      p.push_back(v);
    } catch (const std::exception&) {
      throw InvalidArgument("malformed point '" + text + "'");
    }
  }
  if (p.empty()) throw InvalidArgument("malformed point '" + text + "'");
  return p;
}

Json window_arg(const std::string& text) {
  auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw InvalidArgument("window must be lo:hi, got '" + text + "'");
  try {
    return Json::array({std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))});
  } catch (const std::exception&) {
    throw InvalidArgument("window must be lo:hi, got '" + text + "'");
  }
}

std::string witness_text(const Json& w) {
  if (w.is_null()) return {};
  std::string s;
  for (const auto& p : w.at("points")) s += (s.empty() ? "" : " ") + p.dump();
  if (w.contains("inequality")) s += (s.empty() ? "" : ": ") + w.at("inequality").at("text").get<std::string>();
  std::string detail = w.value("detail", "");
  if (!detail.empty()) s += (s.empty() ? "" : " (") + detail + (s.empty() ? "" : ")");
  return s;
}

void render_suite(const Json& r, std::ostream& out) {
  out << r.at("suite").get<std::string>() << ": " << r.at("verdict").get<std::string>() << "\n";
  if (r.contains("reports")) {
    for (const auto& sub : r.at("reports")) render_suite(sub, out);
    return;
  }
  if (r.contains("counts")) {
    const auto& c = r.at("counts");
    out << "  images " << c.at("images") << ", maps " << c.at("maps") << ", pairs " << c.at("pairs")
        << ", qualifying " << c.at("qualifying") << "\n";
  }
  if (r.contains("claims")) {
    for (const auto& c : r.at("claims")) {
      out << "  [" << (c.at("passed").get<bool>() ? "pass" : "FAIL") << "] " << c.at("id").get<std::string>()
          << ": " << c.at("actual").get<std::string>() << " (expected " << c.at("expected").get<std::string>()
          << ")\n";
      std::string w = witness_text(c.at("witness"));
      if (!w.empty()) out << "         witness " << w << "\n";
    }
  }
  if (r.contains("witness") && !r.at("witness").is_null()) {
    out << "  witness: " << r.at("witness").at("detail").get<std::string>() << "\n";
  }
  if (r.contains("wall_ms")) out << "  wall " << r.at("wall_ms").get<double>() << " ms\n";
}

void render_trace(const Json& t, std::ostream& out) {
  const auto& o = t.at("outcome");
  out << t.at("scheme").get<std::string>() << ": " << o.at("kind").get<std::string>();
  if (o.contains("point")) out << " " << o.at("point").dump();
  if (o.contains("check")) out << " (" << o.at("check").get<std::string>() << ")";
  out << "\n  orbit";
  for (const auto& p : t.at("orbit")) out << " " << p.dump();
  out << "\n";
  if (o.contains("cycle")) {
    out << "  cycle";
    for (const auto& p : o.at("cycle")) out << " " << p.dump();
    out << "\n";
  }
  for (const auto& c : t.at("checks")) {
    out << "  [" << (c.at("passed").get<bool>() ? "ok" : "violated") << "] " << c.at("name").get<std::string>();
    std::string d = c.value("detail", "");
    if (!d.empty()) out << ": " << d;
    out << "\n";
  }
}

void render(const Json& body, std::ostream& out) {
  if (body.contains("suite")) return render_suite(body, out);
  if (body.contains("scheme")) return render_trace(body, out);
  if (body.contains("class") && body.contains("verdict") && body.at("verdict").is_string()) {
    out << body.at("class").get<std::string>() << ": " << body.at("verdict").get<std::string>() << "\n";
    if (body.contains("alpha_star")) out << "  alpha* = " << body.at("alpha_star").at("text").get<std::string>() << "\n";
    if (body.contains("witness")) {
      std::string w = witness_text(body.at("witness"));
      if (!w.empty()) out << "  witness " << w << "\n";
    }
    std::string reason = body.value("reason", "");
    if (!reason.empty()) out << "  " << reason << "\n";
    std::string notes = body.value("notes", "");
    if (!notes.empty()) out << "  " << notes << "\n";
    return;
  }
  out << body.dump(2) << "\n";
}

// CLI11 reads "-20:20" as a flag; glue such values to their option.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if ((a == "--window" || a == "--x0") && i + 1 < args.size() && args[i + 1].size() > 1 &&
        args[i + 1][0] == '-' && std::isdigit(static_cast<unsigned char>(args[i + 1][1]))) {
      out.push_back(a + "=" + args[++i]);
    } else {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"digifix: digital metric spaces, map classes and fixed-point checks", "digifix"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON");

  // classify
  auto* classify = app.add_subcommand("classify", "Decide membership of a map or pair in a class");
  std::string c_class, c_image, c_map, c_second, c_metric = "lp:2", c_k, c_alpha, c_psi, c_phi, c_scope;
  std::optional<int> c_u;
  classify->add_option("--class", c_class, "Class name")->required()->check(CLI::IsMember(api::class_names()));
  classify->add_option("--image", c_image, "Image JSON file");
  classify->add_option("--map", c_map, "Map JSON file (not needed for psi-/phi-membership)");
  classify->add_option("--second", c_second, "Second map of a pair (T)");
  classify->add_option("--metric", c_metric, "lp:<p>, linf or reciprocal");
  classify->add_option("--k", c_k, "Expansion constant");
  classify->add_option("--alpha", c_alpha, "alpha as a rational, or a JSON file");
  classify->add_option("--psi", c_psi, "psi as kind:value (linear:1/2), or a JSON file");
  classify->add_option("--phi", c_phi, "phi as kind:value (const:-1), or a JSON file");
  classify->add_option("--scope", c_scope, "all-pairs or distinct-pairs")
      ->check(CLI::IsMember({"all-pairs", "distinct-pairs"}));
  classify->add_option("--u", c_u, "Adjacency parameter for continuity");
  classify->add_flag("--json", json, "Emit JSON");

  // solve
  auto* solve = app.add_subcommand("solve", "Run a fixed-point iteration");
  std::string s_scheme, s_image, s_map, s_s, s_metric = "lp:2", s_x0, s_alpha, s_psi, s_phi;
  std::optional<std::int64_t> s_maxiter;
  solve->add_option("--scheme", s_scheme, "picard, inverse, jungck or alphapsiphi")
      ->required()
      ->check(CLI::IsMember({"picard", "inverse", "jungck", "alphapsiphi"}));
  solve->add_option("--image", s_image, "Image JSON file")->required();
  solve->add_option("--map", s_map, "Map JSON file (T)")->required();
  solve->add_option("--s", s_s, "S for the jungck scheme");
  solve->add_option("--metric", s_metric, "lp:<p> or linf");
  solve->add_option("--x0", s_x0, "Start point, e.g. 0,1");
  solve->add_option("--maxiter", s_maxiter, "Iteration bound");
  solve->add_option("--alpha", s_alpha, "alpha");
  solve->add_option("--psi", s_psi, "psi");
  solve->add_option("--phi", s_phi, "phi");
  solve->add_flag("--json", json, "Emit JSON");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a theorem verification suite");
  std::string v_suite, v_image, v_metric, v_scenario;
  std::optional<std::size_t> v_max;
  bool v_timing = false;
  verify->add_option("--suite", v_suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"compat-equivalence", "expansive-isometry", "wusdc-structure",
                             "contraction-phi-equivalence", "constancy", "solver-soundness"}));
  verify->add_option("--image", v_image, "Image JSON file (default: corpus)");
  verify->add_option("--metric", v_metric, "Single metric (default: lp:1, lp:2, linf)");
  verify->add_option("--max-size", v_max, "Largest image size");
  verify->add_option("--scenario", v_scenario, "Constancy scenario a-e or all");
  verify->add_flag("--timing", v_timing, "Include wall time");
  verify->add_flag("--json", json, "Emit JSON");

  // gallery
  auto* gallery = app.add_subcommand("gallery", "Reproduce a worked example");
  std::string g_case, g_window;
  bool g_all = false, g_list = false;
  gallery->add_option("--case", g_case, "Case id")->check(CLI::IsMember(gallery_cases()));
  gallery->add_option("--window", g_window, "Window lo:hi for integer-line cases");
  gallery->add_flag("--all", g_all, "Run every case");
  gallery->add_flag("--list", g_list, "List case ids");
  gallery->add_flag("--json", json, "Emit JSON");

  // enum
  auto* enumerate = app.add_subcommand("enum", "Enumerate all self-maps of a small image");
  std::optional<std::int64_t> e_size;
  std::string e_image;
  bool e_count = false;
  enumerate->add_option("--size", e_size, "Interval [0,size-1]");
  enumerate->add_option("--image", e_image, "Image JSON file");
  enumerate->add_flag("--count-only", e_count, "Only print the count");
  enumerate->add_flag("--json", json, "Emit JSON");

  // demo
  auto* demo = app.add_subcommand("demo", "Demonstrations");
  std::string d_which;
  std::int64_t d_n = 100;
  std::string d_eps = "1/10";
  demo->add_option("which", d_which, "reciprocal")->required()->check(CLI::IsMember({"reciprocal"}));
  demo->add_option("--n", d_n, "Prefix length N");
  demo->add_option("--epsilon", d_eps, "epsilon as a rational");
  demo->add_flag("--json", json, "Emit JSON");

  std::vector<std::string> args = glue_negative_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Json req = Json::object();
    api::Result result;
    if (*classify) {
      req["class"] = c_class;
      if (!c_image.empty()) req["image"] = read_json_file(c_image);
      if (!c_map.empty()) req["map"] = read_json_file(c_map);
      if (!c_second.empty()) req["second"] = read_json_file(c_second);
      req["metric"] = c_metric;
      if (!c_k.empty()) req["k"] = c_k;
      if (!c_alpha.empty()) req["alpha"] = file_or_value(c_alpha);
      if (!c_psi.empty()) req["psi"] = file_or_value(c_psi);
      if (!c_phi.empty()) req["phi"] = file_or_value(c_phi);
      if (!c_scope.empty()) req["scope"] = c_scope;
      if (c_u) req["u"] = *c_u;
      result = api::classify(req);
    } else if (*solve) {
      req["scheme"] = s_scheme;
      req["image"] = read_json_file(s_image);
      req["map"] = read_json_file(s_map);
      if (!s_s.empty()) req["s"] = read_json_file(s_s);
      req["metric"] = s_metric;
      if (!s_x0.empty()) req["x0"] = point_arg(s_x0);
      if (s_maxiter) req["maxiter"] = *s_maxiter;
      if (!s_alpha.empty()) req["alpha"] = file_or_value(s_alpha);
      if (!s_psi.empty()) req["psi"] = file_or_value(s_psi);
      if (!s_phi.empty()) req["phi"] = file_or_value(s_phi);
      result = api::solve(req);
    } else if (*verify) {
      req["suite"] = v_suite;
      if (!v_image.empty()) {
        req["image"] = read_json_file(v_image);
        req["image_name"] = std::filesystem::path(v_image).stem().string();
      }
      if (!v_metric.empty()) req["metric"] = v_metric;
      if (v_max) req["max_size"] = *v_max;
      if (!v_scenario.empty()) req["scenario"] = v_scenario;
      req["timing"] = v_timing;
      result = api::verify(req);
    } else if (*gallery) {
      if (g_list) {
        for (const auto& c : gallery_cases()) out << c << "\n";
        return kOk;
      }
      if (g_all == !g_case.empty()) {
        err << "error: gallery needs exactly one of --case or --all\n";
        return kUsage;
      }
      if (g_all) req["all"] = true;
      if (!g_case.empty()) req["case"] = g_case;
      if (!g_window.empty()) req["window"] = window_arg(g_window);
      result = api::gallery(req);
    } else if (*enumerate) {
      if (e_size.has_value() == !e_image.empty()) {
        err << "error: enum needs exactly one of --size or --image\n";
        return kUsage;
      }
      if (e_size) req["size"] = *e_size;
      if (!e_image.empty()) req["image"] = read_json_file(e_image);
      req["count_only"] = e_count;
      result = api::enumerate(req);
      if (!json) {
        out << result.body.at("count") << "\n";
        if (!e_count) {
          for (const auto& t : result.body.at("tables")) out << t.dump() << "\n";
        }
        return kOk;
      }
    } else if (*demo) {
      req["n"] = d_n;
      req["epsilon"] = d_eps;
      result = api::demo_reciprocal(req);
      if (!json) {
        const auto& b = result.body;
        out << "reciprocal metric, N = " << b.at("n") << ", epsilon = " << d_eps << "\n"
            << "  Cauchy window n0 = " << b.at("analytic_n0") << " ("
            << (b.at("analytic_window_verified").get<bool>() ? "verified" : "NOT verified") << " on the prefix)\n"
            << "  least n0 valid on the prefix = " << b.at("least_prefix_n0") << "\n"
            << "  no candidate limit in 1..N: " << (b.at("no_limit_in_prefix").get<bool>() ? "yes" : "no") << "\n";
        return result.ok ? kOk : kFailed;
      }
    }
    if (json) {
      out << result.body.dump(2) << "\n";
    } else {
      render(result.body, out);
    }
    return result.ok ? kOk : kFailed;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace digifix::cli
