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


#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "digifix/api.hpp"
#include "digifix/error.hpp"
#include "digifix/gallery.hpp"

namespace py = pybind11;

namespace {

// JSON text in, (ok, JSON text) out; the Python layer converts to dicts.
template <digifix::api::Result (*F)(const digifix::Json&)>
std::pair<bool, std::string> call(const std::string& request) {
  digifix::Json req;
  try {
    req = digifix::Json::parse(request);
  } catch (const nlohmann::json::parse_error& e) {
    throw digifix::InvalidArgument(std::string("malformed request: ") + e.what());
  }
  digifix::api::Result r;
  {
    py::gil_scoped_release release;
    r = F(req);
  }
  return {r.ok, r.body.dump()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "digifix native core";

  py::register_exception<digifix::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<digifix::WindowEscape>(m, "WindowEscape", PyExc_RuntimeError);

  m.def("classify", &call<digifix::api::classify>, py::arg("request"));
  m.def("solve", &call<digifix::api::solve>, py::arg("request"));
  m.def("verify", &call<digifix::api::verify>, py::arg("request"));
  m.def("gallery", &call<digifix::api::gallery>, py::arg("request"));
  m.def("enumerate", &call<digifix::api::enumerate>, py::arg("request"));
  m.def("demo_reciprocal", &call<digifix::api::demo_reciprocal>, py::arg("request"));
  m.def("distance", &call<digifix::api::distance>, py::arg("request"));

  m.def("cu_adjacent",
        [](const std::vector<std::int64_t>& p, const std::vector<std::int64_t>& q, int u) {
          return digifix::cu_adjacent(digifix::Point(p), digifix::Point(q), u);
        },
        py::arg("p"), py::arg("q"), py::arg("u"));
  m.def("adjacency_degree", &digifix::adjacency_degree, py::arg("u"), py::arg("n"));
  m.def("gallery_cases", &digifix::gallery_cases);
  m.def("class_names", &digifix::api::class_names);

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = digifix::cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
