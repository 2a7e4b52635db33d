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


#pragma once

#include "digifix/json_io.hpp"

namespace digifix::api {

/// A JSON response and whether it counts as a success (holds, confirmed,
/// fixed point found). Malformed requests throw InvalidArgument.
struct Result {
  Json body;
  bool ok = true;
};

/// {"class", "map", optional "image", "second", "metric", "k", "alpha",
///  "psi", "phi", "scope", "u"}
Result classify(const Json& request);
/// {"scheme": picard|inverse|jungck|alphapsiphi, "image", "map", optional
///  "s", "metric", "x0", "maxiter", "alpha", "psi", "phi"}
Result solve(const Json& request);
/// {"suite", optional "image", "metric", "max_size", "scenario", "timing"}
Result verify(const Json& request);
/// {"case" or "all": true, optional "window": [lo, hi]}
Result gallery(const Json& request);
/// {"size" or "image", optional "count_only"}
Result enumerate(const Json& request);
/// {"n", "epsilon"}
Result demo_reciprocal(const Json& request);
/// {"metric", "p", "q"}
Result distance(const Json& request);

/// Names accepted by classify's "class" field.
std::vector<std::string> class_names();

}  // namespace digifix::api
