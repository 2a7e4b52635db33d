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

#include <string>
#include <variant>

#include <json.hpp>

#include "digifix/classify.hpp"
#include "digifix/core.hpp"
#include "digifix/maps.hpp"
#include "digifix/oracle.hpp"
#include "digifix/solve.hpp"

namespace digifix {

using Json = nlohmann::ordered_json;

/// Reads a whole file and parses it. Throws InvalidArgument on I/O or syntax errors.
Json read_json_file(const std::string& path);

Rational rational_from_json(const Json& j);  // {"num","den"}, integer, or "a/b"
Point point_from_json(const Json& j);        // [ints] or a bare integer
ImagePtr image_from_json(const Json& j);
Metric metric_from_json(const Json& j);      // object or "lp:2" style string
ScalarFamily family_from_json(const Json& j, FamilyRole default_role);
AlphaFn alpha_from_json(const Json& j, const ImagePtr& domain);

using AnyMap = std::variant<SelfMap, WindowMap>;
/// Table maps need a domain; affine and window maps do not.
AnyMap map_from_json(const Json& j, const ImagePtr& domain);
/// Table maps only.
SelfMap self_map_from_json(const Json& j, const ImagePtr& domain);

Json to_json(const Rational& q);
Json to_json(const Point& p);
Json to_json(const ExactValue& v);
Json to_json(const Distance& d);
Json to_json(const Metric& m);
Json to_json(const DigitalImage& image);
Json to_json(const SelfMap& f);
Json to_json(const WindowMap& f);
Json to_json(const Witness& w);
Json to_json(const ClassificationReport& r);
Json to_json(const MembershipReport& r);
Json to_json(const MapValidation& v);
Json to_json(const CompatibilityFlags& f);
Json to_json(const ContractionFactor& c);
Json to_json(const SolveTrace& t);
Json to_json(const ReciprocalDemoReport& r);
Json to_json(const BoundsCheckReport& r);
/// Wall time is only included when timing is set, so reports stay byte-stable.
Json to_json(const SuiteReport& r, bool timing = false);

}  // namespace digifix
