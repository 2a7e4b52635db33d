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

#include <cstdint>
#include <string>
#include <vector>

#include "digifix/oracle.hpp"

namespace digifix {

struct GalleryOptions {
  /// Window for the integer-line cases; the erratum case uses [-3,3] unless overridden.
  std::optional<std::pair<std::int64_t, std::int64_t>> window;
};

/// counter, dalal, expansive-rotation, expansive-noncont, sridevi-312,
/// ranijyo-338, weakly-compatible-vacuous, reciprocal-cauchy
std::vector<std::string> gallery_cases();

/// Runs every claim of a worked example through its classifier or solver and
/// compares against the expected verdict. Throws InvalidArgument on an unknown id.
SuiteReport gallery_run(const std::string& case_id, const GalleryOptions& options = {});

}  // namespace digifix
