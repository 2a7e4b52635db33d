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
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digifix/classify.hpp"
#include "digifix/core.hpp"
#include "digifix/maps.hpp"

namespace digifix {

constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// The DIGIFIX_BUDGET environment variable, or kDefaultBudget.
std::uint64_t enumeration_budget();

/// |X|^|X|, saturating at UINT64_MAX.
std::uint64_t self_map_count(std::size_t n);

/// Calls visit on every total self-map in lexicographic table order; stops
/// early when visit returns false. Throws BudgetExceeded if |X|^|X| > budget.
void for_each_self_map(const ImagePtr& image, const std::function<bool(const SelfMap&)>& visit,
                       std::uint64_t budget = enumeration_budget());
std::vector<SelfMap> enumerate_self_maps(const ImagePtr& image,
                                         std::uint64_t budget = enumeration_budget());

struct NamedImage {
  std::string name;
  ImagePtr image;
};

/// Fixed image corpus: digital intervals [0,k], the three 3-point images of
/// the worked examples, a 2x2 square, a disconnected pair and a 3-D corner.
std::vector<NamedImage> corpus();
std::optional<NamedImage> corpus_image(const std::string& name);
/// A random image of the given size in Z^dimension within [0,3]^dimension.
NamedImage random_image(std::uint64_t seed, std::size_t size, int dimension, int u);

std::vector<Metric> suite_metrics();  // lp:1, lp:2, linf

enum class SuiteVerdict { Confirmed, Refuted, Inapplicable };
std::string to_string(SuiteVerdict v);

/// A reproducible counterexample: image, metric, maps and parameters.
struct SuiteWitness {
  std::string image_name;
  ImagePtr image;
  std::optional<Metric> metric;
  std::vector<SelfMap> maps;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string detail;
};

/// One gallery claim and the outcome of the call that checks it.
struct ClaimResult {
  std::string id;
  std::string claim;
  std::string expected;
  std::string actual;
  bool passed = false;
  std::optional<Witness> witness;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string notes;
};

struct SuiteReport {
  std::string suite;
  std::vector<std::string> instances;  // "image/metric" labels in run order
  std::uint64_t images = 0;
  std::uint64_t maps = 0;
  std::uint64_t pairs = 0;
  std::uint64_t qualifying = 0;  // instances meeting the statement's hypotheses
  SuiteVerdict verdict = SuiteVerdict::Confirmed;
  std::optional<SuiteWitness> witness;
  std::vector<std::string> notes;
  std::vector<ClaimResult> claims;
  double wall_ms = 0;

  bool ok() const { return verdict != SuiteVerdict::Refuted; }
};

/// Folds b into a: counts add, the first refutation wins, Inapplicable only
/// survives if every part was inapplicable.
void merge(SuiteReport& a, const SuiteReport& b);

SuiteReport verify_compat_equivalence(const NamedImage& image, const Metric& metric);
SuiteReport verify_expansive_isometry(const NamedImage& image, const Metric& metric);
SuiteReport verify_wusdc_structure(const NamedImage& image, const Metric& metric);
SuiteReport verify_contraction_phi_equiv(const NamedImage& image, const Metric& metric);

enum class ConstancyScenario { A, B, C, D, E };
std::optional<ConstancyScenario> parse_scenario(std::string_view text);
std::string to_string(ConstancyScenario s);

struct ConstancyOptions {
  /// Scenario (c): phi = Linear(c). Default: 1/2 halved until c * diam < 1.
  std::optional<Rational> phi_coefficient;
};

SuiteReport verify_constancy(const NamedImage& image, const Metric& metric,
                             ConstancyScenario scenario, const ConstancyOptions& options = {});

/// Picard fixed points re-check, Jungck result against the brute-force
/// common fixed point, and the S^k corollary.
SuiteReport verify_solver_soundness(const NamedImage& image, const Metric& metric,
                                    unsigned max_power = 3);

enum class SuiteId {
  CompatEquivalence,
  ExpansiveIsometry,
  WusdcStructure,
  ContractionPhiEquivalence,
  Constancy,
  SolverSoundness,
};
std::optional<SuiteId> parse_suite(std::string_view text);
std::string to_string(SuiteId s);

/// Runs a suite on every (image, metric) combination with |X| <= max_size.
SuiteReport run_suite(SuiteId id, const std::vector<NamedImage>& images,
                      const std::vector<Metric>& metrics, std::size_t max_size,
                      std::optional<ConstancyScenario> scenario = std::nullopt);

}  // namespace digifix
