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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digifix/core.hpp"
#include "digifix/exact.hpp"
#include "digifix/maps.hpp"

namespace digifix {

enum class Verdict { Holds, Fails, HoldsOnWindow };

std::string to_string(Verdict v);

/// A violated inequality "lhs relation rhs", where relation is the one that
/// was required to hold.
struct Inequality {
  std::string lhs_label;
  ExactValue lhs;
  std::string relation;  // "<=", "<", ">=", "==", ...
  std::string rhs_label;
  ExactValue rhs;
  std::string to_string() const;
};

struct Witness {
  std::vector<Point> points;
  std::optional<Inequality> inequality;
  std::string detail;
};

struct ClassificationReport {
  std::string class_name;
  Verdict verdict = Verdict::Holds;
  std::optional<Witness> witness;  // present iff verdict == Fails
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string notes;

  bool holds() const { return verdict != Verdict::Fails; }
};

/// Throws InvalidArgument unless the metric is l_p or max and fits the image.
void require_lattice_metric(const DigitalImage& image, const Metric& metric);

/// alpha* = max over distinct pairs of d(fx,fy)/d(x,y), stored as its r-th
/// power (a rational) like a Distance.
struct ContractionFactor {
  Rational power;
  unsigned root = 1;
  std::optional<PairWitness> argmax;  // absent for a singleton domain
  bool is_contraction() const { return power < 1; }
  ExactValue value() const { return ExactValue::root(power, root); }
};

ContractionFactor contraction_factor(const SelfMap& f, const Metric& metric);

/// d(fx,fy) <= phi(d(x,y)) for all pairs.
ClassificationReport is_phi_contraction(const SelfMap& f, const Metric& metric,
                                        const ScalarFamily& phi);
/// phi(d(fx,fy)) < phi(d(x,y)) for all distinct pairs.
ClassificationReport is_phi_contractive(const SelfMap& f, const Metric& metric,
                                        const ScalarFamily& phi);
/// f onto and d(fx,fy) >= k d(x,y) for all pairs; k >= 1.
ClassificationReport is_expansive(const SelfMap& f, const Metric& metric, const Rational& k);

/// max{d(x,y), [d(x,fx)+d(y,fy)]/2, [d(x,fy)+d(y,fx)]/2}
ExactValue m_value(std::size_t x, std::size_t y, const SelfMap& f, const Metric& metric);
/// max{d(x,y), d(x,fx), d(y,fy), [d(x,fy)+d(y,fx)]/2}
ExactValue m_value_contractive(std::size_t x, std::size_t y, const SelfMap& f,
                               const Metric& metric);

enum class PairScope { AllPairs, DistinctPairs };

/// psi(d(fx,fy)) >= alpha(x,y) M(x,y) over ordered pairs in the given scope.
ClassificationReport is_gen_alpha_psi_expansive(const SelfMap& f, const Metric& metric,
                                                const AlphaFn& alpha, const ScalarFamily& psi,
                                                PairScope scope = PairScope::AllPairs);

/// alpha(x,y) psi(d(fx,fy)) <= psi(M4(x,y)) - phi(M4(x,y)) for all ordered pairs.
ClassificationReport is_alpha_psi_phi_contractive(const SelfMap& f, const Metric& metric,
                                                  const AlphaFn& alpha, const ScalarFamily& psi,
                                                  const ScalarFamily& phi);

ClassificationReport is_alpha_admissible(const SelfMap& f, const AlphaFn& alpha);

/// Strict decrease d(fx,fy) < d(x,y) on distinct pairs, which on a finite
/// space is equivalent to the epsilon-delta definition.
ClassificationReport is_wusdc(const SelfMap& f, const Metric& metric);

ClassificationReport is_continuous(const SelfMap& f, int u);
ClassificationReport is_continuous(const WindowMap& f);

std::vector<Point> coincidence_points(const SelfMap& s, const SelfMap& t);
std::vector<std::int64_t> coincidence_points(const WindowMap& s, const WindowMap& t);

ClassificationReport is_weakly_compatible(const SelfMap& s, const SelfMap& t);
/// Throws WindowEscape if a composition needed at a coincidence point leaves the window.
ClassificationReport is_weakly_compatible(const WindowMap& s, const WindowMap& t);

/// s o t == t o s everywhere (on the window: wherever both compositions are defined).
ClassificationReport commute(const SelfMap& s, const SelfMap& t);
ClassificationReport commute(const WindowMap& s, const WindowMap& t);

/// s(X) is contained in t(X). On a window, every value of s in the window
/// interior [lo+1, hi-1] must be a value of t on the window.
ClassificationReport range_contained(const SelfMap& s, const SelfMap& t);
ClassificationReport range_contained(const WindowMap& s, const WindowMap& t);

/// d(sx,sy) <= alpha d(tx,ty) for all pairs.
ClassificationReport is_jungck_contraction(const SelfMap& s, const SelfMap& t,
                                           const Metric& metric, const Rational& alpha);
/// Same on a window with d(x,y) = |x - y|.
ClassificationReport is_jungck_contraction(const WindowMap& s, const WindowMap& t,
                                           const Rational& alpha);

struct CompatibilityFlags {
  bool compatible = true;
  bool type_a = true;
  bool type_p = true;
  std::size_t coincidence_count = 0;
  bool agree() const { return compatible == type_a && type_a == type_p; }
};

/// Evaluates the three compatibility notions through their finite reduction:
/// a qualifying sequence is eventually inside {x : S(x) = T(x) = t}, so each
/// notion holds iff its defining distance vanishes at every coincidence point.
CompatibilityFlags compatibility_class(const SelfMap& s, const SelfMap& t, const Metric& metric);

}  // namespace digifix
