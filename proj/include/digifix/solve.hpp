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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "digifix/classify.hpp"
#include "digifix/core.hpp"
#include "digifix/maps.hpp"

namespace digifix {

enum class Outcome { FixedPoint, CommonFixedPoint, Diverged, HypothesisViolated };

std::string to_string(Outcome o);

/// One hypothesis or per-step check performed by a solver.
struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SolveTrace {
  std::string scheme;
  std::vector<Point> orbit;
  /// Jungck only: T(x_n) for each orbit point.
  std::vector<Point> images;
  Outcome outcome = Outcome::Diverged;
  std::optional<Point> point;  // the fixed point or common fixed point
  std::vector<Point> cycle;    // Diverged with a detected cycle
  std::string violated;        // HypothesisViolated: name of the failing check
  std::optional<Witness> witness;
  std::vector<Check> checks;
  std::size_t iterations = 0;
  std::size_t maxiter = 0;
};

/// 4|X| + 8.
std::size_t default_maxiter(const DigitalImage& image);

/// Picard iteration x_{n+1} = f(x_n). With psi, also checks psi in Psi and
/// d(x_n,x_{n+1}) <= psi^n(d(x_0,x_1)) along the orbit.
SolveTrace solve_picard(const SelfMap& f, const Metric& metric, const Point& x0,
                        std::optional<std::size_t> maxiter = std::nullopt,
                        const std::optional<ScalarFamily>& psi = std::nullopt);

/// x_{n+1} = f^{-1}(x_n) for a bijective generalised alpha-psi-expansive f.
/// The expansive inequality is checked at each orbit pair (x_n, x_{n+1}).
SolveTrace solve_inverse_iteration(const SelfMap& f, const Metric& metric, const AlphaFn& alpha,
                                   const ScalarFamily& psi, const Point& x0,
                                   std::optional<std::size_t> maxiter = std::nullopt);

/// Jungck iteration T(x_n) = S(x_{n-1}), choosing the lexicographically least x_n.
SolveTrace solve_jungck(const SelfMap& s, const SelfMap& t, const Metric& metric,
                        const Rational& alpha, const Point& x0,
                        std::optional<std::size_t> maxiter = std::nullopt);

/// Picard iteration for an alpha-psi-phi-contractive T, with psi and phi
/// required to lie in Phi and a per-step strict decrease check.
SolveTrace solve_alpha_psi_phi(const SelfMap& t, const Metric& metric, const AlphaFn& alpha,
                               const ScalarFamily& psi, const ScalarFamily& phi, const Point& x0,
                               std::optional<std::size_t> maxiter = std::nullopt);

/// Fixed points u, v with alpha(u,v) >= 1 must coincide.
ClassificationReport fixed_point_uniqueness(const SelfMap& t, const AlphaFn& alpha);

/// Default membership grid extended by the rational positive distances of the image.
std::vector<Rational> membership_grid(const DigitalImage& image, const Metric& metric);

}  // namespace digifix
