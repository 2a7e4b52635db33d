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
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "digifix/core.hpp"
#include "digifix/exact.hpp"

namespace digifix {

/// A total self-map of a finite digital image, stored as an index table.
class SelfMap {
 public:
  using Index = std::uint32_t;

  /// table[i] is the index of the image of point i. Throws if the table is
  /// not total or points outside the domain.
  SelfMap(ImagePtr domain, std::vector<Index> table);

  static SelfMap identity(ImagePtr domain);
  static SelfMap constant(ImagePtr domain, const Point& value);
  /// Builds a map from explicit (point, image) pairs; see validate_map.
  static SelfMap from_pairs(ImagePtr domain, std::span<const std::pair<Point, Point>> pairs);

  const DigitalImage& domain() const { return *domain_; }
  const ImagePtr& domain_ptr() const { return domain_; }
  std::size_t size() const { return table_.size(); }
  const std::vector<Index>& table() const { return table_; }

  Index operator()(std::size_t i) const { return table_[i]; }
  const Point& apply(const Point& p) const;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_constant() const;
  std::vector<Index> range() const;

  std::string to_string() const;

  friend bool operator==(const SelfMap& a, const SelfMap& b) {
    return a.table_ == b.table_ && (a.domain_ == b.domain_ || *a.domain_ == *b.domain_);
  }

 private:
  ImagePtr domain_;
  std::vector<Index> table_;
};

bool same_domain(const SelfMap& f, const SelfMap& g);

/// An integer map on the 1-dimensional window [lo, hi]_Z. Values may leave
/// the window; operations that need a value inside the window report where
/// they are defined. Used for the infinite-domain counterexamples, which are
/// checked on bounded windows only.
class WindowMap {
 public:
  WindowMap(std::int64_t lo, std::int64_t hi, std::vector<std::int64_t> values);

  static WindowMap affine(std::int64_t a, std::int64_t b, std::int64_t lo, std::int64_t hi);
  static WindowMap from_function(std::int64_t lo, std::int64_t hi,
                                 const std::function<std::int64_t(std::int64_t)>& f);

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  bool in_window(std::int64_t x) const { return lo_ <= x && x <= hi_; }
  std::int64_t operator()(std::int64_t x) const;
  std::string label() const;

  /// Coefficients when built as x -> a*x + b.
  std::optional<std::pair<std::int64_t, std::int64_t>> affine_form() const { return affine_; }

 private:
  std::int64_t lo_;
  std::int64_t hi_;
  std::vector<std::int64_t> values_;
  std::optional<std::pair<std::int64_t, std::int64_t>> affine_;
};

struct MapValidation {
  bool valid = true;
  std::vector<Point> missing;     // domain points with no image
  std::vector<Point> outside;     // listed images not in the domain
  std::vector<Point> duplicated;  // domain points listed twice with different images
  std::vector<Point> unknown;     // listed sources not in the domain
  /// Affine maps: the largest sub-window [a, b] that the map sends into the window.
  std::optional<std::pair<std::int64_t, std::int64_t>> closed_subwindow;
  std::string message;
};

MapValidation validate_map(const DigitalImage& domain,
                           std::span<const std::pair<Point, Point>> pairs);
MapValidation validate_map(const WindowMap& m);

/// Continuity w.r.t. (c_u, c_v): adjacent points map to equal or c_v-adjacent points.
struct ContinuityResult {
  bool holds = true;
  std::optional<PairWitness> witness;
};

ContinuityResult is_digitally_continuous(const SelfMap& f, int u);
ContinuityResult is_digitally_continuous(const SelfMap& f, int u_source, int u_target);
/// c_1-continuity on the window, over adjacent pairs both of whose images exist.
ContinuityResult is_digitally_continuous(const WindowMap& f);

std::optional<SelfMap> invert(const SelfMap& f);
/// (f o g)(x) = f(g(x))
SelfMap compose(const SelfMap& f, const SelfMap& g);
SelfMap iterate(const SelfMap& f, unsigned k);

/// f o g on the sub-window where g lands inside the window.
struct WindowComposition {
  std::vector<std::int64_t> xs;      // points where the composition is defined
  std::vector<std::int64_t> values;  // values[i] = f(g(xs[i]))
  bool is_identity() const;
};
WindowComposition compose(const WindowMap& f, const WindowMap& g);

std::vector<Point> fixed_points(const SelfMap& f);
std::vector<Point> common_fixed_points(const SelfMap& s, const SelfMap& t);
std::vector<std::int64_t> fixed_points(const WindowMap& f);

// ---------------------------------------------------------------------------
// Scalar families psi and phi.

enum class FamilyRole { Psi, Phi };

/// A candidate comparison function t -> psi(t) or t -> phi(t).
class ScalarFamily {
 public:
  enum class Kind { Linear, Constant, Table };

  static ScalarFamily linear(Rational c, FamilyRole role = FamilyRole::Psi);
  static ScalarFamily constant(Rational c, FamilyRole role = FamilyRole::Phi);
  /// Sample pairs (t, value). Keys must be distinct and nonnegative.
  static ScalarFamily table(std::vector<std::pair<Rational, Rational>> samples,
                            FamilyRole role = FamilyRole::Psi);

  Kind kind() const { return kind_; }
  FamilyRole role() const { return role_; }
  const Rational& coefficient() const { return c_; }
  const std::vector<std::pair<Rational, Rational>>& samples() const { return samples_; }

  /// Single application; throws OffGrid for a table family at an unlisted t.
  ExactValue operator()(const ExactValue& t) const;
  std::string to_string() const;

 private:
  Kind kind_ = Kind::Linear;
  FamilyRole role_ = FamilyRole::Psi;
  Rational c_;
  std::vector<std::pair<Rational, Rational>> samples_;  // sorted by t
};

/// n-fold application; n = 0 returns t.
ExactValue eval_family(const ScalarFamily& fam, const ExactValue& t, unsigned n);

enum class MembershipVerdict { Certified, ConsistentWith, Refuted };

struct MembershipReport {
  MembershipVerdict verdict = MembershipVerdict::Certified;
  std::optional<Rational> witness;  // t at which a condition fails
  std::string reason;
  bool admissible() const { return verdict != MembershipVerdict::Refuted; }
};

std::string to_string(MembershipVerdict v);

/// Default grid: {1/2, 1, 2, 5, 10}.
std::vector<Rational> default_grid();
constexpr unsigned kDefaultHorizon = 64;

MembershipReport psi_membership(const ScalarFamily& fam, std::span<const Rational> grid,
                                unsigned horizon = kDefaultHorizon);
MembershipReport phi_membership(const ScalarFamily& fam, std::span<const Rational> grid);

// ---------------------------------------------------------------------------

/// alpha : X x X -> [0, inf), either constant or a full table over the domain.
class AlphaFn {
 public:
  static AlphaFn constant(Rational c);
  /// Entries (p, q, value); must cover every ordered pair of the domain.
  static AlphaFn table(ImagePtr domain, std::span<const std::tuple<Point, Point, Rational>> entries);
  static AlphaFn from_function(ImagePtr domain,
                               const std::function<Rational(std::size_t, std::size_t)>& f);

  bool is_constant() const { return !domain_; }
  const Rational& constant_value() const { return c_; }
  Rational operator()(std::size_t i, std::size_t j) const;
  std::string to_string() const;

 private:
  Rational c_;
  ImagePtr domain_;
  std::vector<Rational> table_;
};

}  // namespace digifix
