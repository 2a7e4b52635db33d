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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "digifix/exact.hpp"

namespace digifix {

/// A lattice point of Z^n. Ordered lexicographically.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit Point(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  std::size_t dimension() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  std::string to_string() const;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// True iff p != q, every coordinate differs by at most 1 and at most u
/// coordinates differ. Throws on dimension mismatch or u outside [1, n].
bool cu_adjacent(const Point& p, const Point& q, int u);

/// Number of lattice points c_u-adjacent to a fixed point of Z^n.
std::int64_t adjacency_degree(int u, int n);

/// A finite, nonempty set of lattice points of Z^n with a c_u adjacency.
/// Points are stored in lexicographic order; maps and reports refer to them
/// by that index.
class DigitalImage {
 public:
  DigitalImage(int dimension, int u, std::vector<Point> points);

  /// The digital interval [lo, hi]_Z with c_1 adjacency.
  static DigitalImage interval(std::int64_t lo, std::int64_t hi);

  int dimension() const { return dimension_; }
  int u() const { return u_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(std::size_t index) const { return points_[index]; }
  std::optional<std::size_t> index_of(const Point& p) const;
  std::size_t require_index(const Point& p) const;

  bool adjacent(std::size_t i, std::size_t j) const;
  /// Same image with a different adjacency parameter.
  DigitalImage with_u(int u) const;

  friend bool operator==(const DigitalImage& a, const DigitalImage& b) {
    return a.dimension_ == b.dimension_ && a.u_ == b.u_ && a.points_ == b.points_;
  }

 private:
  int dimension_;
  int u_;
  std::vector<Point> points_;
};

using ImagePtr = std::shared_ptr<const DigitalImage>;

inline ImagePtr make_image(DigitalImage image) {
  return std::make_shared<const DigitalImage>(std::move(image));
}

/// Maximal c_u-connected subsets, each sorted, ordered by first point.
std::vector<std::vector<Point>> connected_components(const DigitalImage& image);
bool is_connected(const DigitalImage& image);

enum class MetricKind { Lp, LInfinity, Reciprocal };

/// An l_p metric (integer p >= 1), the max metric, or the reciprocal metric
/// d(i, j) = |1/i - 1/j| on positive integers.
struct Metric {
  MetricKind kind = MetricKind::Lp;
  unsigned p = 2;

  static Metric lp(unsigned p);
  static Metric linf() { return {MetricKind::LInfinity, 0}; }
  static Metric reciprocal() { return {MetricKind::Reciprocal, 0}; }

  /// Parses "lp:<p>", "linf" or "reciprocal".
  static Metric parse(std::string_view text);

  /// Index r such that a distance is stored as its r-th power.
  unsigned root_index() const { return kind == MetricKind::Lp ? p : 1; }
  bool is_lattice() const { return kind != MetricKind::Reciprocal; }
  std::string to_string() const;

  friend bool operator==(const Metric&, const Metric&) = default;
};

/// An exact distance value, stored as its r-th power (r = p for l_p, 1
/// otherwise). For l_p that power is the integer sum |x_i - y_i|^p.
/// Distances computed under the same metric compare exactly on the power.
class Distance {
 public:
  Distance() = default;
  Distance(Metric metric, Rational power) : metric_(metric), power_(std::move(power)) {}

  const Metric& metric() const { return metric_; }
  const Rational& power() const { return power_; }
  bool is_zero() const { return power_ == 0; }
  ExactValue value() const { return ExactValue::root(power_, metric_.root_index()); }
  std::string to_string() const { return value().to_string(); }

  /// Compares against the rational c by comparing the stored power with c^r.
  std::strong_ordering compare(const Rational& c) const;

  friend std::strong_ordering operator<=>(const Distance& a, const Distance& b);
  friend bool operator==(const Distance& a, const Distance& b);

 private:
  Metric metric_;
  Rational power_ = 0;
};

Distance distance(const Metric& metric, const Point& p, const Point& q);

/// Throws InvalidArgument if the metric cannot be evaluated on the image
/// (dimension > 1 or nonpositive coordinate under the reciprocal metric).
void check_metric_compatible(const DigitalImage& image, const Metric& metric);

/// An image together with a metric and its full distance table.
class MetricSpace {
 public:
  MetricSpace(ImagePtr image, Metric metric);

  const DigitalImage& image() const { return *image_; }
  const ImagePtr& image_ptr() const { return image_; }
  const Metric& metric() const { return metric_; }
  std::size_t size() const { return image_->size(); }
  const Distance& d(std::size_t i, std::size_t j) const { return table_[i * size() + j]; }

 private:
  ImagePtr image_;
  Metric metric_;
  std::vector<Distance> table_;
};

struct PairWitness {
  Point first;
  Point second;
};

struct BoundsCheckReport {
  bool passed = true;
  /// "d<1 implies equal" or "adjacent implies d<=u^(1/p)" when failed.
  std::string violated;
  std::optional<PairWitness> witness;
  std::size_t pairs_checked = 0;
};

/// Checks, for every pair of the image, that d < 1 forces equality and that
/// c_u-adjacent points are at distance at most u^(1/p).
BoundsCheckReport lp_lattice_bounds_check(const DigitalImage& image, const Metric& metric);

struct ExtremalDistance {
  Distance value;
  std::optional<PairWitness> pair;  // absent for a singleton diameter
};

ExtremalDistance diameter(const DigitalImage& image, const Metric& metric);
ExtremalDistance min_positive_distance(const DigitalImage& image, const Metric& metric);

/// Start index of the constant suffix of a finite orbit, provided the orbit
/// shows stabilization (its last two terms coincide); absent otherwise.
std::optional<std::size_t> sequence_stabilization(std::span<const Point> seq, const Metric& metric);

struct ReciprocalDemoReport {
  std::int64_t n = 0;
  Rational epsilon;
  /// Least n0 with 2/n0 <= epsilon: m, n > n0 gives |1/m - 1/n| < 1/n0 < epsilon.
  std::int64_t analytic_n0 = 0;
  /// Whether every pair m, n in (analytic_n0, N] is within epsilon.
  bool analytic_window_verified = false;
  /// Least n0 for which every prefix pair m, n in (n0, N] is within epsilon.
  std::int64_t least_prefix_n0 = 0;
  struct Candidate {
    std::int64_t limit;
    /// inf over n > N of |1/n - 1/L|, attained at n = N + 1.
    Rational tail_distance;
    Rational bound;  // 1/L - 1/N
  };
  std::vector<Candidate> candidates;
  /// Every tail distance is >= its bound and > 0.
  bool no_limit_in_prefix = false;
};

ReciprocalDemoReport reciprocal_metric_demo(std::int64_t n, const Rational& epsilon);

}  // namespace digifix
