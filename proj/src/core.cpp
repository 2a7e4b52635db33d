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

#include "digifix/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "digifix/error.hpp"

namespace digifix {

std::string Point::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ",";
    out << coords_[i];
  }
  out << ")";
  return out.str();
}

bool cu_adjacent(const Point& p, const Point& q, int u) {
  if (p.dimension() != q.dimension()) {
    throw InvalidArgument("cu_adjacent: dimension mismatch " + p.to_string() + " vs " +
                          q.to_string());
  }
  if (u < 1 || u > static_cast<int>(p.dimension())) {
    throw InvalidArgument("cu_adjacent: u = " + std::to_string(u) + " outside [1, " +
                          std::to_string(p.dimension()) + "]");
  }
  int differing = 0;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    std::int64_t delta = p[i] - q[i];
    if (delta == 0) continue;
    if (delta != 1 && delta != -1) return false;
    ++differing;
  }
  return differing > 0 && differing <= u;
}

std::int64_t adjacency_degree(int u, int n) {
  if (n < 1 || u < 1 || u > n) {
    throw InvalidArgument("adjacency_degree: need 1 <= u <= n");
  }
  // sum over k = 1..u of C(n, k) * 2^k
  std::int64_t total = 0;
  std::int64_t binom = 1;
  for (int k = 1; k <= u; ++k) {
    binom = binom * (n - k + 1) / k;
    total += binom * (std::int64_t{1} << k);
  }
  return total;
}

DigitalImage::DigitalImage(int dimension, int u, std::vector<Point> points)
    : dimension_(dimension), u_(u), points_(std::move(points)) {
  if (dimension_ < 1) throw InvalidArgument("image dimension must be positive");
  if (u_ < 1 || u_ > dimension_) {
    throw InvalidArgument("adjacency parameter u = " + std::to_string(u_) + " outside [1, " +
                          std::to_string(dimension_) + "]");
  }
  if (points_.empty()) throw InvalidArgument("digital image must be nonempty");
  for (const auto& p : points_) {
    if (static_cast<int>(p.dimension()) != dimension_) {
      throw InvalidArgument("point " + p.to_string() + " does not have dimension " +
                            std::to_string(dimension_));
    }
  }
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) throw InvalidArgument("duplicate point " + dup->to_string());
}

DigitalImage DigitalImage::interval(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidArgument("interval: lo > hi");
  std::vector<Point> pts;
  for (std::int64_t z = lo; z <= hi; ++z) pts.push_back(Point{z});
  return DigitalImage(1, 1, std::move(pts));
}

std::optional<std::size_t> DigitalImage::index_of(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

std::size_t DigitalImage::require_index(const Point& p) const {
  auto idx = index_of(p);
  if (!idx) throw InvalidArgument("point " + p.to_string() + " is not in the image");
  return *idx;
}

bool DigitalImage::adjacent(std::size_t i, std::size_t j) const {
  return cu_adjacent(points_[i], points_[j], u_);
}

DigitalImage DigitalImage::with_u(int u) const { return DigitalImage(dimension_, u, points_); }

std::vector<std::vector<Point>> connected_components(const DigitalImage& image) {
  const std::size_t n = image.size();
  std::vector<int> label(n, -1);
  std::vector<std::vector<Point>> blocks;
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (label[root] >= 0) continue;
    const int id = static_cast<int>(blocks.size());
    blocks.emplace_back();
    label[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      blocks[id].push_back(image.point(v));
      for (std::size_t w = 0; w < n; ++w) {
        if (label[w] < 0 && image.adjacent(v, w)) {
          label[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(blocks[id].begin(), blocks[id].end());
  }
  return blocks;
}

bool is_connected(const DigitalImage& image) { return connected_components(image).size() == 1; }

Metric Metric::lp(unsigned p) {
  if (p < 1) throw InvalidArgument("l_p metric needs p >= 1");
  return {MetricKind::Lp, p};
}

Metric Metric::parse(std::string_view text) {
  if (text == "linf" || text == "lp:inf") return linf();
  if (text == "reciprocal") return reciprocal();
  if (text.substr(0, 3) == "lp:") {
    std::string rest(text.substr(3));
    char* end = nullptr;
    long p = std::strtol(rest.c_str(), &end, 10);
    if (!rest.empty() && end && *end == '\0' && p >= 1) return lp(static_cast<unsigned>(p));
  }
  throw InvalidArgument("unknown metric '" + std::string(text) +
                        "' (expected lp:<p>, linf or reciprocal)");
}

std::string Metric::to_string() const {
  switch (kind) {
    case MetricKind::Lp:
      return "lp:" + std::to_string(p);
    case MetricKind::LInfinity:
      return "linf";
    case MetricKind::Reciprocal:
      return "reciprocal";
  }
  return "?";
}

std::strong_ordering Distance::compare(const Rational& c) const {
  if (c < 0) return std::strong_ordering::greater;
  return digifix::compare(power_, pow(c, metric_.root_index()));
}

std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
  if (a.metric_ != b.metric_) return a.value() <=> b.value();
  return compare(a.power_, b.power_);
}

bool operator==(const Distance& a, const Distance& b) { return (a <=> b) == 0; }

Distance distance(const Metric& metric, const Point& p, const Point& q) {
  if (p.dimension() != q.dimension()) {
    throw InvalidArgument("distance: dimension mismatch " + p.to_string() + " vs " +
                          q.to_string());
  }
  switch (metric.kind) {
    case MetricKind::Lp: {
      BigInt sum = 0;
      for (std::size_t i = 0; i < p.dimension(); ++i) {
        BigInt delta = p[i] - q[i];
        if (delta < 0) delta = -delta;
        sum += boost::multiprecision::pow(delta, metric.p);
      }
      return Distance(metric, Rational(sum));
    }
    case MetricKind::LInfinity: {
      std::int64_t best = 0;
      for (std::size_t i = 0; i < p.dimension(); ++i) {
        best = std::max<std::int64_t>(best, std::llabs(p[i] - q[i]));
      }
      return Distance(metric, Rational(best));
    }
    case MetricKind::Reciprocal: {
      if (p.dimension() != 1 || p[0] <= 0 || q[0] <= 0) {
        throw InvalidArgument("reciprocal metric needs 1-dimensional points with positive "
                              "coordinate, got " + p.to_string() + ", " + q.to_string());
      }
      Rational diff = Rational(1, p[0]) - Rational(1, q[0]);
      return Distance(metric, abs(diff));
    }
  }
  throw InvalidArgument("unknown metric kind");
}

void check_metric_compatible(const DigitalImage& image, const Metric& metric) {
  if (metric.kind != MetricKind::Reciprocal) return;
  if (image.dimension() != 1) {
    throw InvalidArgument("reciprocal metric is only defined on 1-dimensional images");
  }
  for (const auto& p : image.points()) {
    if (p[0] <= 0) {
      throw InvalidArgument("reciprocal metric needs positive coordinates, got " + p.to_string());
    }
  }
}

MetricSpace::MetricSpace(ImagePtr image, Metric metric)
    : image_(std::move(image)), metric_(metric) {
  if (!image_) throw InvalidArgument("MetricSpace: null image");
  check_metric_compatible(*image_, metric_);
  const std::size_t n = image_->size();
  table_.resize(n * n, Distance(metric_, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      table_[i * n + j] = distance(metric_, image_->point(i), image_->point(j));
      table_[j * n + i] = table_[i * n + j];
    }
  }
}

BoundsCheckReport lp_lattice_bounds_check(const DigitalImage& image, const Metric& metric) {
  if (!metric.is_lattice()) {
    throw InvalidArgument("lp_lattice_bounds_check needs an l_p or max metric");
  }
  BoundsCheckReport report;
  const std::size_t n = image.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++report.pairs_checked;
      const Point& x = image.point(i);
      const Point& y = image.point(j);
      Distance d = distance(metric, x, y);
      if (d.compare(Rational(1)) < 0 && x != y) {
        report.passed = false;
        report.violated = "d<1 implies equal";
        report.witness = PairWitness{x, y};
        return report;
      }
      if (image.adjacent(i, j)) {
        // d <= u^(1/p)  <=>  d^p <= u ; for the max metric u^(1/inf) = 1.
        Rational bound = metric.kind == MetricKind::Lp ? Rational(image.u()) : Rational(1);
        if (d.power() > bound) {
          report.passed = false;
          report.violated = "adjacent implies d<=u^(1/p)";
          report.witness = PairWitness{x, y};
          return report;
        }
      }
    }
  }
  return report;
}

ExtremalDistance diameter(const DigitalImage& image, const Metric& metric) {
  check_metric_compatible(image, metric);
  ExtremalDistance best{Distance(metric, 0), std::nullopt};
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      Distance d = distance(metric, image.point(i), image.point(j));
      if (!best.pair || d > best.value) {
        best = {d, PairWitness{image.point(i), image.point(j)}};
      }
    }
  }
  return best;
}

ExtremalDistance min_positive_distance(const DigitalImage& image, const Metric& metric) {
  if (image.size() < 2) throw InvalidArgument("min_positive_distance needs at least 2 points");
  check_metric_compatible(image, metric);
  std::optional<ExtremalDistance> best;
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      Distance d = distance(metric, image.point(i), image.point(j));
      if (!best || d < best->value) {
        best = ExtremalDistance{d, PairWitness{image.point(i), image.point(j)}};
      }
    }
  }
  return *best;
}

std::optional<std::size_t> sequence_stabilization(std::span<const Point> seq,
                                                  const Metric& metric) {
  if (seq.empty()) throw InvalidArgument("sequence_stabilization: empty sequence");
  auto same = [&](const Point& a, const Point& b) { return distance(metric, a, b).is_zero(); };
  if (seq.size() < 2 || !same(seq[seq.size() - 1], seq[seq.size() - 2])) return std::nullopt;
  std::size_t start = seq.size() - 1;
  while (start > 0 && same(seq[start - 1], seq.back())) --start;
  return start;
}

ReciprocalDemoReport reciprocal_metric_demo(std::int64_t n, const Rational& epsilon) {
  if (n < 2) throw InvalidArgument("reciprocal demo needs N >= 2");
  if (epsilon <= 0) throw InvalidArgument("reciprocal demo needs epsilon > 0");
  const Metric metric = Metric::reciprocal();
  auto d = [&](std::int64_t i, std::int64_t j) {
    return distance(metric, Point{i}, Point{j}).power();
  };

  ReciprocalDemoReport report;
  report.n = n;
  report.epsilon = epsilon;

  // ceil(2 / epsilon)
  Rational two_over = Rational(2) / epsilon;
  BigInt n0 = numerator(two_over) / denominator(two_over);
  if (Rational(n0) < two_over) ++n0;
  report.analytic_n0 = static_cast<std::int64_t>(n0);

  auto window_ok = [&](std::int64_t from) {
    for (std::int64_t i = from + 1; i <= n; ++i) {
      for (std::int64_t j = i + 1; j <= n; ++j) {
        if (!(d(i, j) < epsilon)) return false;
      }
    }
    return true;
  };
  report.analytic_window_verified = window_ok(report.analytic_n0);

  // The widest pair in (k, N] is (k+1, N), so validity is monotone in k.
  std::int64_t least = 0;
  while (least < n && !(d(least + 1, n) < epsilon)) ++least;
  report.least_prefix_n0 = least;

  report.no_limit_in_prefix = true;
  for (std::int64_t limit = 1; limit <= n; ++limit) {
    ReciprocalDemoReport::Candidate c;
    c.limit = limit;
    // |1/k - 1/L| grows with k once k > L, so the tail infimum sits at k = N + 1.
    c.tail_distance = d(n + 1, limit);
    c.bound = Rational(1, limit) - Rational(1, n);
    for (std::int64_t k = n + 2; k <= 2 * n + 1; ++k) {
      if (d(k, limit) < c.tail_distance) report.no_limit_in_prefix = false;
    }
    if (!(c.tail_distance >= c.bound && c.tail_distance > 0)) report.no_limit_in_prefix = false;
    report.candidates.push_back(std::move(c));
  }
  return report;
}

}  // namespace digifix
