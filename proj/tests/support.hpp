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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "digifix/core.hpp"
#include "digifix/maps.hpp"

namespace digifix {

inline void PrintTo(const ExactValue& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const Point& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace digifix

namespace digifix::testing {

/// splitmix64; small, seedable and stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline Point random_point(Rng& rng, int dim, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> c(dim);
  for (auto& x : c) x = rng.uniform(lo, hi);
  return Point(std::move(c));
}

inline ImagePtr random_image(Rng& rng, int max_size, int max_dim) {
  int dim = static_cast<int>(rng.uniform(1, max_dim));
  int u = static_cast<int>(rng.uniform(1, dim));
  int cap = 1;
  for (int i = 0; i < dim; ++i) cap *= 4;
  int size = static_cast<int>(rng.uniform(1, std::min(max_size, cap)));
  std::set<Point> pts;
  while (static_cast<int>(pts.size()) < size) pts.insert(random_point(rng, dim, 0, 3));
  return make_image(DigitalImage(dim, u, {pts.begin(), pts.end()}));
}

inline SelfMap random_map(Rng& rng, const ImagePtr& image) {
  std::vector<SelfMap::Index> t(image->size());
  for (auto& v : t) v = static_cast<SelfMap::Index>(rng.uniform(0, static_cast<std::int64_t>(image->size()) - 1));
  return SelfMap(image, std::move(t));
}

inline std::vector<Metric> test_metrics() { return {Metric::lp(1), Metric::lp(2), Metric::lp(3), Metric::linf()}; }

// ---------------------------------------------------------------------------
// Independent oracles, written from the definitions only.

/// Sum |x_i - y_i|^p for l_p, max |x_i - y_i| for the max metric.
inline std::int64_t oracle_power(const Metric& m, const Point& x, const Point& y) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    std::int64_t d = std::llabs(x[i] - y[i]);
    if (m.kind == MetricKind::LInfinity) {
      acc = std::max(acc, d);
    } else {
      std::int64_t t = 1;
      for (unsigned k = 0; k < m.p; ++k) t *= d;
      acc += t;
    }
  }
  return acc;
}

inline long double oracle_distance(const Metric& m, const Point& x, const Point& y) {
  long double pw = static_cast<long double>(oracle_power(m, x, y));
  return m.kind == MetricKind::LInfinity ? pw : std::pow(pw, 1.0L / m.p);
}

inline bool oracle_adjacent(const Point& p, const Point& q, int u) {
  if (p == q) return false;
  int differing = 0;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    auto d = std::llabs(p[i] - q[i]);
    if (d > 1) return false;
    if (d == 1) ++differing;
  }
  return differing <= u;
}

/// Number of offsets in {-1,0,1}^n with between 1 and u nonzero entries.
inline std::int64_t oracle_degree(int u, int n) {
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::int64_t count = 0;
  for (std::int64_t code = 0; code < total; ++code) {
    int nonzero = 0;
    for (std::int64_t c = code; c; c /= 3) nonzero += (c % 3) != 0;
    if (nonzero >= 1 && nonzero <= u) ++count;
  }
  return count;
}

/// Union-find over c_u adjacency; returns the component id of each point.
inline std::vector<std::size_t> oracle_components(const DigitalImage& image) {
  std::vector<std::size_t> parent(image.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      if (oracle_adjacent(image.point(i), image.point(j), image.u())) parent[find(i)] = find(j);
    }
  }
  std::vector<std::size_t> root(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) root[i] = find(i);
  return root;
}

/// Continuity from the definition: adjacent points go to equal or adjacent points.
inline bool oracle_continuous(const SelfMap& f, int u_src, int u_dst) {
  const auto& X = f.domain();
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = 0; j < X.size(); ++j) {
      if (!oracle_adjacent(X.point(i), X.point(j), u_src)) continue;
      const Point& a = X.point(f(i));
      const Point& b = X.point(f(j));
      if (a != b && !oracle_adjacent(a, b, u_dst)) return false;
    }
  }
  return true;
}

inline std::vector<std::size_t> oracle_fixed_points(const SelfMap& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f(i) == i) out.push_back(i);
  }
  return out;
}

}  // namespace digifix::testing
