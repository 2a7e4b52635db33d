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


#include "digifix/maps.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "digifix/error.hpp"

namespace digifix {

SelfMap::SelfMap(ImagePtr domain, std::vector<Index> table)
    : domain_(std::move(domain)), table_(std::move(table)) {
  if (!domain_) throw InvalidArgument("SelfMap: null domain");
  if (table_.size() != domain_->size()) {
    throw InvalidArgument("SelfMap: table has " + std::to_string(table_.size()) +
                          " entries for a domain of " + std::to_string(domain_->size()) +
                          " points");
  }
  for (Index v : table_) {
    if (v >= domain_->size()) throw InvalidArgument("SelfMap: image index outside the domain");
  }
}

SelfMap SelfMap::identity(ImagePtr domain) {
  std::vector<Index> table(domain->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<Index>(i);
  return SelfMap(std::move(domain), std::move(table));
}

SelfMap SelfMap::constant(ImagePtr domain, const Point& value) {
  auto idx = static_cast<Index>(domain->require_index(value));
  std::vector<Index> table(domain->size(), idx);
  return SelfMap(std::move(domain), std::move(table));
}

SelfMap SelfMap::from_pairs(ImagePtr domain, std::span<const std::pair<Point, Point>> pairs) {
  MapValidation v = validate_map(*domain, pairs);
  if (!v.valid) throw InvalidArgument(v.message);
  std::vector<Index> table(domain->size());
  for (const auto& [src, dst] : pairs) {
    table[*domain->index_of(src)] = static_cast<Index>(*domain->index_of(dst));
  }
  return SelfMap(std::move(domain), std::move(table));
}

const Point& SelfMap::apply(const Point& p) const {
  return domain_->point(table_[domain_->require_index(p)]);
}

bool SelfMap::is_injective() const { return range().size() == table_.size(); }

bool SelfMap::is_surjective() const { return is_injective(); }

bool SelfMap::is_constant() const {
  return std::all_of(table_.begin(), table_.end(), [&](Index v) { return v == table_.front(); });
}

std::vector<SelfMap::Index> SelfMap::range() const {
  std::vector<Index> r = table_;
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

std::string SelfMap::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i) out << ", ";
    out << domain_->point(i).to_string() << "->" << domain_->point(table_[i]).to_string();
  }
  out << "}";
  return out.str();
}

bool same_domain(const SelfMap& f, const SelfMap& g) {
  return f.domain_ptr() == g.domain_ptr() || f.domain() == g.domain();
}

namespace {

void require_same_domain(const SelfMap& f, const SelfMap& g) {
  if (!same_domain(f, g)) throw InvalidArgument("maps are defined on different domains");
}

}  // namespace

WindowMap::WindowMap(std::int64_t lo, std::int64_t hi, std::vector<std::int64_t> values)
    : lo_(lo), hi_(hi), values_(std::move(values)) {
  if (lo > hi) throw InvalidArgument("WindowMap: empty window");
  if (values_.size() != static_cast<std::size_t>(hi - lo + 1)) {
    throw InvalidArgument("WindowMap: value count does not match the window");
  }
}

WindowMap WindowMap::affine(std::int64_t a, std::int64_t b, std::int64_t lo, std::int64_t hi) {
  WindowMap m = from_function(lo, hi, [a, b](std::int64_t x) { return a * x + b; });
  m.affine_ = std::make_pair(a, b);
  return m;
}

WindowMap WindowMap::from_function(std::int64_t lo, std::int64_t hi,
                                   const std::function<std::int64_t(std::int64_t)>& f) {
  if (lo > hi) throw InvalidArgument("WindowMap: empty window");
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t x = lo; x <= hi; ++x) values.push_back(f(x));
  return WindowMap(lo, hi, std::move(values));
}

std::int64_t WindowMap::operator()(std::int64_t x) const {
  if (!in_window(x)) {
    throw WindowEscape("argument " + std::to_string(x) + " outside window " + label());
  }
  return values_[static_cast<std::size_t>(x - lo_)];
}

std::string WindowMap::label() const {
  return "[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]";
}

MapValidation validate_map(const DigitalImage& domain,
                           std::span<const std::pair<Point, Point>> pairs) {
  MapValidation v;
  std::vector<std::optional<Point>> seen(domain.size());
  for (const auto& [src, dst] : pairs) {
    auto i = src.dimension() == static_cast<std::size_t>(domain.dimension())
                 ? domain.index_of(src)
                 : std::nullopt;
    if (!i) {
      v.unknown.push_back(src);
      continue;
    }
    bool dst_ok = dst.dimension() == static_cast<std::size_t>(domain.dimension()) &&
                  domain.index_of(dst).has_value();
    if (!dst_ok) v.outside.push_back(dst);
    if (seen[*i] && *seen[*i] != dst) v.duplicated.push_back(src);
    if (!seen[*i]) seen[*i] = dst;
  }
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (!seen[i]) v.missing.push_back(domain.point(i));
  }
  v.valid = v.missing.empty() && v.outside.empty() && v.duplicated.empty() && v.unknown.empty();
  std::ostringstream msg;
  auto list = [&](const char* what, const std::vector<Point>& pts) {
    if (pts.empty()) return;
    msg << (msg.tellp() > 0 ? "; " : "") << what << ":";
    for (const auto& p : pts) msg << " " << p.to_string();
  };
  list("missing image for", v.missing);
  list("image outside domain", v.outside);
  list("conflicting images for", v.duplicated);
  list("source not in domain", v.unknown);
  v.message = v.valid ? "valid" : msg.str();
  return v;
}

MapValidation validate_map(const WindowMap& m) {
  MapValidation v;
  std::int64_t best_lo = 0, best_len = 0, run_lo = 0, run_len = 0;
  for (std::int64_t x = m.lo(); x <= m.hi(); ++x) {
    if (m.in_window(m(x))) {
      if (run_len == 0) run_lo = x;
      if (++run_len > best_len) {
        best_len = run_len;
        best_lo = run_lo;
      }
    } else {
      run_len = 0;
    }
  }
  v.valid = best_len == m.hi() - m.lo() + 1;
  if (best_len > 0) v.closed_subwindow = std::make_pair(best_lo, best_lo + best_len - 1);
  if (v.valid) {
    v.message = "closed on window " + m.label();
  } else if (v.closed_subwindow) {
    v.message = "closed only on [" + std::to_string(v.closed_subwindow->first) + "," +
                std::to_string(v.closed_subwindow->second) + "] within window " + m.label();
  } else {
    v.message = "no point of window " + m.label() + " maps into the window";
  }
  return v;
}

ContinuityResult is_digitally_continuous(const SelfMap& f, int u) {
  return is_digitally_continuous(f, u, u);
}

ContinuityResult is_digitally_continuous(const SelfMap& f, int u_source, int u_target) {
  const DigitalImage& X = f.domain();
  ContinuityResult r;
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      if (!cu_adjacent(X.point(i), X.point(j), u_source)) continue;
      if (f(i) == f(j) || cu_adjacent(X.point(f(i)), X.point(f(j)), u_target)) continue;
      r.holds = false;
      r.witness = PairWitness{X.point(i), X.point(j)};
      return r;
    }
  }
  return r;
}

ContinuityResult is_digitally_continuous(const WindowMap& f) {
  ContinuityResult r;
  for (std::int64_t x = f.lo(); x < f.hi(); ++x) {
    std::int64_t a = f(x), b = f(x + 1);
    if (a - b <= 1 && b - a <= 1) continue;
    r.holds = false;
    r.witness = PairWitness{Point{x}, Point{x + 1}};
    return r;
  }
  return r;
}

std::optional<SelfMap> invert(const SelfMap& f) {
  if (!f.is_injective()) return std::nullopt;
  std::vector<SelfMap::Index> table(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) table[f(i)] = static_cast<SelfMap::Index>(i);
  return SelfMap(f.domain_ptr(), std::move(table));
}

SelfMap compose(const SelfMap& f, const SelfMap& g) {
  require_same_domain(f, g);
  std::vector<SelfMap::Index> table(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) table[i] = f(g(i));
  return SelfMap(g.domain_ptr(), std::move(table));
}

SelfMap iterate(const SelfMap& f, unsigned k) {
  SelfMap result = SelfMap::identity(f.domain_ptr());
  for (unsigned i = 0; i < k; ++i) result = compose(f, result);
  return result;
}

bool WindowComposition::is_identity() const { return xs == values; }

WindowComposition compose(const WindowMap& f, const WindowMap& g) {
  if (f.lo() != g.lo() || f.hi() != g.hi()) {
    throw InvalidArgument("window maps are defined on different windows");
  }
  WindowComposition c;
  for (std::int64_t x = g.lo(); x <= g.hi(); ++x) {
    if (!f.in_window(g(x))) continue;
    c.xs.push_back(x);
    c.values.push_back(f(g(x)));
  }
  return c;
}

std::vector<Point> fixed_points(const SelfMap& f) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f(i) == i) out.push_back(f.domain().point(i));
  }
  return out;
}

std::vector<Point> common_fixed_points(const SelfMap& s, const SelfMap& t) {
  require_same_domain(s, t);
  std::vector<Point> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s(i) == i && t(i) == i) out.push_back(s.domain().point(i));
  }
  return out;
}

std::vector<std::int64_t> fixed_points(const WindowMap& f) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = f.lo(); x <= f.hi(); ++x) {
    if (f(x) == x) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------

ScalarFamily ScalarFamily::linear(Rational c, FamilyRole role) {
  ScalarFamily f;
  f.kind_ = Kind::Linear;
  f.role_ = role;
  f.c_ = std::move(c);
  return f;
}

ScalarFamily ScalarFamily::constant(Rational c, FamilyRole role) {
  ScalarFamily f;
  f.kind_ = Kind::Constant;
  f.role_ = role;
  f.c_ = std::move(c);
  return f;
}

ScalarFamily ScalarFamily::table(std::vector<std::pair<Rational, Rational>> samples,
                                 FamilyRole role) {
  if (samples.empty()) throw InvalidArgument("table family needs at least one sample");
  std::sort(samples.begin(), samples.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].first < 0) throw InvalidArgument("table family has a negative argument");
    if (i && samples[i].first == samples[i - 1].first) {
      throw InvalidArgument("table family lists t = " + digifix::to_string(samples[i].first) +
                            " twice");
    }
  }
  ScalarFamily f;
  f.kind_ = Kind::Table;
  f.role_ = role;
  f.samples_ = std::move(samples);
  return f;
}

ExactValue ScalarFamily::operator()(const ExactValue& t) const {
  switch (kind_) {
    case Kind::Linear:
      return t * c_;
    case Kind::Constant:
      return ExactValue(c_);
    case Kind::Table: {
      auto q = t.as_rational();
      if (q) {
        auto it = std::lower_bound(samples_.begin(), samples_.end(), *q,
                                   [](const auto& s, const Rational& key) { return s.first < key; });
        if (it != samples_.end() && it->first == *q) return ExactValue(it->second);
      }
      throw OffGrid("table family has no sample at t = " + t.to_string());
    }
  }
  return ExactValue();
}

std::string ScalarFamily::to_string() const {
  switch (kind_) {
    case Kind::Linear:
      return "linear(" + digifix::to_string(c_) + ")";
    case Kind::Constant:
      return "const(" + digifix::to_string(c_) + ")";
    case Kind::Table: {
      std::string s = "table{";
      for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (i) s += ", ";
        s += digifix::to_string(samples_[i].first) + ":" + digifix::to_string(samples_[i].second);
      }
      return s + "}";
    }
  }
  return {};
}

ExactValue eval_family(const ScalarFamily& fam, const ExactValue& t, unsigned n) {
  if (t.sign() < 0) throw InvalidArgument("eval_family: t must be nonnegative");
  if (fam.kind() == ScalarFamily::Kind::Linear) return t * pow(fam.coefficient(), n);
  ExactValue v = t;
  for (unsigned i = 0; i < n; ++i) v = fam(v);
  return v;
}

std::string to_string(MembershipVerdict v) {
  switch (v) {
    case MembershipVerdict::Certified:
      return "certified";
    case MembershipVerdict::ConsistentWith:
      return "consistent-with";
    case MembershipVerdict::Refuted:
      return "refuted";
  }
  return {};
}

std::vector<Rational> default_grid() {
  return {Rational(1, 2), Rational(1), Rational(2), Rational(5), Rational(10)};
}

namespace {

void check_grid(std::span<const Rational> grid) {
  if (grid.empty()) throw InvalidArgument("membership grid is empty");
  for (const auto& t : grid) {
    if (t <= 0) throw InvalidArgument("membership grid entries must be positive");
  }
}

MembershipReport refuted(const Rational& t, std::string reason) {
  return {MembershipVerdict::Refuted, t, std::move(reason)};
}

MembershipReport certified(std::string reason) {
  return {MembershipVerdict::Certified, std::nullopt, std::move(reason)};
}

std::string at(const Rational& t) { return " at t = " + to_string(t); }

}  // namespace

MembershipReport psi_membership(const ScalarFamily& fam, std::span<const Rational> grid,
                                unsigned horizon) {
  check_grid(grid);
  const Rational& c = fam.coefficient();
  const Rational& t0 = grid.front();
  switch (fam.kind()) {
    case ScalarFamily::Kind::Linear:
      if (c < 0) return refuted(t0, "psi(t) = " + to_string(c) + "t is negative" + at(t0));
      if (c >= 1) return refuted(t0, "psi(t) >= t" + at(t0));
      return certified("nondecreasing and sum of c^n t = ct/(1-c) converges for 0 <= c < 1");
    case ScalarFamily::Kind::Constant:
      if (c < 0) return refuted(t0, "psi takes a negative value");
      if (c > 0) return refuted(t0, "psi^n(t) = " + to_string(c) + " for n >= 1, so the series diverges" + at(t0));
      return certified("psi = 0 is nondecreasing with a zero series");
    case ScalarFamily::Kind::Table:
      break;
  }
  const auto& s = fam.samples();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].second < 0) return refuted(s[i].first, "psi takes a negative value" + at(s[i].first));
    if (i && s[i].second < s[i - 1].second) {
      return refuted(s[i].first, "psi decreases" + at(s[i].first));
    }
    if (s[i].first > 0 && s[i].second >= s[i].first) {
      return refuted(s[i].first, "psi(t) >= t" + at(s[i].first));
    }
  }
  std::size_t listed = 0;
  for (const auto& t : grid) {
    ExactValue v(t);
    bool on_grid = true;
    for (unsigned n = 0; n < horizon && !v.is_zero(); ++n) {
      ExactValue next;
      try {
        next = fam(v);
      } catch (const OffGrid&) {
        on_grid = n > 0;
        break;
      }
      if (next >= v) return refuted(*v.as_rational(), "psi(t) >= t" + at(*v.as_rational()));
      v = next;
    }
    if (on_grid) ++listed;
  }
  return {MembershipVerdict::ConsistentWith, std::nullopt,
          "nonnegative, nondecreasing and psi(t) < t on all samples; iterates checked from " +
              std::to_string(listed) + " of " + std::to_string(grid.size()) + " grid points"};
}

MembershipReport phi_membership(const ScalarFamily& fam, std::span<const Rational> grid) {
  check_grid(grid);
  const Rational& c = fam.coefficient();
  const Rational& t0 = grid.front();
  switch (fam.kind()) {
    case ScalarFamily::Kind::Linear:
      if (c < 0) return refuted(t0, "phi takes a negative value" + at(t0));
      if (c == 0) return refuted(t0, "phi(t) = 0 for t > 0" + at(t0));
      if (c >= 1) return refuted(t0, "phi(t) >= t" + at(t0));
      return certified("increasing, phi(0) = 0 and phi(t) = ct < t for 0 < c < 1");
    case ScalarFamily::Kind::Constant:
      if (c < 0) return refuted(t0, "phi takes a negative value" + at(t0));
      if (c == 0) return refuted(t0, "phi(t) = 0 for t > 0" + at(t0));
      return refuted(Rational(0), "phi(0) = " + to_string(c) + " is not 0");
    case ScalarFamily::Kind::Table:
      break;
  }
  const auto& s = fam.samples();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& [t, v] = s[i];
    if (v < 0) return refuted(t, "phi takes a negative value" + at(t));
    if (t == 0 && v != 0) return refuted(t, "phi(0) is not 0");
    if (t > 0 && v == 0) return refuted(t, "phi(t) = 0 for t > 0" + at(t));
    if (t > 0 && v >= t) return refuted(t, "phi(t) >= t" + at(t));
    if (i && v <= s[i - 1].second) return refuted(t, "phi is not increasing" + at(t));
  }
  return {MembershipVerdict::ConsistentWith, std::nullopt,
          "increasing, phi(0) = 0 where listed and 0 < phi(t) < t on all samples"};
}

// ---------------------------------------------------------------------------

AlphaFn AlphaFn::constant(Rational c) {
  if (c < 0) throw InvalidArgument("alpha must be nonnegative");
  AlphaFn a;
  a.c_ = std::move(c);
  return a;
}

AlphaFn AlphaFn::table(ImagePtr domain,
                       std::span<const std::tuple<Point, Point, Rational>> entries) {
  const std::size_t n = domain->size();
  std::vector<std::optional<Rational>> cells(n * n);
  for (const auto& [p, q, v] : entries) {
    auto i = domain->index_of(p);
    auto j = domain->index_of(q);
    if (!i || !j) {
      throw InvalidArgument("alpha entry (" + p.to_string() + ", " + q.to_string() +
                            ") is not a pair of domain points");
    }
    if (v < 0) throw InvalidArgument("alpha must be nonnegative");
    auto& cell = cells[*i * n + *j];
    if (cell && *cell != v) {
      throw InvalidArgument("alpha entry (" + p.to_string() + ", " + q.to_string() +
                            ") given twice");
    }
    cell = v;
  }
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (!cells[k]) {
      throw InvalidArgument("alpha table has no entry for (" + domain->point(k / n).to_string() +
                            ", " + domain->point(k % n).to_string() + ")");
    }
  }
  return from_function(std::move(domain),
                       [&](std::size_t i, std::size_t j) { return *cells[i * n + j]; });
}

AlphaFn AlphaFn::from_function(ImagePtr domain,
                               const std::function<Rational(std::size_t, std::size_t)>& f) {
  AlphaFn a;
  const std::size_t n = domain->size();
  a.table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = f(i, j);
      if (v < 0) throw InvalidArgument("alpha must be nonnegative");
      a.table_.push_back(std::move(v));
    }
  }
  a.domain_ = std::move(domain);
  return a;
}

Rational AlphaFn::operator()(std::size_t i, std::size_t j) const {
  if (!domain_) return c_;
  return table_[i * domain_->size() + j];
}

std::string AlphaFn::to_string() const {
  if (!domain_) return "const(" + digifix::to_string(c_) + ")";
  return "table(" + std::to_string(domain_->size()) + "x" + std::to_string(domain_->size()) + ")";
}

}  // namespace digifix
