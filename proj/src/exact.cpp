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

#include "digifix/exact.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "digifix/error.hpp"

namespace digifix {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational pow(const Rational& base, unsigned exponent) {
  return Rational(pow(numerator(base), exponent), pow(denominator(base), exponent));
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt integer_root(const BigInt& n, unsigned r) {
  if (n < 0) throw InvalidArgument("integer_root of a negative number");
  if (r == 0) throw InvalidArgument("integer_root with r = 0");
  if (r == 1 || n < 2) return n;
  // Newton iteration from an overestimate 2^ceil(bits/r).
  std::size_t bits = boost::multiprecision::msb(n) + 1;
  BigInt x = BigInt(1) << ((bits + r - 1) / r);
  while (true) {
    BigInt y = ((r - 1) * x + n / pow(x, r - 1)) / r;
    if (y >= x) break;
    x = std::move(y);
  }
  return x;
}

bool is_perfect_power(const BigInt& n, unsigned r, BigInt* root) {
  if (n < 0) return false;
  BigInt k = integer_root(n, r);
  if (pow(k, r) != n) return false;
  if (root) *root = k;
  return true;
}

ExactValue::ExactValue(const Rational& q) {
  if (q != 0) terms_.push_back({BigInt(1), q});
}

ExactValue ExactValue::root(const Rational& radicand, unsigned r) {
  if (radicand < 0) throw InvalidArgument("root of a negative radicand");
  if (r == 0) throw InvalidArgument("root index must be positive");
  ExactValue v;
  v.root_ = r;
  if (radicand == 0) return v;
  // (a/b)^(1/r) = (a * b^(r-1))^(1/r) / b
  const BigInt& a = numerator(radicand);
  const BigInt& b = denominator(radicand);
  v.insert(a * pow(b, r - 1), Rational(BigInt(1), b));
  return v;
}

void ExactValue::insert(BigInt m, Rational c) {
  if (c == 0) return;
  if (root_ == 1) {
    c *= m;
    m = 1;
  } else {
    for (unsigned d = 2; d < 64; ++d) {
      BigInt dr = pow(BigInt(d), root_);
      if (dr > m) break;
      while (m % dr == 0) {
        m /= dr;
        c *= d;
      }
    }
    BigInt k;
    if (m != 1 && is_perfect_power(m, root_, &k)) {
      c *= k;
      m = 1;
    }
  }
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    BigInt k;
    if (it->radicand == m ||
        (m != 1 && it->radicand != 1 &&
         is_perfect_power(m * pow(it->radicand, root_ - 1), root_, &k))) {
      // m^(1/r) = k / m' * m'^(1/r)
      it->coef += it->radicand == m ? c : c * Rational(k, it->radicand);
      if (it->coef == 0) terms_.erase(it);
      return;
    }
  }
  auto pos = std::lower_bound(terms_.begin(), terms_.end(), m,
                              [](const Term& t, const BigInt& key) { return t.radicand < key; });
  terms_.insert(pos, Term{std::move(m), std::move(c)});
}

void ExactValue::lift_to(unsigned r) {
  if (r == root_) return;
  unsigned factor = r / root_;
  std::vector<Term> old = std::move(terms_);
  terms_.clear();
  root_ = r;
  for (auto& t : old) insert(pow(t.radicand, factor), t.coef);
}

std::optional<Rational> ExactValue::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.front().radicand == 1) return terms_.front().coef;
  return std::nullopt;
}

std::optional<Rational> ExactValue::single_term_power() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1 || terms_.front().coef < 0) return std::nullopt;
  return pow(terms_.front().coef, root_) * Rational(terms_.front().radicand);
}

std::pair<Rational, Rational> ExactValue::bounds(unsigned bits) const {
  Rational lower = 0;
  Rational upper = 0;
  const Rational scale(BigInt(1), BigInt(1) << bits);
  for (const auto& t : terms_) {
    if (t.radicand == 1) {
      lower += t.coef;
      upper += t.coef;
      continue;
    }
    // lo <= m^(1/r) * 2^bits < lo + 1, strict because m is not a perfect power.
    BigInt lo = integer_root(t.radicand << (bits * root_), root_);
    Rational a = Rational(lo) * scale;
    Rational b = Rational(lo + 1) * scale;
    if (t.coef > 0) {
      lower += t.coef * a;
      upper += t.coef * b;
    } else {
      lower += t.coef * b;
      upper += t.coef * a;
    }
  }
  return {lower, upper};
}

int ExactValue::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return terms_.front().coef > 0 ? 1 : -1;
  for (unsigned bits = 64; bits <= (1u << 16); bits *= 2) {
    auto [lo, hi] = bounds(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw std::logic_error("ExactValue::sign failed to separate a nonzero value from 0");
}

double ExactValue::to_double() const {
  auto [lo, hi] = bounds(64);
  return static_cast<double>((lo + hi) / 2);
}

std::string ExactValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    if (t.radicand == 1) {
      out << digifix::to_string(c);
      continue;
    }
    std::string radical = root_ == 2 ? "sqrt(" + t.radicand.str() + ")"
                                     : t.radicand.str() + "^(1/" + std::to_string(root_) + ")";
    if (c == 1) {
      out << radical;
    } else if (c == -1) {
      out << "-" << radical;
    } else if (numerator(c) == 1) {
      out << radical << "/" << denominator(c).str();
    } else {
      out << "(" << digifix::to_string(c) << ")*" << radical;
    }
  }
  return out.str();
}

ExactValue ExactValue::operator-() const {
  ExactValue v = *this;
  for (auto& t : v.terms_) t.coef = -t.coef;
  return v;
}

ExactValue& ExactValue::operator+=(const ExactValue& other) {
  unsigned r = std::lcm(root_, other.root_);
  if (terms_.empty() && r == other.root_) {
    *this = other;
    return *this;
  }
  lift_to(r);
  if (other.root_ == r) {
    for (const auto& t : other.terms_) insert(t.radicand, t.coef);
  } else {
    unsigned factor = r / other.root_;
    for (const auto& t : other.terms_) insert(pow(t.radicand, factor), t.coef);
  }
  return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& other) { return *this += -other; }

ExactValue& ExactValue::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= factor;
  return *this;
}

std::strong_ordering operator<=>(const ExactValue& a, const ExactValue& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const ExactValue& a, const ExactValue& b) { return (a - b).is_zero(); }

const ExactValue& max(const ExactValue& a, const ExactValue& b) { return a < b ? b : a; }

Rational rational_between(const ExactValue& lo, const Rational& hi) {
  if (auto q = lo.as_rational()) {
    if (!(*q < hi)) throw InvalidArgument("rational_between: empty interval");
    return *q;
  }
  for (unsigned bits = 16; bits <= (1u << 16); bits *= 2) {
    auto [l, u] = lo.bounds(bits);
    if (l >= hi) break;
    if (u < hi) return u;
  }
  throw InvalidArgument("rational_between: empty interval");
}

}  // namespace digifix
