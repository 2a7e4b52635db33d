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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace digifix {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a", "-a", or "a/b". Throws InvalidArgument on malformed input or
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, "a/b" otherwise.
std::string to_string(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);

/// Three-way comparison; Boost numbers predate operator<=>.
std::strong_ordering compare(const Rational& a, const Rational& b);

/// floor(n^(1/r)) for n >= 0, r >= 1.
BigInt integer_root(const BigInt& n, unsigned r);

/// True iff n == k^r for some integer k >= 0; stores k in *root if given.
bool is_perfect_power(const BigInt& n, unsigned r, BigInt* root = nullptr);

/// An exact real number of the form  sum_i c_i * m_i^(1/r)  with rational
/// coefficients c_i and positive integer radicands m_i.
///
/// Every value is held in a canonical form in which no ratio m_i / m_j is a
/// rational r-th power (m = 1 carries the rational part). Real r-th roots of
/// pairwise inequivalent radicands are linearly independent over Q, so a
/// canonical value is zero exactly when it has no terms. The sign of a nonzero
/// value is then decided by bisecting integer roots until the enclosing
/// interval excludes zero; no floating point is involved.
///
/// Values with different root indices are combined over the lcm of the two.
class ExactValue {
 public:
  struct Term {
    BigInt radicand;
    Rational coef;
  };

  ExactValue() = default;
  explicit ExactValue(const Rational& q);
  explicit ExactValue(long long q) : ExactValue(Rational(q)) {}

  /// radicand^(1/r); radicand must be >= 0.
  static ExactValue root(const Rational& radicand, unsigned r);

  unsigned root_index() const { return root_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> as_rational() const;
  int sign() const;

  /// For a nonnegative single-term value c*m^(1/r) returns c^r * m, i.e. the
  /// r-th power of the value, which is rational.
  std::optional<Rational> single_term_power() const;

  /// Rational lower and upper bounds with denominators 2^bits.
  std::pair<Rational, Rational> bounds(unsigned bits) const;

  double to_double() const;
  std::string to_string() const;

  ExactValue operator-() const;
  ExactValue& operator+=(const ExactValue& other);
  ExactValue& operator-=(const ExactValue& other);
  ExactValue& operator*=(const Rational& factor);

  friend ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
  friend ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }
  friend ExactValue operator*(ExactValue a, const Rational& k) { return a *= k; }
  friend ExactValue operator*(const Rational& k, ExactValue a) { return a *= k; }

  friend std::strong_ordering operator<=>(const ExactValue& a, const ExactValue& b);
  friend bool operator==(const ExactValue& a, const ExactValue& b);

 private:
  void lift_to(unsigned r);
  void insert(BigInt radicand, Rational coef);

  unsigned root_ = 1;
  std::vector<Term> terms_;  // sorted by radicand
};

const ExactValue& max(const ExactValue& a, const ExactValue& b);

/// Returns a rational c with lo <= c < hi. Requires lo < hi.
Rational rational_between(const ExactValue& lo, const Rational& hi);

}  // namespace digifix
