// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Truncated formal power series in three commuting variables over the
// rationals.
//
//   x  marks rank (or order, for series that do not track components)
//   y  marks cardinality (edges plus colored vertices)
//   z  marks the number of bipartite components
//
// A series carries per-variable truncation caps. Every coefficient whose
// degrees are within the caps is exact; everything above them is unknown.
// Binary operations work at the component-wise minimum of their inputs'
// caps so an unknown term can never leak into a reported coefficient.

#ifndef JNPOLY_SERIES_HPP
#define JNPOLY_SERIES_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>

#include "jnpoly/numeric.hpp"

namespace jnpoly {

struct Exponent {
  int x = 0;
  int y = 0;
  int z = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

struct TruncationCaps {
  int dx = 0;
  int dy = 0;
  int dz = 0;

  bool contains(const Exponent& e) const {
    return e.x >= 0 && e.y >= 0 && e.z >= 0 && e.x <= dx && e.y <= dy &&
           e.z <= dz;
  }
  std::size_t dense_size() const {
    return static_cast<std::size_t>(dx + 1) * (dy + 1) * (dz + 1);
  }

  static TruncationCaps meet(const TruncationCaps& a, const TruncationCaps& b);

  friend bool operator==(const TruncationCaps&, const TruncationCaps&) = default;
};

class Series {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit Series(TruncationCaps caps);

  static Series constant(TruncationCaps caps, const Rational& c);
  static Series monomial(TruncationCaps caps, Exponent e, const Rational& c);

  const TruncationCaps& caps() const { return caps_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c to the coefficient of e. Terms outside the caps are dropped
  /// and a coefficient that cancels to zero is erased.
  Series& add_term(Exponent e, const Rational& c);

  /// Exact coefficient of x^i y^j z^k. Throws std::out_of_range when the
  /// degree lies beyond the caps: that coefficient is unknown, not zero.
  Rational coefficient(int i, int j, int k) const;
  Rational constant_term() const;

  /// Same series with tighter caps; caps may only shrink.
  Series truncated(TruncationCaps caps) const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Rational& scalar);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b);

  friend bool operator==(const Series&, const Series&) = default;

  std::string to_string() const;

 private:
  TruncationCaps caps_;
  Terms terms_;
};

/// Exponential of a series with zero constant term. Throws
/// std::domain_error otherwise.
Series exp(const Series& f);

/// Logarithm of a series with constant term exactly 1. Throws
/// std::domain_error otherwise.
Series log(const Series& f);

/// Multiplies a z-free series by z/x: c x^n y^k -> c x^(n-1) y^k z.
/// The result has x-cap one lower than the input (the input's top x-degree
/// is the last known one) and z-cap `z_cap` (>= 1); it is exact in z since
/// every output term has z-degree 1. Throws std::domain_error when the
/// input contains z or a term of x-degree 0.
Series shift_rank_marker(const Series& f, int z_cap = 1);

}  // namespace jnpoly

#endif  // JNPOLY_SERIES_HPP
