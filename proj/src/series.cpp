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

#include "jnpoly/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jnpoly {

TruncationCaps TruncationCaps::meet(const TruncationCaps& a,
                                    const TruncationCaps& b) {
  return {std::min(a.dx, b.dx), std::min(a.dy, b.dy), std::min(a.dz, b.dz)};
}

Series::Series(TruncationCaps caps) : caps_(caps) {
  if (caps.dx < 0 || caps.dy < 0 || caps.dz < 0) {
    throw std::invalid_argument("truncation caps must be non-negative");
  }
}

Series Series::constant(TruncationCaps caps, const Rational& c) {
  return monomial(caps, {}, c);
}

Series Series::monomial(TruncationCaps caps, Exponent e, const Rational& c) {
  Series s(caps);
  s.add_term(e, c);
  return s;
}

Series& Series::add_term(Exponent e, const Rational& c) {
  if (!caps_.contains(e) || c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Rational Series::coefficient(int i, int j, int k) const {
  Exponent e{i, j, k};
  if (!caps_.contains(e)) {
    std::ostringstream msg;
    msg << "coefficient (" << i << "," << j << "," << k
        << ") lies beyond truncation caps (" << caps_.dx << "," << caps_.dy
        << "," << caps_.dz << ")";
    throw std::out_of_range(msg.str());
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::constant_term() const { return coefficient(0, 0, 0); }

Series Series::truncated(TruncationCaps caps) const {
  Series out(TruncationCaps::meet(caps_, caps));
  for (const auto& [e, c] : terms_) {
    if (out.caps_.contains(e)) out.terms_.emplace(e, c);
  }
  return out;
}

Series& Series::operator+=(const Series& other) {
  if (caps_ != other.caps_) *this = truncated(other.caps_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Series& Series::operator-=(const Series& other) {
  if (caps_ != other.caps_) *this = truncated(other.caps_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Series& Series::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const TruncationCaps caps = TruncationCaps::meet(a.caps_, b.caps_);
  Series out(caps);
  if (a.is_zero() || b.is_zero()) return out;

  // Dense accumulator indexed by degree triple; products are dense enough
  // at the caps used here that this beats repeated map lookups.
  const auto index = [&caps](int x, int y, int z) {
    return (static_cast<std::size_t>(x) * (caps.dy + 1) + y) * (caps.dz + 1) +
           z;
  };
  std::vector<Rational> acc(caps.dense_size());
  std::vector<char> touched(caps.dense_size(), 0);

  std::vector<std::pair<Exponent, const Rational*>> rhs;
  rhs.reserve(b.terms_.size());
  for (const auto& [e, c] : b.terms_) {
    if (caps.contains(e)) rhs.emplace_back(e, &c);
  }

  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    if (!caps.contains(ea)) continue;
    for (const auto& [eb, cb] : rhs) {
      const int x = ea.x + eb.x;
      if (x > caps.dx) break;  // rhs is sorted by x first
      const int y = ea.y + eb.y;
      const int z = ea.z + eb.z;
      if (y > caps.dy || z > caps.dz) continue;
      const std::size_t i = index(x, y, z);
      prod = ca * *cb;
      acc[i] += prod;
      touched[i] = 1;
    }
  }

  for (int x = 0; x <= caps.dx; ++x) {
    for (int y = 0; y <= caps.dy; ++y) {
      for (int z = 0; z <= caps.dz; ++z) {
        const std::size_t i = index(x, y, z);
        if (touched[i] && acc[i] != 0) {
          out.terms_.emplace_hint(out.terms_.end(), Exponent{x, y, z},
                                  std::move(acc[i]));
        }
      }
    }
  }
  return out;
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (e.x) os << "*x^" << e.x;
    if (e.y) os << "*y^" << e.y;
    if (e.z) os << "*z^" << e.z;
  }
  return os.str();
}

Series exp(const Series& f) {
  if (f.constant_term() != 0) {
    throw std::domain_error("exp: series has a nonzero constant term");
  }
  Series result = Series::constant(f.caps(), 1);
  Series term = result;
  // f has no constant term, so f^m vanishes modulo the caps for large m
  // and stays zero once it does.
  for (long m = 1;; ++m) {
    term = term * f;
    term *= Rational(1, m);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

Series log(const Series& f) {
  if (f.constant_term() != 1) {
    throw std::domain_error("log: series constant term is not 1");
  }
  const Series g = f - Series::constant(f.caps(), 1);
  Series result(f.caps());
  Series power = Series::constant(f.caps(), 1);
  for (long m = 1;; ++m) {
    power = power * g;
    if (power.is_zero()) break;
    result += power * Rational(m % 2 == 1 ? 1 : -1, m);
  }
  return result;
}

Series shift_rank_marker(const Series& f, int z_cap) {
  if (z_cap < 1) {
    throw std::invalid_argument("shift_rank_marker: z cap must be >= 1");
  }
  if (f.caps().dx < 1) {
    throw std::invalid_argument("shift_rank_marker: input x cap must be >= 1");
  }
  const TruncationCaps& in = f.caps();
  Series out(TruncationCaps{in.dx - 1, in.dy, z_cap});
  for (const auto& [e, c] : f.terms()) {
    if (e.z != 0) {
      throw std::domain_error("shift_rank_marker: input already contains z");
    }
    if (e.x == 0) {
      throw std::domain_error(
          "shift_rank_marker: term of x-degree 0 (isolated-vertex term not "
          "removed)");
    }
    out.add_term({e.x - 1, e.y, 1}, c);
  }
  return out;
}

}  // namespace jnpoly
