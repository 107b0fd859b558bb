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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jnpoly/charpoly.hpp"
#include "jnpoly/oracle.hpp"

using namespace jnpoly;

namespace {

IntPolynomial desc(std::initializer_list<long> coeffs) {
  std::vector<BigInt> v;
  for (long c : coeffs) v.emplace_back(c);
  return IntPolynomial::from_descending(v);
}

}  // namespace

TEST_CASE("IntPolynomial") {
  const IntPolynomial p = desc({1, -9, 27, -27});
  CHECK(p.degree() == 3);
  CHECK(p.to_string() == "t^3 - 9t^2 + 27t - 27");
  CHECK(p.to_latex() == "t^{3} - 9t^{2} + 27t - 27");
  CHECK(p(BigInt(7)) == 64);
  CHECK(desc({-1, 1, 0}).to_string() == "-t^2 + t");
  CHECK(desc({0, 0, 5}).degree() == 0);
  CHECK(IntPolynomial().to_string() == "0");
}

TEST_CASE("chi reproduces the worked examples in both modes") {
  for (Mode mode : {Mode::kCorrected, Mode::kPaper}) {
    CHECK(chi(2, mode).to_string() == "t^2 - 5t + 6");
    CHECK(chi(3, mode).to_string() == "t^3 - 9t^2 + 27t - 27");
  }
  CHECK(chi(1, Mode::kCorrected) == desc({1, -2}));
  CHECK_THROWS_AS(chi(0, Mode::kCorrected), std::invalid_argument);
}

TEST_CASE("chi(4)") {
  // Brute-force value; the previously published row -168t + 104 is wrong.
  const IntPolynomial c4 = chi(4, Mode::kCorrected);
  CHECK(c4 == desc({1, -14, 75, -181, 165}));
  CHECK(c4 == oracle::whitney_chi(4));
  // The literal type-(1) series double counts two disjoint edges.
  CHECK(chi(4, Mode::kPaper) == desc({1, -14, 75, -181, 168}));
}

TEST_CASE("chi(5)") {
  CHECK(chi(5, Mode::kCorrected) == desc({1, -20, 165, -695, 1480, -1263}));
  CHECK(chi(5, Mode::kPaper) == desc({1, -20, 165, -695, 1495, -1313}));
}

TEST_CASE("chambers") {
  CHECK(chambers(2, Mode::kCorrected) == ChamberCounts{12, 2});
  CHECK(chambers(3, Mode::kCorrected) == ChamberCounts{64, 8});
  CHECK(chambers(4, Mode::kCorrected).total == 436);
  CHECK(chambers(1, Mode::kCorrected) == ChamberCounts{3, 1});
}

TEST_CASE("chi_table") {
  for (Mode mode : {Mode::kCorrected, Mode::kPaper}) {
    const auto table = chi_table(10, mode);
    REQUIRE(table.size() == 9);
    CHECK(table.front().to_string() == "t^2 - 5t + 6");
    for (int n = 2; n <= 10; ++n) {
      const IntPolynomial& p = table[static_cast<std::size_t>(n - 2)];
      CAPTURE(n);
      CHECK(p.degree() == n);
      CHECK(p.leading() == 1);
      CHECK(p.coefficient(n - 1) == -hyperplane_count(n));
      if (n <= 6) CHECK(p == chi(n, mode));
    }
  }
  CHECK_THROWS_AS(chi_table(1, Mode::kCorrected), std::invalid_argument);
}

TEST_CASE("corrected polynomials behave like characteristic polynomials") {
  const auto table = chi_table(10, Mode::kCorrected);
  for (const IntPolynomial& p : table) {
    CAPTURE(p.to_string());
    CHECK_FALSE(first_sign_violation(p).has_value());
    const ChamberCounts ch = chambers(p);
    CHECK(ch.total > 0);
    CHECK(ch.bounded >= 0);
    CHECK(ch.bounded <= ch.total);
  }
}

TEST_CASE("first_sign_violation") {
  CHECK_FALSE(first_sign_violation(desc({1, -5, 6})).has_value());
  CHECK(first_sign_violation(desc({1, -5, -6})) == 2);
  CHECK(first_sign_violation(desc({1, 0, 6})) == 1);
}

TEST_CASE("chi agrees with finite-field counts for small n") {
  for (int n = 1; n <= 4; ++n) {
    const IntPolynomial p = chi(n, Mode::kCorrected);
    for (unsigned q : {5u, 7u, 11u, 13u}) {
      CAPTURE(n);
      CAPTURE(q);
      CHECK(p(BigInt(q)) == oracle::finite_field_count(n, q));
    }
  }
}
