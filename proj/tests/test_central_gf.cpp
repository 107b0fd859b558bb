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

#include "jnpoly/central_gf.hpp"
#include "jnpoly/oracle.hpp"
#include "support/brute_force.hpp"

using namespace jnpoly;

TEST_CASE("gamma0") {
  const Series g = gamma0({3, 6, 3});
  CHECK(g.coefficient(0, 0, 0) == 1);
  CHECK(g.coefficient(1, 1, 1) == Rational(1, 2));
  CHECK(g.coefficient(2, 2, 1) == Rational(1, 2));
  CHECK(g.coefficient(2, 2, 2) == Rational(1, 8));
  CHECK(g.coefficient(3, 3, 2) == Rational(1, 4));
  CHECK(g.coefficient(3, 3, 3) == Rational(1, 48));
  CHECK(g.coefficient(3, 3, 1) == Rational(2, 3));  // 16 trees / 4!

  SUBCASE("every non-constant monomial carries z") {
    for (const auto& [e, c] : gamma0(central_caps(8)).terms()) {
      CHECK((e.z >= 1 || (e.x == 0 && e.y == 0)));
    }
  }
}

TEST_CASE("gamma1") {
  const TruncationCaps caps = central_caps(6);
  const Series paper = gamma1(caps, Mode::kPaper);
  const Series corrected = gamma1(caps, Mode::kCorrected);

  CHECK(paper.coefficient(3, 3, 0) == Rational(1, 6));
  CHECK(corrected.coefficient(3, 3, 0) == Rational(1, 6));
  CHECK(paper.coefficient(0, 0, 0) == 1);
  CHECK(corrected.coefficient(0, 0, 0) == 1);

  SUBCASE("modes agree below order 4") {
    for (int n = 0; n <= 3; ++n) {
      for (int k = 0; k <= caps.dy; ++k) {
        CHECK(paper.coefficient(n, k, 0) == corrected.coefficient(n, k, 0));
      }
    }
  }
  SUBCASE("first divergence: two disjoint edges at order 4") {
    CHECK(paper.coefficient(4, 2, 0) == Rational(1, 8));
    CHECK(corrected.coefficient(4, 2, 0) == 0);
    for (int k = 0; k <= caps.dy; ++k) {
      if (k == 2) continue;
      CHECK(paper.coefficient(4, k, 0) == corrected.coefficient(4, k, 0));
    }
  }
  SUBCASE("triangle plus edge at order 5") {
    CHECK(paper.coefficient(5, 4, 0) * 120 == 10);
    CHECK(corrected.coefficient(5, 4, 0) == 0);
  }
  SUBCASE("each mode matches its enumerated class for n <= 6") {
    for (int n = 2; n <= 6; ++n) {
      const oracle::GraphCensus census = oracle::enumerate_graphs(n);
      const BigInt nf = factorial(n);
      for (int k = 1; k <= n * (n - 1) / 2; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        const auto all_odd = census.all_components_non_bipartite.count(k)
                                 ? census.all_components_non_bipartite.at(k)
                                 : 0;
        CHECK(corrected.coefficient(n, k, 0) * nf ==
              static_cast<unsigned long>(all_odd));
        CHECK(paper.coefficient(n, k, 0) * nf ==
              static_cast<unsigned long>(census.no_isolated(k) -
                                         census.connected_bipartite(k)));
      }
    }
  }
}

TEST_CASE("gamma2") {
  const Series g = gamma2(central_caps(4));
  CHECK(g.coefficient(0, 0, 0) == 1);
  CHECK(g.coefficient(1, 1, 0) == 2);
  CHECK(g.coefficient(2, 2, 0) == 2);
  CHECK(g.coefficient(3, 3, 0) == Rational(4, 3));
  CHECK(g.terms().size() == 5);
  for (const auto& [e, c] : g.terms()) CHECK(e.z == 0);
}

TEST_CASE("gamma3_connected") {
  const Series g = gamma3_connected(central_caps(4));
  CHECK(g.coefficient(2, 2, 0) * 2 == 4);
  CHECK(g.coefficient(2, 3, 0) * 2 == 2);
  CHECK(g.coefficient(3, 3, 0) * 6 == 18);  // 3 paths x 3 vertices x 2
  CHECK(g.coefficient(1, 1, 0) == 0);       // no r = 1 term

  SUBCASE("matches enumeration of connected colored graphs") {
    for (int m = 2; m <= 4; ++m) {
      const auto census = testing::colored_census(m);
      for (int c = 0; c <= central_caps(m).dy; ++c) {
        CAPTURE(m);
        CAPTURE(c);
        const auto it = census.connected_colored.find(c);
        const unsigned long expected =
            it == census.connected_colored.end() ? 0 : it->second;
        CHECK(g.coefficient(m, c, 0) * factorial(m) == expected);
      }
    }
  }
}

TEST_CASE("gamma3") {
  const Series g = gamma3(central_caps(3));
  CHECK(g.coefficient(0, 0, 0) == 1);
  CHECK(g.coefficient(2, 2, 0) == 2);
  CHECK(g.coefficient(2, 3, 0) == 1);
  CHECK(g.coefficient(3, 3, 0) == 3);
  CHECK(g.coefficient(3, 4, 0) == 3);
  CHECK(g.coefficient(3, 5, 0) == 1);
  for (const auto& [e, c] : g.terms()) CHECK(e.z == 0);
}

TEST_CASE("gamma_product") {
  const TruncationCaps caps = central_caps(2);
  const Series g = gamma_product(caps, Mode::kCorrected);
  CHECK(g.coefficient(0, 0, 0) == 1);
  CHECK(g.coefficient(1, 1, 0) == 2);
  CHECK(g.coefficient(1, 1, 1) == Rational(1, 2));
  CHECK(g.coefficient(2, 2, 0) == 4);
  CHECK(g.coefficient(2, 3, 0) == 1);

  SUBCASE("the triangle enters through gamma1") {
    const TruncationCaps c3 = central_caps(3);
    Series without = gamma0(c3) * gamma2(c3);
    without = without * gamma3(c3);
    const Series with = gamma_product(c3, Mode::kPaper);
    CHECK(with.coefficient(3, 3, 0) - without.coefficient(3, 3, 0) ==
          Rational(1, 6));
  }
}

TEST_CASE("extract_counts") {
  const GammaCoefficients gamma =
      extract_counts(gamma_product(central_caps(2), Mode::kCorrected));
  CHECK(gamma.at({0, 0, 0}) == 1);
  CHECK(gamma.at({1, 1, 0}) == 2);
  CHECK(gamma.at({1, 1, 1}) == 1);
  CHECK(gamma.at({2, 2, 0}) == 8);
  CHECK(gamma.at({2, 3, 0}) == 2);

  SUBCASE("non-integer coefficient is a consistency failure") {
    Series bad = Series::monomial({2, 2, 1}, {1, 1, 0}, Rational(1, 2));
    CHECK_THROWS_AS(extract_counts(bad), ConsistencyError);
  }
}

TEST_CASE("Gamma matches direct enumeration on exactly m vertices") {
  for (Mode mode : {Mode::kCorrected, Mode::kPaper}) {
    const int top = mode == Mode::kCorrected ? 5 : 3;
    const GammaCoefficients gamma =
        extract_counts(gamma_product(central_caps(top), mode));
    for (int m = 1; m <= top; ++m) {
      const auto census = testing::colored_census(m);
      CHECK(census.criterion_mismatches == 0);
      std::map<std::array<int, 3>, BigInt> from_gf;
      for (const auto& [key, count] : gamma.entries()) {
        if (key[0] + key[2] == m) from_gf[key] = count;
      }
      std::map<std::array<int, 3>, BigInt> from_census;
      for (const auto& [key, count] : census.gamma) {
        from_census[key] = static_cast<unsigned long>(count);
      }
      CAPTURE(m);
      CAPTURE(to_string(mode));
      CHECK(from_gf == from_census);
    }
  }
}

TEST_CASE("Gamma reassembles the central census for n <= 5") {
  const GammaCoefficients gamma =
      extract_counts(gamma_product(central_caps(5), Mode::kCorrected));
  for (int n = 1; n <= 5; ++n) {
    const CountTable<2> census = oracle::central_census(n);
    CountTable<2> assembled;
    for (const auto& [key, count] : gamma.entries()) {
      const auto [r, c, v] = key;
      if (r + v <= n) assembled.add({r, c}, binomial(n, r + v) * count);
    }
    CAPTURE(n);
    CHECK(assembled == census);
  }
}

TEST_CASE("Gamma coefficients are non-negative integers up to n = 10") {
  for (Mode mode : {Mode::kCorrected, Mode::kPaper}) {
    GammaCoefficients gamma;
    CHECK_NOTHROW(gamma = extract_counts(gamma_product(central_caps(10), mode)));
    CHECK(gamma.at({0, 0, 0}) == 1);
    for (const auto& [key, count] : gamma.entries()) {
      CHECK(count > 0);
      // The literal type-(1) series also admits bipartite components at
      // full order, so rank <= cardinality only holds in corrected mode.
      if (mode == Mode::kCorrected) CHECK(key[1] >= key[0]);
    }
  }
}

TEST_CASE("mode parsing") {
  CHECK(parse_mode("paper") == Mode::kPaper);
  CHECK(parse_mode("corrected") == Mode::kCorrected);
  CHECK_THROWS_AS(parse_mode("other"), std::invalid_argument);
  CHECK(to_string(Mode::kCorrected) == "corrected");
}
