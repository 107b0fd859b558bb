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

// Previously published values of chi_{J_n} for n = 2..10 and of
// (-1)^n chi_{J_n}(-1) for n = 3..10, kept verbatim so computed tables can
// be diffed against them. Several rows disagree with the brute-force
// oracles; they are reference data, not ground truth.

#ifndef JNPOLY_REFERENCE_HPP
#define JNPOLY_REFERENCE_HPP

#include <optional>
#include <vector>

#include "jnpoly/charpoly.hpp"

namespace jnpoly::reference {

struct Row {
  int n = 0;
  IntPolynomial chi;
  std::optional<BigInt> chambers;  // printed (-1)^n chi(-1), n >= 3
};

const std::vector<Row>& table();

/// Row for n, or nullptr when n is outside 2..10.
const Row* find(int n);

struct CoefficientDiff {
  int power = 0;
  BigInt expected;
  BigInt actual;

  friend bool operator==(const CoefficientDiff&,
                         const CoefficientDiff&) = default;
};

/// Every power where the two polynomials differ, highest power first.
std::vector<CoefficientDiff> diff(const IntPolynomial& expected,
                                  const IntPolynomial& actual);

}  // namespace jnpoly::reference

#endif  // JNPOLY_REFERENCE_HPP
