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

#include "jnpoly/reference.hpp"

#include <algorithm>
#include <string>

namespace jnpoly::reference {

namespace {

IntPolynomial poly(std::initializer_list<const char*> descending) {
  std::vector<BigInt> coeffs;
  for (const char* c : descending) coeffs.emplace_back(c);
  return IntPolynomial::from_descending(coeffs);
}

std::vector<Row> build() {
  std::vector<Row> rows;
  rows.push_back({2, poly({"1", "-5", "6"}), std::nullopt});
  rows.push_back({3, poly({"1", "-9", "27", "-27"}), BigInt(64)});
  rows.push_back({4, poly({"1", "-14", "75", "-168", "104"}), BigInt(362)});
  rows.push_back(
      {5, poly({"1", "-20", "165", "-695", "1465", "-3649"}), BigInt(5995)});
  rows.push_back({6,
                  poly({"1", "-27", "315", "-2010", "7365", "-9285", "97605"}),
                  BigInt(116608)});
  rows.push_back({7,
                  poly({"1", "-35", "546", "-4865", "26565", "-92386",
                        "-252245", "-3082889"}),
                  BigInt(170770)});
  rows.push_back({8,
                  poly({"1", "-44", "882", "-10402", "78365", "-382662",
                        "1959447", "22977452", "104683724"}),
                  BigInt(84138075)});
  rows.push_back({9,
                  poly({"1", "-54", "1350", "-20286", "200403", "-1338708",
                        "8421021", "105101892", "1112954274", "866974176"}),
                  BigInt(150860029)});
  rows.push_back({10,
                  poly({"1", "-65", "1980", "-36840", "460215", "-4008081",
                        "24881535", "52962615", "7605232140", "71654230070",
                        "142378721936"}),
                  BigInt("78306150108")});
  return rows;
}

}  // namespace

const std::vector<Row>& table() {
  static const std::vector<Row> rows = build();
  return rows;
}

const Row* find(int n) {
  const auto& rows = table();
  auto it = std::find_if(rows.begin(), rows.end(),
                         [n](const Row& r) { return r.n == n; });
  return it == rows.end() ? nullptr : &*it;
}

std::vector<CoefficientDiff> diff(const IntPolynomial& expected,
                                  const IntPolynomial& actual) {
  std::vector<CoefficientDiff> out;
  const int top = std::max(expected.degree(), actual.degree());
  for (int p = top; p >= 0; --p) {
    BigInt e = expected.coefficient(p);
    BigInt a = actual.coefficient(p);
    if (e != a) out.push_back({p, std::move(e), std::move(a)});
  }
  return out;
}

}  // namespace jnpoly::reference
