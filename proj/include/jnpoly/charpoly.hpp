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

#ifndef JNPOLY_CHARPOLY_HPP
#define JNPOLY_CHARPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "jnpoly/central_gf.hpp"
#include "jnpoly/numeric.hpp"

namespace jnpoly {

/// Univariate polynomial in t with big-integer coefficients; coeffs()[i] is
/// the coefficient of t^i. Trailing zeros are trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  /// From coefficients listed highest degree first.
  static IntPolynomial from_descending(const std::vector<BigInt>& coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(int power) const;
  BigInt leading() const;
  BigInt operator()(const BigInt& t) const;

  /// "t^3 - 9t^2 + 27t - 27"
  std::string to_string(char var = 't') const;
  /// Same layout, LaTeX exponents: "t^{10} - 65t^{9} + ..."
  std::string to_latex(char var = 't') const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

struct ChamberCounts {
  BigInt total;    // (-1)^n chi(-1)
  BigInt bounded;  // (-1)^n chi(+1)

  friend bool operator==(const ChamberCounts&, const ChamberCounts&) = default;
};

/// chi_{J_n}(t) = sum_r (sum_{c>=0} sum_{r+v<=n} C(n,r+v) (-1)^c Gamma[r,c,v])
/// t^(n-r), read from precomputed Gamma coefficients. The c = 0 term (the
/// empty subarrangement) supplies the leading 1.
IntPolynomial chi_from_gamma(int n, const GammaCoefficients& gamma);

IntPolynomial chi(int n, Mode mode);

/// Zaslavsky evaluations. No range check here: PAPER-mode polynomials are
/// not guaranteed to be characteristic polynomials, so their "counts" are
/// reported as computed.
ChamberCounts chambers(const IntPolynomial& chi_n);
ChamberCounts chambers(int n, Mode mode);

/// [chi(2), ..., chi(n_max)] from a single Gamma at the caps for n_max.
std::vector<IntPolynomial> chi_table(int n_max, Mode mode);

/// Index i of the first coefficient of t^(n-i) whose sign is not (-1)^i
/// (zero counts as a violation); nullopt when signs strictly alternate.
std::optional<int> first_sign_violation(const IntPolynomial& p);

/// Number of hyperplanes of J_n: C(n,2) + 2n.
long hyperplane_count(int n);

}  // namespace jnpoly

#endif  // JNPOLY_CHARPOLY_HPP
