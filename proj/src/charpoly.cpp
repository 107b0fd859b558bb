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

#include "jnpoly/charpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace jnpoly {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_descending(const std::vector<BigInt>& coeffs) {
  return IntPolynomial(std::vector<BigInt>(coeffs.rbegin(), coeffs.rend()));
}

BigInt IntPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

BigInt IntPolynomial::leading() const {
  return coeffs_.empty() ? BigInt(0) : coeffs_.back();
}

BigInt IntPolynomial::operator()(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

namespace {

std::string render(const std::vector<BigInt>& coeffs, char var, bool latex) {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = static_cast<int>(coeffs.size()) - 1; p >= 0; --p) {
    const BigInt& c = coeffs[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || p == 0) os << mag.get_str();
    if (p >= 1) os << var;
    if (p >= 2) {
      if (latex) {
        os << "^{" << p << "}";
      } else {
        os << "^" << p;
      }
    }
  }
  return os.str();
}

}  // namespace

std::string IntPolynomial::to_string(char var) const {
  return render(coeffs_, var, false);
}

std::string IntPolynomial::to_latex(char var) const {
  return render(coeffs_, var, true);
}

long hyperplane_count(int n) {
  return static_cast<long>(n) * (n - 1) / 2 + 2L * n;
}

IntPolynomial chi_from_gamma(int n, const GammaCoefficients& gamma) {
  if (n < 1) throw std::invalid_argument("chi: n must be >= 1");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [key, count] : gamma.entries()) {
    const auto [r, c, v] = key;
    if (r + v > n) continue;
    BigInt term = binomial(n, r + v) * count;
    if (c % 2 != 0) term = -term;
    coeffs[static_cast<std::size_t>(n - r)] += term;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial chi(int n, Mode mode) {
  if (n < 1) throw std::invalid_argument("chi: n must be >= 1");
  const Series gamma = gamma_product(central_caps(n), mode);
  return chi_from_gamma(n, extract_counts(gamma));
}

ChamberCounts chambers(const IntPolynomial& chi_n) {
  const int n = chi_n.degree();
  const int sign = n % 2 == 0 ? 1 : -1;
  return {sign * chi_n(BigInt(-1)), sign * chi_n(BigInt(1))};
}

ChamberCounts chambers(int n, Mode mode) { return chambers(chi(n, mode)); }

std::vector<IntPolynomial> chi_table(int n_max, Mode mode) {
  if (n_max < 2) throw std::invalid_argument("chi_table: n_max must be >= 2");
  const GammaCoefficients gamma =
      extract_counts(gamma_product(central_caps(n_max), mode));
  std::vector<IntPolynomial> out;
  out.reserve(static_cast<std::size_t>(n_max) - 1);
  for (int n = 2; n <= n_max; ++n) out.push_back(chi_from_gamma(n, gamma));
  return out;
}

std::optional<int> first_sign_violation(const IntPolynomial& p) {
  const int n = p.degree();
  for (int i = 0; i <= n; ++i) {
    const int s = sgn(p.coefficient(n - i));
    if (s != (i % 2 == 0 ? 1 : -1)) return i;
  }
  return std::nullopt;
}

}  // namespace jnpoly
