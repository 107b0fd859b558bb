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

#include "jnpoly/numeric.hpp"

namespace jnpoly {

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

BigInt exact_count(const Rational& value, const BigInt& scale,
                   const std::string& what) {
  Rational scaled = value * scale;
  if (scaled.get_den() != 1) {
    throw ConsistencyError(what + " is not an integer: " + to_string(scaled));
  }
  if (scaled.get_num() < 0) {
    throw ConsistencyError(what + " is negative: " + to_string(scaled));
  }
  return scaled.get_num();
}

}  // namespace jnpoly
