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

#ifndef JNPOLY_NUMERIC_HPP
#define JNPOLY_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jnpoly {

// Arbitrary-precision integers and rationals. gmpxx keeps mpq_class in
// lowest terms after every arithmetic operation.
using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an internal identity that must hold exactly does not
/// (a count that is not a non-negative integer, say). Always a bug or a
/// misconfigured truncation, never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// num/den in lowest terms. Prefer this to Rational(num, den), which does
/// not canonicalize.
Rational ratio(const BigInt& num, const BigInt& den);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);  // 0 when k < 0 or k > n

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

/// Converts `value * scale` to an integer, throwing ConsistencyError when
/// the product is not a non-negative integer. `what` names the quantity
/// in the error message.
BigInt exact_count(const Rational& value, const BigInt& scale,
                   const std::string& what);

}  // namespace jnpoly

#endif  // JNPOLY_NUMERIC_HPP
