// Copyright 2026 The linred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINRED_RATIONAL_HPP_
#define LINRED_RATIONAL_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace linred {

// Every number in the library is an exact rational, kept in lowest terms
// with a positive denominator. There is no floating point anywhere.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using Vector = std::vector<Rational>;

// num/den with explicit sign normalization and canonicalization.
// Throws InvariantViolation on a zero denominator.
//
// Construction from raw parts must go through here: the backend's string
// constructor does not reduce to lowest terms, and its (int, int)
// constructor treats negative denominators as unsigned.
Rational make_rational(const BigInt& num, const BigInt& den);

// Accepts "p", "+p", "-p", or "p/q" with optionally signed parts.
// Throws ParseError on anything else (including "1/0").
Rational parse_rational(std::string_view text);

// Lowest-terms text: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

std::string to_string(const Vector& values, char separator = ' ');

}  // namespace linred

#endif  // LINRED_RATIONAL_HPP_
