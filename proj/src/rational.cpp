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

#include "linred/rational.hpp"

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>

#include "linred/error.hpp"

namespace linred {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw InvariantViolation("rational with zero denominator");
  }
  // Division canonicalizes (sign and gcd); the raw two-argument rational
  // constructor does neither reliably, so it is avoided everywhere.
  return Rational(num) / Rational(den);
}

namespace {

// [+-]?digits, at least one digit. Returns false on anything else.
bool parse_integer(std::string_view text, BigInt* out) {
  if (text.empty()) return false;
  std::size_t start = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    start = 1;
  }
  if (start == text.size()) return false;
  BigInt magnitude = 0;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
    magnitude *= 10;
    magnitude += text[i] - '0';
  }
  *out = negative ? BigInt(-magnitude) : magnitude;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  const bool num_ok = parse_integer(text.substr(0, slash), &num);
  bool den_ok = true;
  if (slash != std::string_view::npos) {
    den_ok = parse_integer(text.substr(slash + 1), &den);
  }
  if (!num_ok || !den_ok) {
    throw ParseError("not a rational: \"" + std::string(text) +
                     "\" (expected \"p\" or \"p/q\")");
  }
  if (den == 0) {
    throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(const Vector& values, char separator) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << separator;
    out << values[i].str();
  }
  return out.str();
}

}  // namespace linred
