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

#ifndef LINRED_ERROR_HPP_
#define LINRED_ERROR_HPP_

#include <exception>
#include <string>
#include <utility>

namespace linred {

// Root of the library's error hierarchy. Owns its message buffer so that
// multi-stage pullbacks can prepend stage context without losing the
// concrete error type.
class Error : public std::exception {
 public:
  explicit Error(std::string message) : message_(std::move(message)) {}

  const char* what() const noexcept override { return message_.c_str(); }

  void prepend_context(const std::string& context) {
    message_ = context + ": " + message_;
  }

 private:
  std::string message_;
};

// Operand shapes disagree (point length vs arity, certificate vs solution).
class DimensionError : public Error {
  using Error::Error;
};

// A type invariant would be violated (non-skew payoff matrix, zero
// denominator, arity mismatch inside a problem).
class InvariantViolation : public Error {
  using Error::Error;
};

// The game matrix is zero; every mixed strategy is optimal and the
// Chebyshev construction does not apply.
class TrivialGameError : public Error {
  using Error::Error;
};

// A claimed strategy fails x >= 0 or sum(x) = 1; the message carries the
// violated condition and witness values.
class NotAStrategyError : public Error {
  using Error::Error;
};

// A caller contract was broken (e.g. a strategy that is not optimal for
// the certificate's game).
class ContractViolationError : public Error {
  using Error::Error;
};

// Direct l1 -> Chebyshev reduction refused: 2^(m-1) functions would
// exceed the configured cap.
class CapExceededError : public Error {
  using Error::Error;
};

// A brute-force oracle refused an instance above its enumeration limit.
class LimitExceededError : public Error {
  using Error::Error;
};

// Malformed problem document.
class ParseError : public Error {
  using Error::Error;
};

}  // namespace linred

#endif  // LINRED_ERROR_HPP_
