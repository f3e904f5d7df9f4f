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
//
// JSON problem documents. One object per file with a "form" field in
// {"lp", "standard", "game", "cheb", "l1"}; rationals are strings ("p/q"
// or an integer string); matrices are arrays of row arrays; an optional
// reduction certificate sits under "certificate". Emission is canonical:
// lowest-terms rationals, alphabetical keys, two-space indentation, one
// trailing newline, so parse(emit(p)) == p and emit(parse(d)) is the
// canonical form of d.

#ifndef LINRED_SERIALIZE_HPP_
#define LINRED_SERIALIZE_HPP_

#include <optional>
#include <string>
#include <variant>

#include "linred/certificate.hpp"
#include "linred/model.hpp"

namespace linred {

using Problem = std::variant<LinearProgram, StandardLP, MatrixGame,
                             ChebyshevProblem, L1Problem>;

struct ParsedDocument {
  Problem problem;
  std::optional<ReductionCertificate> certificate;
};

// The "form" value for a problem ("lp", "standard", "game", "cheb", "l1").
const char* form_name(const Problem& problem);

// Throws ParseError (with the JSON path or parse position in the message)
// on malformed documents, and InvariantViolation when the document decodes
// but breaks a type invariant (for a non-skew game, the offending index
// pair is reported).
ParsedDocument parse_problem(const std::string& text);

std::string emit_problem(
    const Problem& problem,
    const std::optional<ReductionCertificate>& certificate = std::nullopt);

}  // namespace linred

#endif  // LINRED_SERIALIZE_HPP_
