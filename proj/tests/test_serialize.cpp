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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "linred/error.hpp"
#include "linred/model.hpp"
#include "linred/rational.hpp"
#include "linred/reductions.hpp"
#include "linred/serialize.hpp"

using namespace linred;

namespace {

MatrixGame rps() {
  Matrix m(3, 3);
  m(0, 1) = 1;
  m(0, 2) = -1;
  m(1, 0) = -1;
  m(1, 2) = 1;
  m(2, 0) = 1;
  m(2, 1) = -1;
  return MatrixGame(std::move(m));
}

LinearProgram sample_lp() {
  LinearProgram lp;
  lp.sense = Sense::Max;
  lp.objective = AffineFunction{
      Rational(0), {Rational(1), make_rational(BigInt(-1), BigInt(2))}};
  lp.constraints = {
      constraint_le(AffineFunction{Rational(0), {Rational(1), Rational(2)}},
                    AffineFunction{Rational(4), {Rational(0), Rational(0)}}),
      constraint_ge(AffineFunction{Rational(1), {Rational(0), Rational(1)}},
                    AffineFunction{Rational(0), {Rational(0), Rational(0)}}),
      constraint_eq(AffineFunction{Rational(0), {Rational(1), Rational(-1)}},
                    AffineFunction{Rational(1), {Rational(0), Rational(0)}}),
  };
  lp.var_signs = {VarSign::NonNeg, VarSign::Free};
  return lp;
}

const L1Problem kMedian{{AffineFunction{Rational(0), {Rational(1)}},
                         AffineFunction{Rational(-1), {Rational(1)}},
                         AffineFunction{Rational(-10), {Rational(1)}}}};

// Emits, parses back, re-emits: the value and the bytes must both survive.
void check_round_trip(const Problem& problem,
                      const std::optional<ReductionCertificate>& cert =
                          std::nullopt) {
  const std::string text = emit_problem(problem, cert);
  const ParsedDocument doc = parse_problem(text);
  CHECK(doc.problem == problem);
  CHECK(doc.certificate == cert);
  CHECK(emit_problem(doc.problem, doc.certificate) == text);
}

}  // namespace

TEST_CASE("canonical game emission is byte-stable") {
  const std::string expected = R"({
  "form": "game",
  "payoff": [
    [
      "0",
      "1",
      "-1"
    ],
    [
      "-1",
      "0",
      "1"
    ],
    [
      "1",
      "-1",
      "0"
    ]
  ]
}
)";
  CHECK(emit_problem(Problem{rps()}) == expected);
}

TEST_CASE("every problem form round-trips") {
  check_round_trip(Problem{rps()});
  check_round_trip(Problem{sample_lp()});
  check_round_trip(Problem{lp_to_standard(sample_lp()).first});
  check_round_trip(Problem{kMedian});
  check_round_trip(Problem{l1_to_cheb_direct(kMedian)});
  // Arity-zero problems keep their empty coefficient lists.
  check_round_trip(Problem{ChebyshevProblem{{AffineFunction{Rational(5), {}}}}});
}

TEST_CASE("every certificate kind round-trips") {
  const auto [lp, cheb_cert] = cheb_to_lp(l1_to_cheb_direct(kMedian));
  check_round_trip(Problem{lp}, ReductionCertificate{cheb_cert});

  const auto [lp2, l1_cert] = l1_to_lp(kMedian);
  check_round_trip(Problem{lp2}, ReductionCertificate{l1_cert});

  const auto [standard, std_cert] = lp_to_standard(sample_lp());
  check_round_trip(Problem{standard}, ReductionCertificate{std_cert});

  const auto [game, game_cert] = standard_to_game(standard);
  check_round_trip(Problem{game}, ReductionCertificate{game_cert});

  for (const ChebVariant variant :
       {ChebVariant::Literal, ChebVariant::Corrected}) {
    const auto [cheb, cc] = game_to_cheb(rps(), variant);
    check_round_trip(Problem{cheb}, ReductionCertificate{cc});
  }

  const auto [chain_cheb, chain_cert] = l1_to_cheb_linear(kMedian);
  check_round_trip(Problem{chain_cheb}, ReductionCertificate{chain_cert});
}

TEST_CASE("parsing normalizes non-canonical rationals") {
  const std::string text = R"({
    "form": "game",
    "payoff": [["0", "2/4", "-1/2"], ["-2/4", "0", "1/2"], ["1/2", "-1/2", "0"]]
  })";
  const ParsedDocument doc = parse_problem(text);
  const MatrixGame& g = std::get<MatrixGame>(doc.problem);
  CHECK(g.payoff()(0, 1) == make_rational(BigInt(1), BigInt(2)));
  // Re-emission is canonical: lowest terms, sorted keys, two-space indent.
  const std::string canonical = emit_problem(doc.problem);
  CHECK(canonical.find("2/4") == std::string::npos);
  CHECK(parse_problem(canonical).problem == doc.problem);
}

TEST_CASE("parsing rejects malformed documents") {
  CHECK_THROWS_AS(parse_problem("not json"), ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"payoff": []})"), ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"form": "polygon"})"), ParseError);
  // Floats are not exact; they are rejected outright.
  CHECK_THROWS_AS(
      parse_problem(R"({"form": "game", "payoff": [[0.0, 0.5], [-0.5, 0.0]]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_problem(R"({"form": "game", "payoff": [["0", "1/0"], ["-1", "0"]]})"),
      ParseError);
  // Structured but invalid: not skew-symmetric.
  CHECK_THROWS_AS(
      parse_problem(R"({"form": "game", "payoff": [["0", "1"], ["1", "0"]]})"),
      InvariantViolation);
}

TEST_CASE("parsing accepts bare JSON integers as rationals") {
  const std::string text =
      R"({"form": "game", "payoff": [[0, 1], [-1, 0]]})";
  const ParsedDocument doc = parse_problem(text);
  const MatrixGame& g = std::get<MatrixGame>(doc.problem);
  CHECK(g.payoff()(0, 1) == 1);
}

TEST_CASE("chain certificates enforce their stage order") {
  const auto [cheb, cert] = l1_to_cheb_linear(kMedian);
  std::string text = emit_problem(Problem{cheb}, ReductionCertificate{cert});
  // Swapping two stage kinds must be rejected.
  const auto first = text.find("\"l1_to_lp\"");
  REQUIRE(first != std::string::npos);
  text.replace(first, 10, "\"cheb_to_lp\"");
  CHECK_THROWS_AS(parse_problem(text), ParseError);
}

TEST_CASE("big numerators and denominators survive the trip") {
  const Rational huge = make_rational(
      BigInt("123456789012345678901234567890123456789"),
      BigInt("987654321098765432109876543210987654321"));
  Matrix m(2, 2);
  m(0, 1) = huge;
  m(1, 0) = -huge;
  check_round_trip(Problem{MatrixGame(std::move(m))});
}
