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

#include "linred/model.hpp"
#include "linred/rational.hpp"
#include "linred/reductions.hpp"
#include "linred/solvers.hpp"

using namespace linred;

namespace {

Rational rat(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

AffineFunction affine(Rational constant, Vector coefficients) {
  return AffineFunction{std::move(constant), std::move(coefficients)};
}

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

LinearProgram box_lp() {
  // maximize x1 + x2 with x1 + x2 <= 3, x1 <= 2, x >= 0.
  LinearProgram lp;
  lp.sense = Sense::Max;
  lp.objective = affine(Rational(0), {Rational(1), Rational(1)});
  lp.constraints = {
      constraint_le(affine(Rational(0), {Rational(1), Rational(1)}),
                    affine(Rational(3), {Rational(0), Rational(0)})),
      constraint_le(affine(Rational(0), {Rational(1), Rational(0)}),
                    affine(Rational(2), {Rational(0), Rational(0)})),
  };
  lp.var_signs = {VarSign::NonNeg, VarSign::NonNeg};
  return lp;
}

LinearProgram infeasible_lp() {
  // x1 <= 0 and x1 >= 1.
  LinearProgram lp;
  lp.sense = Sense::Max;
  lp.objective = affine(Rational(0), {Rational(1)});
  lp.constraints = {
      constraint_le(affine(Rational(0), {Rational(1)}),
                    affine(Rational(0), {Rational(0)})),
      constraint_ge(affine(Rational(0), {Rational(1)}),
                    affine(Rational(1), {Rational(0)})),
  };
  lp.var_signs = {VarSign::NonNeg};
  return lp;
}

LinearProgram unbounded_lp() {
  LinearProgram lp;
  lp.sense = Sense::Max;
  lp.objective = affine(Rational(0), {Rational(1)});
  lp.constraints = {constraint_ge(affine(Rational(0), {Rational(1)}),
                                  affine(Rational(1), {Rational(0)}))};
  lp.var_signs = {VarSign::NonNeg};
  return lp;
}

}  // namespace

TEST_CASE("general solver handles all senses and statuses") {
  const Solution opt = simplex_solve(box_lp());
  REQUIRE(opt.status == SolutionStatus::Optimal);
  CHECK(*opt.value == 3);
  CHECK(eval_affine(box_lp().objective, *opt.point) == 3);

  CHECK(simplex_solve(infeasible_lp()).status == SolutionStatus::Infeasible);
  CHECK(simplex_solve(unbounded_lp()).status == SolutionStatus::Unbounded);

  LinearProgram min_form = box_lp();
  min_form.sense = Sense::Min;
  min_form.objective = affine(Rational(4), {Rational(-1), Rational(-1)});
  const Solution min_opt = simplex_solve(min_form);
  REQUIRE(min_opt.status == SolutionStatus::Optimal);
  CHECK(*min_opt.value == 1);  // 4 - 3
}

TEST_CASE("free variables pass through the general solver") {
  // minimize -x1 with x1 = 2, x1 free.
  LinearProgram lp;
  lp.sense = Sense::Min;
  lp.objective = affine(Rational(0), {Rational(-1)});
  lp.constraints = {constraint_eq(affine(Rational(0), {Rational(1)}),
                                  affine(Rational(2), {Rational(0)}))};
  lp.var_signs = {VarSign::Free};
  const Solution s = simplex_solve(lp);
  REQUIRE(s.status == SolutionStatus::Optimal);
  CHECK(*s.point == Vector{Rational(2)});
  CHECK(*s.value == -2);
}

TEST_CASE("game solver finds the uniform optimum of rock-paper-scissors") {
  const auto [strategy, t_max] = solve_game(rps());
  CHECK(strategy.probabilities() == Vector(3, rat(1, 3)));
  CHECK(t_max == rat(1, 3));
}

TEST_CASE("game solver on the zero game returns uniform") {
  const auto [strategy, t_max] = solve_game(MatrixGame(Matrix(2, 2)));
  CHECK(strategy.probabilities() == Vector(2, rat(1, 2)));
  CHECK(t_max == rat(1, 2));
}

TEST_CASE("game solver reports a zero last coordinate when forced") {
  // Embedding of an unbounded program: row 2 of Mz <= 0 reads t <= 0.
  Matrix m(3, 3);
  m(0, 2) = -1;
  m(1, 2) = 1;
  m(2, 0) = 1;
  m(2, 1) = -1;
  const auto [strategy, t_max] = solve_game(MatrixGame(std::move(m)));
  CHECK(t_max == 0);
  CHECK(strategy.probabilities().back() == 0);
}

TEST_CASE("max-abs and sum-abs solvers return exact optima") {
  const ChebyshevProblem pair{{affine(Rational(1), {Rational(1)}),
                               affine(Rational(-1), {Rational(1)})}};
  const Solution cheb = solve_cheb(pair);
  REQUIRE(cheb.status == SolutionStatus::Optimal);
  CHECK(*cheb.point == Vector{Rational(0)});
  CHECK(*cheb.value == 1);

  const L1Problem median{{affine(Rational(0), {Rational(1)}),
                          affine(Rational(-1), {Rational(1)}),
                          affine(Rational(-10), {Rational(1)})}};
  const Solution l1 = solve_l1(median);
  REQUIRE(l1.status == SolutionStatus::Optimal);
  CHECK(*l1.point == Vector{Rational(1)});
  CHECK(*l1.value == 10);
}

TEST_CASE("the game route classifies programs like the simplex route") {
  const Solution via_game = solve_lp_via_game(box_lp());
  REQUIRE(via_game.status == SolutionStatus::Optimal);
  CHECK(*via_game.value == 3);
  CHECK(eval_affine(box_lp().objective, *via_game.point) == 3);

  CHECK(solve_lp_via_game(infeasible_lp()).status ==
        SolutionStatus::Infeasible);
  CHECK(solve_lp_via_game(unbounded_lp()).status ==
        SolutionStatus::Unbounded);
}

TEST_CASE("the game route respects minimization constants") {
  LinearProgram lp;
  lp.sense = Sense::Min;
  lp.objective = affine(Rational(3), {Rational(-1)});
  lp.constraints = {constraint_le(affine(Rational(0), {Rational(1)}),
                                  affine(Rational(2), {Rational(0)}))};
  lp.var_signs = {VarSign::NonNeg};
  const Solution s = solve_lp_via_game(lp);
  REQUIRE(s.status == SolutionStatus::Optimal);
  CHECK(*s.point == Vector{Rational(2)});
  CHECK(*s.value == 1);
}
