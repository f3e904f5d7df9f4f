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

#include "linred/solvers.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "linred/error.hpp"
#include "linred/rational.hpp"
#include "linred/reductions.hpp"
#include "linred/simplex.hpp"

namespace linred {

Solution simplex_solve(const LinearProgram& p) {
  auto [standard, cert] = lp_to_standard(p);
  return standard_sol_pullback(cert, solve_standard(standard));
}

namespace {

// x >= 0, sum(x) = 1, and rows of factor*M x <= t (t either a free
// variable column or absent).
LinearProgram strategy_polytope_lp(const MatrixGame& g, bool with_t) {
  const std::size_t size = g.size();
  const std::size_t vars = size + (with_t ? 1 : 0);
  LinearProgram lp;
  lp.var_signs.assign(size, VarSign::NonNeg);
  if (with_t) lp.var_signs.push_back(VarSign::Free);
  for (std::size_t i = 0; i < size; ++i) {
    AffineFunction row{Rational(0), Vector(vars)};
    for (std::size_t j = 0; j < size; ++j) {
      row.coefficients[j] = g.payoff()(i, j);
    }
    AffineFunction bound{Rational(0), Vector(vars)};
    if (with_t) bound.coefficients[size] = 1;
    lp.constraints.push_back(constraint_le(std::move(row), std::move(bound)));
  }
  AffineFunction total{Rational(0), Vector(vars)};
  for (std::size_t j = 0; j < size; ++j) total.coefficients[j] = 1;
  lp.constraints.push_back(
      constraint_eq(std::move(total), AffineFunction{Rational(1), Vector(vars)}));
  return lp;
}

}  // namespace

std::pair<Strategy, Rational> solve_game(const MatrixGame& g) {
  const std::size_t size = g.size();
  if (g.is_zero()) {
    // Every strategy is optimal; report the uniform one.
    Strategy uniform = uniform_strategy(size);
    Rational t_max = uniform.probabilities().back();
    return {std::move(uniform), std::move(t_max)};
  }

  // Stage one: minimize t over {Mx <= t, x >= 0, sum(x) = 1}. For a
  // skew-symmetric game the optimum is exactly 0; anything else means the
  // solver itself is broken.
  LinearProgram stage_one = strategy_polytope_lp(g, /*with_t=*/true);
  stage_one.sense = Sense::Min;
  AffineFunction t{Rational(0), Vector(size + 1)};
  t.coefficients[size] = 1;
  stage_one.objective = std::move(t);
  const Solution value_check = simplex_solve(stage_one);
  if (value_check.status != SolutionStatus::Optimal || *value_check.value != 0) {
    throw InvariantViolation(
        "symmetric game value came out as " +
        (value_check.status == SolutionStatus::Optimal
             ? to_string(*value_check.value)
             : std::string(to_string(value_check.status))) +
        ", expected exactly 0");
  }

  // Stage two: over the optimal strategies {Mx <= 0, ...}, maximize the
  // final coordinate. Always solvable: stage one's point is in the
  // polytope and the polytope sits inside the unit box.
  LinearProgram stage_two = strategy_polytope_lp(g, /*with_t=*/false);
  stage_two.sense = Sense::Max;
  AffineFunction last{Rational(0), Vector(size)};
  last.coefficients[size - 1] = 1;
  stage_two.objective = std::move(last);
  const Solution best = simplex_solve(stage_two);
  if (best.status != SolutionStatus::Optimal) {
    throw InvariantViolation(
        std::string("optimal-strategy polytope came back ") +
        to_string(best.status));
  }
  return {Strategy(*best.point), *best.value};
}

Solution solve_cheb(const ChebyshevProblem& p) {
  auto [lp, cert] = cheb_to_lp(p);
  const Solution s = simplex_solve(lp);
  if (s.status != SolutionStatus::Optimal) {
    throw InvariantViolation(
        std::string("epigraph LP must be solvable, got ") +
        to_string(s.status));
  }
  return lp_sol_to_cheb_sol(cert, s);
}

Solution solve_l1(const L1Problem& p) {
  auto [lp, cert] = l1_to_lp(p);
  const Solution s = simplex_solve(lp);
  if (s.status != SolutionStatus::Optimal) {
    throw InvariantViolation(
        std::string("sum-abs LP must be solvable, got ") +
        to_string(s.status));
  }
  return lp_sol_to_l1_sol(cert, s);
}

Solution solve_lp_via_game(const LinearProgram& p) {
  auto [standard, to_standard] = lp_to_standard(p);
  auto [game, to_game] = standard_to_game(standard);
  auto [strategy, t_max] = solve_game(game);
  if (t_max > 0) {
    const Solution recovered = game_strategy_to_lp_sol(to_game, strategy);
    return standard_sol_pullback(to_standard, recovered);
  }
  // No optimal strategy reaches a positive final coordinate, so the LP
  // has no finite optimum; a direct feasibility check tells which way.
  return standard_feasible(standard) ? Solution::unbounded()
                                     : Solution::infeasible();
}

}  // namespace linred
