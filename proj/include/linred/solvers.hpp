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
// Form-specific exact solvers. All of them standardize through the
// reduction layer and run the two-phase simplex engine underneath.

#ifndef LINRED_SOLVERS_HPP_
#define LINRED_SOLVERS_HPP_

#include <utility>

#include "linred/model.hpp"

namespace linred {

// Standardizes, runs the simplex engine, pulls the solution back.
Solution simplex_solve(const LinearProgram& p);

// Optimal strategy of a symmetric game, in two LP stages. Stage one
// minimizes t over {Mx <= t, x >= 0, sum(x) = 1} and asserts the optimum
// is exactly 0 (it is, for any skew-symmetric M). Stage two maximizes the
// last coordinate x_N over the optimal strategies {Mx <= 0, x >= 0,
// sum(x) = 1} and returns that strategy together with t_max, the achieved
// x_N. For M = 0 the uniform strategy is returned directly with
// t_max = 1/N. Against a game produced by standard_to_game, t_max > 0
// holds exactly when the source LP has an optimal solution, so the result
// feeds game_strategy_to_lp_sol deterministically.
std::pair<Strategy, Rational> solve_game(const MatrixGame& g);

// Epigraph reformulation + simplex. Always returns Optimal: the objective
// is bounded below by 0 and the epigraph LP is always feasible.
Solution solve_cheb(const ChebyshevProblem& p);

// Sum-abs counterpart of solve_cheb; also always Optimal.
Solution solve_l1(const L1Problem& p);

// Solves an LP along the game route: standardize, build the symmetric
// game, solve_game, recover. When every optimal strategy has a zero last
// coordinate the game alone cannot tell infeasible from unbounded, so a
// direct phase-one feasibility check on the standard form settles it.
Solution solve_lp_via_game(const LinearProgram& p);

}  // namespace linred

#endif  // LINRED_SOLVERS_HPP_
