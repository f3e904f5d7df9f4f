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
// Problem-to-problem transformations and their exact solution pullbacks.
// Every reduction returns the target problem together with a certificate;
// feeding a solution of the target through the matching pullback recovers
// a solution of the source with the optimal value preserved exactly.

#ifndef LINRED_REDUCTIONS_HPP_
#define LINRED_REDUCTIONS_HPP_

#include <cstddef>
#include <utility>

#include "linred/certificate.hpp"
#include "linred/model.hpp"

namespace linred {

// minimize t subject to -t <= f_i(x) <= t. Variables (x_1..x_n, t) with t
// nonnegative (implied by t >= |f_i|). Dims: n+1 variables, 2m rows.
std::pair<LinearProgram, ChebToLpCert> cheb_to_lp(const ChebyshevProblem& p);

// Drops the t coordinate; the optimal t equals the max-abs optimum, so the
// value is unchanged. Non-optimal statuses pass through.
Solution lp_sol_to_cheb_sol(const ChebToLpCert& cert, const Solution& s);

// minimize sum t_i subject to -t_i <= f_i(x) <= t_i. Variables
// (x_1..x_n, t_1..t_m), t block nonnegative. Dims: m+n variables, 2m rows.
std::pair<LinearProgram, L1ToLpCert> l1_to_lp(const L1Problem& p);

// Drops the t block; value unchanged.
Solution lp_sol_to_l1_sol(const L1ToLpCert& cert, const Solution& s);

// Standard form: maximize c.w, Aw <= b, w >= 0. Minimization is negated
// (constant dropped into the certificate), = rows are split, >= rows are
// negated, and each free variable becomes an adjacent u - v pair.
std::pair<StandardLP, LpToStandardCert> lp_to_standard(const LinearProgram& p);

// Recombines split pairs and restores the objective sign and constant.
Solution standard_sol_pullback(const LpToStandardCert& cert,
                               const Solution& s);

// Skew block matrix over the partition (y: m' rows, w: n' rows, t):
//
//     [  0    A   -b ]
//     [ -A^T  0    c ]
//     [  b^T -c^T  0 ]
//
// so N = m' + n' + 1.
std::pair<MatrixGame, StandardToGameCert> standard_to_game(
    const StandardLP& p);

// Partition z = (y, w, t). For t > 0 the point w/t is optimal for the
// source LP with value c.(w/t); for t = 0 the source has no finite optimum
// (infeasible or unbounded; callers wanting the distinction run their own
// feasibility check). Throws ContractViolationError unless Mz <= 0 holds
// exactly, z being claimed optimal.
Solution game_strategy_to_lp_sol(const StandardToGameCert& cert,
                                 const Strategy& z);

// 2N+2 affine functions in the N strategy variables. With c0 the largest
// payoff entry:
//
//   Literal   keeps M and c = c0 as printed in the source construction:
//             rows of (M+c)x, then c - x_i, then sum(x)+c-1, -sum(x)-c+1.
//             The last two components are exact negatives, and the form
//             admits optima below c at non-strategy points (see the
//             counterexample command).
//   Corrected rescales M' = M/c0 so c = 1 (optimal strategies are
//             unaffected) and replaces the final component, emitting:
//             rows of (M'+1)x, then 1 - x_i, then sum(x), 2 - sum(x).
//             Its optimum is exactly 1, attained precisely at the optimal
//             strategies of M.
//
// Throws TrivialGameError when M = 0 (every strategy is optimal; there is
// nothing to reduce).
std::pair<ChebyshevProblem, GameToChebCert> game_to_cheb(const MatrixGame& g,
                                                         ChebVariant variant);

// Validates that the optimum point is a probability vector and returns it
// as a Strategy. Throws NotAStrategyError (with the violated condition and
// witness) otherwise; for the literal variant on games where that form is
// unsound this is the expected outcome.
Strategy cheb_sol_to_strategy(const GameToChebCert& cert, const Solution& s);

// Composition of the four stages above with the corrected variant.
// Dims: 6m+4n+4 functions in 3m+2n+1 variables.
std::pair<ChebyshevProblem, ChainCert> l1_to_cheb_linear(const L1Problem& p);

// Inverse of l1_to_cheb_linear: strategy extraction, game-to-LP recovery,
// de-standardization, t-block drop, in that order. The final value equals
// the source sum-abs optimum exactly. Any stage failure is rethrown with
// the stage named.
//
// A max-abs solver is free to return an optimum whose last game coordinate
// is 0 even when optima with a positive one exist (the optimum set always
// contains such points for pipeline games); in that case this pullback
// re-selects, over the optimal strategies of the certificate's game, one
// maximizing the last coordinate before recovering the LP solution.
Solution cheb_chain_pullback(const ChainCert& cert, const Solution& s);

// One function f_1 +- f_2 +- ... +- f_m per sign vector, first sign fixed
// to +: 2^(m-1) functions in n variables, with pointwise max-abs equal to
// the source sum-abs everywhere. No certificate: points carry over as-is.
// Throws CapExceededError when m exceeds cap.
ChebyshevProblem l1_to_cheb_direct(const L1Problem& p, std::size_t cap = 20);

}  // namespace linred

#endif  // LINRED_REDUCTIONS_HPP_
