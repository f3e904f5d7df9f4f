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
// Brute-force ground-truth verifiers for small instances. Deliberately
// independent of the simplex engine: results here are definitional
// (exhaustive enumeration), so solver bugs cannot leak into them.

#ifndef LINRED_ORACLES_HPP_
#define LINRED_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linred/model.hpp"

namespace linred {

// True optimum of a small LP by enumerating every candidate basis of the
// standardized form: all n'-subsets of the rows of {Aw <= b} union
// {-w <= 0} are solved exactly, feasible vertices are collected, and the
// best objective wins. Unboundedness is detected by enumerating candidate
// extreme rays (nullspace directions of (n'-1)-subsets). Infeasibility is
// the empty-vertex case: the feasible set lives in w >= 0, which is
// pointed, so nonempty implies a vertex exists.
//
// Requires standardized n' <= 6 and C(m'+n', n') <= limit; throws
// LimitExceededError otherwise.
Solution vertex_enum_solve(const LinearProgram& p, std::size_t limit = 100000);

// Exact check of the optimality system Mx <= 0 (the strategy invariants
// x >= 0, sum = 1 already hold by construction).
bool verify_strategy_optimal(const MatrixGame& g, const Strategy& x);

// All vertices of the optimal-strategy polytope {Mx <= 0, x >= 0,
// sum(x) = 1}, by exhaustive basis enumeration. Never empty: symmetric
// games always have an optimal strategy. Requires N <= 6.
std::vector<Strategy> enumerate_game_optima(const MatrixGame& g,
                                            std::size_t limit = 100000);

// Samples `trials` random rational points and checks, exactly, that the
// sum-abs objective of p agrees with the max-abs objective of its direct
// sign-pattern reduction at every sample.
bool l1_cheb_pointwise_check(const L1Problem& p, std::size_t trials,
                             std::uint64_t seed);

}  // namespace linred

#endif  // LINRED_ORACLES_HPP_
