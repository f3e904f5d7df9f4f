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
// Seeded random instance generation for tests and the verify command.
// Instances are sized for the brute-force oracles (standardized dimension
// stays within their limits) and sampling is hand-rolled on top of
// mt19937_64 so that a given seed produces identical instances on every
// platform and standard library.

#ifndef LINRED_GENERATORS_HPP_
#define LINRED_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "linred/model.hpp"
#include "linred/rational.hpp"

namespace linred {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform over [0, bound), bound >= 1, by rejection sampling.
  std::uint64_t next_below(std::uint64_t bound);

  // Uniform over the inclusive range [lo, hi].
  std::int64_t next_int(std::int64_t lo, std::int64_t hi);

  // Numerator uniform in [-max_abs_num, max_abs_num], denominator uniform
  // in [1, max_den], then reduced.
  Rational next_rational(std::int64_t max_abs_num, std::int64_t max_den);

 private:
  std::mt19937_64 engine_;
};

// Nonzero skew-symmetric game of the given size, built as U - U^T with U
// drawn from a small rational grid; resamples until some entry is nonzero.
MatrixGame random_skew_game(Rng& rng, std::size_t size);

// m affine functions of the given arity with small rational coefficients.
std::vector<AffineFunction> random_functions(Rng& rng, std::size_t m,
                                             std::size_t arity);

L1Problem random_l1(Rng& rng, std::size_t m, std::size_t arity);
ChebyshevProblem random_cheb(Rng& rng, std::size_t m, std::size_t arity);

Vector random_point(Rng& rng, std::size_t arity);

// Random LPs sized for the vertex-enumeration oracle: at most 4 variables
// (at most 2 of them free) and at most 8 constraints.
enum class LpShape {
  BoundedFeasible,   // origin feasible, box rows added: always Optimal
  Mixed,             // unconstrained mix of <=, >=, = rows; any status
  ForcedInfeasible,  // contains a contradictory pair g <= 0, g >= 1
  ForcedUnbounded,   // origin feasible with an improving recession ray
};

LinearProgram random_lp(Rng& rng, LpShape shape);

}  // namespace linred

#endif  // LINRED_GENERATORS_HPP_
