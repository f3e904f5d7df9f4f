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

#include "linred/generators.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>

#include "linred/error.hpp"

namespace linred {

std::uint64_t Rng::next_below(std::uint64_t bound) {
  if (bound == 0) {
    throw InvariantViolation("sampling from an empty range");
  }
  // Classic rejection sampling: accept draws below the largest multiple
  // of bound, so every residue is equally likely. mt19937_64's raw output
  // is pinned by the standard, which keeps seeded runs identical across
  // platforms (std::uniform_int_distribution is not).
  const std::uint64_t residue = (0 - bound) % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t raw = engine_();
    if (residue == 0 || raw < 0 - residue) return raw % bound;
  }
}

std::int64_t Rng::next_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw InvariantViolation("sampling from an empty range");
  }
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                   next_below(span));
}

Rational Rng::next_rational(std::int64_t max_abs_num, std::int64_t max_den) {
  const BigInt num = next_int(-max_abs_num, max_abs_num);
  const BigInt den = next_int(1, max_den);
  return make_rational(num, den);
}

MatrixGame random_skew_game(Rng& rng, std::size_t size) {
  if (size < 2) {
    throw InvariantViolation(
        "nonzero skew-symmetric games need size at least 2");
  }
  while (true) {
    Matrix upper(size, size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        upper(i, j) = rng.next_rational(3, 2);
      }
    }
    Matrix payoff(size, size);
    bool nonzero = false;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        payoff(i, j) = upper(i, j) - upper(j, i);
        if (payoff(i, j) != 0) nonzero = true;
      }
    }
    if (nonzero) return MatrixGame(std::move(payoff));
  }
}

std::vector<AffineFunction> random_functions(Rng& rng, std::size_t m,
                                             std::size_t arity) {
  std::vector<AffineFunction> functions;
  functions.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    AffineFunction f{rng.next_rational(4, 2), Vector(arity)};
    for (std::size_t j = 0; j < arity; ++j) {
      f.coefficients[j] = rng.next_rational(4, 2);
    }
    functions.push_back(std::move(f));
  }
  return functions;
}

L1Problem random_l1(Rng& rng, std::size_t m, std::size_t arity) {
  L1Problem p{random_functions(rng, m, arity)};
  validate(p);
  return p;
}

ChebyshevProblem random_cheb(Rng& rng, std::size_t m, std::size_t arity) {
  ChebyshevProblem p{random_functions(rng, m, arity)};
  validate(p);
  return p;
}

Vector random_point(Rng& rng, std::size_t arity) {
  Vector x(arity);
  for (std::size_t j = 0; j < arity; ++j) x[j] = rng.next_rational(10, 4);
  return x;
}

namespace {

AffineFunction random_linear(Rng& rng, std::size_t arity) {
  AffineFunction f{Rational(0), Vector(arity)};
  for (std::size_t j = 0; j < arity; ++j) {
    f.coefficients[j] = rng.next_rational(3, 1);
  }
  return f;
}

AffineFunction constant_of(Rational value, std::size_t arity) {
  return AffineFunction{std::move(value), Vector(arity)};
}

}  // namespace

LinearProgram random_lp(Rng& rng, LpShape shape) {
  LinearProgram lp;
  const std::size_t nv = std::size_t(rng.next_int(1, 4));
  std::size_t free_count = 0;
  if (shape == LpShape::BoundedFeasible || shape == LpShape::Mixed) {
    free_count = std::size_t(rng.next_int(0, std::int64_t(nv < 2 ? nv : 2)));
  }
  lp.var_signs.assign(nv, VarSign::NonNeg);
  for (std::size_t j = 0; j < free_count; ++j) lp.var_signs[j] = VarSign::Free;

  lp.sense = rng.next_below(2) == 0 ? Sense::Max : Sense::Min;
  lp.objective = random_linear(rng, nv);
  lp.objective.constant = rng.next_rational(3, 1);

  switch (shape) {
    case LpShape::BoundedFeasible: {
      // Origin feasible, and every variable capped both ways: optimal.
      const std::int64_t rows = rng.next_int(0, 3);
      for (std::int64_t i = 0; i < rows; ++i) {
        lp.constraints.push_back(
            constraint_le(random_linear(rng, nv),
                          constant_of(Rational(rng.next_int(0, 5)), nv)));
      }
      AffineFunction nonneg_sum{Rational(0), Vector(nv)};
      for (std::size_t j = free_count; j < nv; ++j) {
        nonneg_sum.coefficients[j] = 1;
      }
      lp.constraints.push_back(constraint_le(
          std::move(nonneg_sum), constant_of(Rational(rng.next_int(1, 10)), nv)));
      for (std::size_t j = 0; j < free_count; ++j) {
        AffineFunction var{Rational(0), Vector(nv)};
        var.coefficients[j] = 1;
        const Rational box(rng.next_int(1, 10));
        lp.constraints.push_back(constraint_le(var, constant_of(box, nv)));
        lp.constraints.push_back(constraint_ge(var, constant_of(-box, nv)));
      }
      break;
    }
    case LpShape::Mixed: {
      const std::int64_t rows = rng.next_int(1, 8);
      for (std::int64_t i = 0; i < rows; ++i) {
        const AffineFunction lhs = random_linear(rng, nv);
        const AffineFunction rhs =
            constant_of(Rational(rng.next_int(-4, 4)), nv);
        switch (rng.next_below(3)) {
          case 0:
            lp.constraints.push_back(constraint_le(lhs, rhs));
            break;
          case 1:
            lp.constraints.push_back(constraint_ge(lhs, rhs));
            break;
          default:
            lp.constraints.push_back(constraint_eq(lhs, rhs));
            break;
        }
      }
      break;
    }
    case LpShape::ForcedInfeasible: {
      const std::int64_t rows = rng.next_int(0, 4);
      for (std::int64_t i = 0; i < rows; ++i) {
        lp.constraints.push_back(
            constraint_le(random_linear(rng, nv),
                          constant_of(Rational(rng.next_int(-4, 4)), nv)));
      }
      const AffineFunction g = random_linear(rng, nv);
      lp.constraints.push_back(constraint_le(g, constant_of(Rational(0), nv)));
      lp.constraints.push_back(constraint_ge(g, constant_of(Rational(1), nv)));
      break;
    }
    case LpShape::ForcedUnbounded: {
      // The ray variable never appears in a constraint, the origin is
      // feasible, and the objective strictly improves along the ray.
      const std::size_t ray = rng.next_below(nv);
      lp.sense = Sense::Max;
      lp.objective.coefficients[ray] = Rational(rng.next_int(1, 3));
      const std::int64_t rows = rng.next_int(0, 5);
      for (std::int64_t i = 0; i < rows; ++i) {
        AffineFunction lhs = random_linear(rng, nv);
        lhs.coefficients[ray] = 0;
        lp.constraints.push_back(constraint_le(
            std::move(lhs), constant_of(Rational(rng.next_int(0, 5)), nv)));
      }
      break;
    }
  }
  validate(lp);
  return lp;
}

}  // namespace linred
