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
// Everything here is exhaustive enumeration plus exact linear algebra;
// none of it touches the simplex engine, so these results stay valid
// ground truth even if the engine is wrong.

#include "linred/oracles.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linred/error.hpp"
#include "linred/generators.hpp"
#include "linred/rational.hpp"
#include "linred/reductions.hpp"

namespace linred {

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    result *= BigInt(n - i);
    result /= BigInt(i + 1);
  }
  return result;
}

// All k-subsets of [0, n) in lexicographic order.
void for_each_combination(
    std::size_t n, std::size_t k,
    const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> chosen(k);
  for (std::size_t i = 0; i < k; ++i) chosen[i] = i;
  while (true) {
    fn(chosen);
    std::size_t i = k;
    while (i > 0 && chosen[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++chosen[i - 1];
    for (std::size_t j = i; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

// Exact Gaussian elimination on rows | rhs. Empty result when singular.
std::optional<Vector> solve_square(std::vector<Vector> rows, Vector rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(rows[col], rows[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || rows[r][col] == 0) continue;
      const Rational scale = rows[r][col] / rows[col][col];
      for (std::size_t c = col; c < n; ++c) {
        rows[r][c] -= scale * rows[col][c];
      }
      rhs[r] -= scale * rhs[col];
    }
  }
  Vector solution(n);
  for (std::size_t i = 0; i < n; ++i) solution[i] = rhs[i] / rows[i][i];
  return solution;
}

// One-dimensional nullspace direction of an (n-1) x n system, or empty
// when the rows are dependent (rank below n-1). Any scalar multiple is as
// good as another; callers try both signs.
std::optional<Vector> nullspace_direction(std::vector<Vector> rows,
                                          std::size_t n) {
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational scale = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < n; ++c) {
        rows[r][c] -= scale * rows[rank][c];
      }
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  if (rank != rows.size()) return std::nullopt;  // dependent rows

  // The single non-pivot column is the free one; give it value 1.
  Vector direction(n);
  std::size_t free_col = n;
  std::size_t seen = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (seen < pivot_cols.size() && pivot_cols[seen] == col) {
      ++seen;
    } else {
      free_col = col;
    }
  }
  direction[free_col] = 1;
  for (std::size_t r = rank; r-- > 0;) {
    const std::size_t col = pivot_cols[r];
    Rational accumulated = rows[r][free_col];  // coefficient times 1
    direction[col] = -accumulated / rows[r][col];
  }
  return direction;
}

struct InequalitySystem {
  std::vector<Vector> rows;  // row . w <= rhs
  Vector rhs;

  bool satisfied_at(const Vector& w) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < w.size(); ++j) lhs += rows[i][j] * w[j];
      if (lhs > rhs[i]) return false;
    }
    return true;
  }

  // Recession test: row . d <= 0 for every row.
  bool recedes_along(const Vector& d) const {
    for (const Vector& row : rows) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < d.size(); ++j) lhs += row[j] * d[j];
      if (lhs > 0) return false;
    }
    return true;
  }
};

}  // namespace

Solution vertex_enum_solve(const LinearProgram& p, std::size_t limit) {
  auto [standard, cert] = lp_to_standard(p);
  const std::size_t n = standard.num_vars();
  const std::size_t m = standard.num_rows();
  if (n > 6) {
    throw LimitExceededError("standardized dimension " + std::to_string(n) +
                             " exceeds the enumeration bound of 6");
  }
  if (binomial(m + n, n) > BigInt(limit)) {
    throw LimitExceededError("basis count C(" + std::to_string(m + n) + "," +
                             std::to_string(n) + ") exceeds the limit of " +
                             std::to_string(limit));
  }

  // All rows of {Aw <= b} followed by {-w_j <= 0}.
  InequalitySystem system;
  system.rows.reserve(m + n);
  system.rhs.reserve(m + n);
  for (std::size_t i = 0; i < m; ++i) {
    Vector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = standard.A(i, j);
    system.rows.push_back(std::move(row));
    system.rhs.push_back(standard.b[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vector row(n);
    row[j] = -1;
    system.rows.push_back(std::move(row));
    system.rhs.push_back(Rational(0));
  }

  // Candidate vertices: every choice of n rows, taken with equality. The
  // feasible set lives in w >= 0 and so contains no line; nonempty then
  // means some vertex exists, which makes the empty outcome below a
  // proof of infeasibility.
  std::optional<Vector> best_point;
  Rational best_value;
  for_each_combination(
      system.rows.size(), n, [&](const std::vector<std::size_t>& subset) {
        std::vector<Vector> square;
        Vector square_rhs;
        square.reserve(n);
        square_rhs.reserve(n);
        for (std::size_t index : subset) {
          square.push_back(system.rows[index]);
          square_rhs.push_back(system.rhs[index]);
        }
        const std::optional<Vector> w =
            solve_square(std::move(square), std::move(square_rhs));
        if (!w || !system.satisfied_at(*w)) return;
        Rational value = 0;
        for (std::size_t j = 0; j < n; ++j) value += standard.c[j] * (*w)[j];
        if (!best_point || value > best_value) {
          best_point = *w;
          best_value = std::move(value);
        }
      });
  if (!best_point) {
    return standard_sol_pullback(cert, Solution::infeasible());
  }

  // Unboundedness: an extreme ray of {Ad <= 0, d >= 0} along which the
  // objective grows. Extreme rays have n-1 independent tight rows, so
  // checking every (n-1)-subset's nullspace direction (both signs) covers
  // them all.
  const auto improves = [&](const Vector& d) {
    Rational gain = 0;
    bool nonneg = true;
    for (std::size_t j = 0; j < n; ++j) {
      gain += standard.c[j] * d[j];
      if (d[j] < 0) nonneg = false;
    }
    return nonneg && system.recedes_along(d) && gain > 0;
  };
  bool unbounded = false;
  if (n == 1) {
    Vector up{Rational(1)};
    Vector down{Rational(-1)};
    unbounded = improves(up) || improves(down);
  } else {
    for_each_combination(
        system.rows.size(), n - 1,
        [&](const std::vector<std::size_t>& subset) {
          if (unbounded) return;
          std::vector<Vector> chosen;
          chosen.reserve(n - 1);
          for (std::size_t index : subset) {
            chosen.push_back(system.rows[index]);
          }
          const std::optional<Vector> d =
              nullspace_direction(std::move(chosen), n);
          if (!d) return;
          Vector flipped(n);
          for (std::size_t j = 0; j < n; ++j) flipped[j] = -(*d)[j];
          if (improves(*d) || improves(flipped)) unbounded = true;
        });
  }
  if (unbounded) {
    return standard_sol_pullback(cert, Solution::unbounded());
  }
  return standard_sol_pullback(
      cert, Solution::optimal(std::move(*best_point), best_value));
}

bool verify_strategy_optimal(const MatrixGame& g, const Strategy& x) {
  if (g.size() != x.size()) {
    throw DimensionError("game of size " + std::to_string(g.size()) +
                         " against a strategy of size " +
                         std::to_string(x.size()));
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    Rational row_value = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      row_value += g.payoff()(i, j) * x.probabilities()[j];
    }
    if (row_value > 0) return false;
  }
  return true;
}

std::vector<Strategy> enumerate_game_optima(const MatrixGame& g,
                                            std::size_t limit) {
  const std::size_t size = g.size();
  if (size > 6) {
    throw LimitExceededError("game size " + std::to_string(size) +
                             " exceeds the enumeration bound of 6");
  }
  if (binomial(2 * size, size - 1) > BigInt(limit)) {
    throw LimitExceededError("basis count exceeds the limit of " +
                             std::to_string(limit));
  }

  // Polytope {Mx <= 0, x >= 0, sum(x) = 1}: the equality row is active
  // everywhere, so vertices come from size-1 additional tight rows drawn
  // from the 2*size inequalities.
  std::vector<Vector> inequality_rows;
  for (std::size_t i = 0; i < size; ++i) {
    Vector row(size);
    for (std::size_t j = 0; j < size; ++j) row[j] = g.payoff()(i, j);
    inequality_rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < size; ++j) {
    Vector row(size);
    row[j] = -1;
    inequality_rows.push_back(std::move(row));
  }

  const auto feasible = [&](const Vector& x) {
    Rational total = 0;
    for (std::size_t j = 0; j < size; ++j) {
      if (x[j] < 0) return false;
      total += x[j];
    }
    if (total != 1) return false;
    for (std::size_t i = 0; i < size; ++i) {
      Rational row_value = 0;
      for (std::size_t j = 0; j < size; ++j) {
        row_value += g.payoff()(i, j) * x[j];
      }
      if (row_value > 0) return false;
    }
    return true;
  };

  std::set<Vector> vertices;
  for_each_combination(
      inequality_rows.size(), size - 1,
      [&](const std::vector<std::size_t>& subset) {
        std::vector<Vector> square;
        Vector rhs;
        square.reserve(size);
        rhs.reserve(size);
        for (std::size_t index : subset) {
          square.push_back(inequality_rows[index]);
          rhs.push_back(Rational(0));
        }
        square.push_back(Vector(size, Rational(1)));
        rhs.push_back(Rational(1));
        const std::optional<Vector> x =
            solve_square(std::move(square), std::move(rhs));
        if (x && feasible(*x)) vertices.insert(*x);
      });
  if (vertices.empty()) {
    throw InvariantViolation(
        "no optimal strategy found; symmetric games always have one");
  }
  std::vector<Strategy> result;
  result.reserve(vertices.size());
  for (const Vector& x : vertices) result.push_back(Strategy(x));
  return result;
}

bool l1_cheb_pointwise_check(const L1Problem& p, std::size_t trials,
                             std::uint64_t seed) {
  const ChebyshevProblem direct = l1_to_cheb_direct(p);
  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Vector x = random_point(rng, p.arity());
    if (eval_l1(p, x) != eval_cheb(direct, x)) return false;
  }
  return true;
}

}  // namespace linred
