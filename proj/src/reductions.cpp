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

#include "linred/reductions.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "linred/error.hpp"
#include "linred/simplex.hpp"

namespace linred {

const char* to_string(ChebVariant variant) {
  return variant == ChebVariant::Literal ? "literal" : "corrected";
}

namespace {

// f reinterpreted over a wider variable vector, extra coefficients zero.
AffineFunction lift(const AffineFunction& f, std::size_t arity) {
  AffineFunction result = f;
  result.coefficients.resize(arity);
  return result;
}

// The bare variable x_index over `arity` variables.
AffineFunction variable(std::size_t index, std::size_t arity) {
  AffineFunction result{Rational(0), Vector(arity)};
  result.coefficients[index] = 1;
  return result;
}

AffineFunction constant_function(Rational value, std::size_t arity) {
  return AffineFunction{std::move(value), Vector(arity)};
}

Solution pass_through(const Solution& s) {
  return Solution{s.status, std::nullopt, std::nullopt};
}

void require_point_size(const Solution& s, std::size_t expected,
                        const char* what) {
  if (!s.point || s.point->size() != expected) {
    throw DimensionError(
        std::string(what) + ": solution point has dimension " +
        (s.point ? std::to_string(s.point->size()) : std::string("none")) +
        ", certificate expects " + std::to_string(expected));
  }
}

}  // namespace

std::pair<LinearProgram, ChebToLpCert> cheb_to_lp(const ChebyshevProblem& p) {
  validate(p);
  const std::size_t n = p.arity();
  const std::size_t m = p.size();

  LinearProgram lp;
  lp.sense = Sense::Min;
  lp.objective = variable(n, n + 1);  // t
  lp.var_signs.assign(n, VarSign::Free);
  lp.var_signs.push_back(VarSign::NonNeg);
  const AffineFunction t = variable(n, n + 1);
  for (const AffineFunction& f : p.functions) {
    const AffineFunction lifted = lift(f, n + 1);
    lp.constraints.push_back(constraint_le(lifted, t));
    lp.constraints.push_back(constraint_ge(lifted, -t));
  }
  return {std::move(lp), ChebToLpCert{n, m}};
}

Solution lp_sol_to_cheb_sol(const ChebToLpCert& cert, const Solution& s) {
  if (s.status != SolutionStatus::Optimal) return pass_through(s);
  require_point_size(s, cert.source_arity + 1, "epigraph pullback");
  Vector point(s.point->begin(), s.point->end() - 1);
  return Solution::optimal(std::move(point), *s.value);
}

std::pair<LinearProgram, L1ToLpCert> l1_to_lp(const L1Problem& p) {
  validate(p);
  const std::size_t n = p.arity();
  const std::size_t m = p.size();

  LinearProgram lp;
  lp.sense = Sense::Min;
  AffineFunction total{Rational(0), Vector(n + m)};
  for (std::size_t i = 0; i < m; ++i) total.coefficients[n + i] = 1;
  lp.objective = std::move(total);
  lp.var_signs.assign(n, VarSign::Free);
  lp.var_signs.insert(lp.var_signs.end(), m, VarSign::NonNeg);
  for (std::size_t i = 0; i < m; ++i) {
    const AffineFunction lifted = lift(p.functions[i], n + m);
    const AffineFunction t_i = variable(n + i, n + m);
    lp.constraints.push_back(constraint_le(lifted, t_i));
    lp.constraints.push_back(constraint_ge(lifted, -t_i));
  }
  return {std::move(lp), L1ToLpCert{n, m}};
}

Solution lp_sol_to_l1_sol(const L1ToLpCert& cert, const Solution& s) {
  if (s.status != SolutionStatus::Optimal) return pass_through(s);
  require_point_size(s, cert.source_arity + cert.num_functions,
                     "sum-abs pullback");
  Vector point(s.point->begin(), s.point->begin() + cert.source_arity);
  return Solution::optimal(std::move(point), *s.value);
}

std::pair<StandardLP, LpToStandardCert> lp_to_standard(
    const LinearProgram& p) {
  validate(p);
  const std::size_t n = p.num_vars();

  LpToStandardCert cert;
  cert.source_sense = p.sense;
  cert.objective_constant = p.objective.constant;
  cert.var_map.reserve(n);
  std::size_t columns = 0;
  for (VarSign sign : p.var_signs) {
    VarOrigin origin;
    origin.pos = columns++;
    if (sign == VarSign::Free) origin.neg = columns++;
    cert.var_map.push_back(origin);
  }
  cert.standard_num_vars = columns;
  if (columns == 0) {
    throw InvariantViolation(
        "standardization needs at least one variable");
  }

  // Original coefficients spread over the split columns: u gets +coef,
  // v gets -coef.
  const auto expand = [&](const AffineFunction& f, const Rational& factor) {
    Vector row(columns);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational scaled = factor * f.coefficients[j];
      row[cert.var_map[j].pos] = scaled;
      if (cert.var_map[j].neg) row[*cert.var_map[j].neg] = -scaled;
    }
    return row;
  };

  StandardLP standard;
  standard.c =
      expand(p.objective, p.sense == Sense::Min ? Rational(-1) : Rational(1));

  std::vector<Vector> rows;
  Vector rhs;
  const auto add_row = [&](const AffineFunction& g, const Rational& factor) {
    // factor * g(x) <= 0 as a standard row.
    rows.push_back(expand(g, factor));
    rhs.push_back(-factor * g.constant);
  };
  for (const LinearConstraint& row : p.constraints) {
    const AffineFunction g = row.lhs - row.rhs;  // row is g REL 0
    switch (row.rel) {
      case Relation::Le:
        add_row(g, 1);
        break;
      case Relation::Ge:
        add_row(g, -1);
        break;
      case Relation::Eq:
        add_row(g, 1);
        add_row(g, -1);
        break;
    }
  }
  standard.A = Matrix(rows.size(), columns);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < columns; ++j) {
      standard.A(i, j) = rows[i][j];
    }
  }
  standard.b = std::move(rhs);
  return {std::move(standard), std::move(cert)};
}

Solution standard_sol_pullback(const LpToStandardCert& cert,
                               const Solution& s) {
  if (s.status != SolutionStatus::Optimal) return pass_through(s);
  require_point_size(s, cert.standard_num_vars, "standard-form pullback");
  const Vector& w = *s.point;
  Vector point;
  point.reserve(cert.var_map.size());
  for (const VarOrigin& origin : cert.var_map) {
    point.push_back(origin.neg ? w[origin.pos] - w[*origin.neg]
                               : w[origin.pos]);
  }
  const Rational value = cert.source_sense == Sense::Min
                             ? Rational(cert.objective_constant - *s.value)
                             : Rational(cert.objective_constant + *s.value);
  return Solution::optimal(std::move(point), value);
}

std::pair<MatrixGame, StandardToGameCert> standard_to_game(
    const StandardLP& p) {
  validate(p);
  const std::size_t m = p.num_rows();
  const std::size_t n = p.num_vars();
  const std::size_t size = m + n + 1;

  Matrix payoff(size, size);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      payoff(i, m + j) = p.A(i, j);
      payoff(m + j, i) = -p.A(i, j);
    }
    payoff(i, size - 1) = -p.b[i];
    payoff(size - 1, i) = p.b[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    payoff(m + j, size - 1) = p.c[j];
    payoff(size - 1, m + j) = -p.c[j];
  }
  return {MatrixGame(std::move(payoff)), StandardToGameCert{p}};
}

Solution game_strategy_to_lp_sol(const StandardToGameCert& cert,
                                 const Strategy& z) {
  const std::size_t size = cert.game_size();
  if (z.size() != size) {
    throw DimensionError("strategy has " + std::to_string(z.size()) +
                         " entries, certificate's game has " +
                         std::to_string(size));
  }
  const MatrixGame game = standard_to_game(cert.source).first;
  const Matrix& payoff = game.payoff();
  const Vector& x = z.probabilities();
  for (std::size_t i = 0; i < size; ++i) {
    Rational row_value = 0;
    for (std::size_t j = 0; j < size; ++j) row_value += payoff(i, j) * x[j];
    if (row_value > 0) {
      throw ContractViolationError(
          "strategy is not optimal for the certificate's game: (Mz)[" +
          std::to_string(i) + "] = " + to_string(row_value) + " > 0");
    }
  }

  const std::size_t m = cert.num_rows();
  const std::size_t n = cert.num_vars();
  const Rational& t = x[size - 1];
  if (t == 0) return Solution::no_finite_optimum();
  Vector point(n);
  Rational value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    point[j] = x[m + j] / t;
    value += cert.source.c[j] * point[j];
  }
  return Solution::optimal(std::move(point), value);
}

std::pair<ChebyshevProblem, GameToChebCert> game_to_cheb(const MatrixGame& g,
                                                         ChebVariant variant) {
  if (g.is_zero()) {
    throw TrivialGameError(
        "zero payoff matrix: every strategy is optimal, nothing to reduce");
  }
  const std::size_t size = g.size();
  const Rational c0 = g.max_entry();
  const Rational alpha =
      variant == ChebVariant::Corrected ? 1 / c0 : Rational(1);
  const Rational shift = variant == ChebVariant::Corrected ? Rational(1) : c0;

  ChebyshevProblem cheb;
  cheb.functions.reserve(2 * size + 2);
  // Rows of (alpha*M + shift)x.
  for (std::size_t i = 0; i < size; ++i) {
    AffineFunction row{Rational(0), Vector(size)};
    for (std::size_t j = 0; j < size; ++j) {
      row.coefficients[j] = alpha * g.payoff()(i, j) + shift;
    }
    cheb.functions.push_back(std::move(row));
  }
  // shift - x_i.
  for (std::size_t i = 0; i < size; ++i) {
    cheb.functions.push_back(constant_function(shift, size) -
                             variable(i, size));
  }
  // sum(x) + shift - 1, and its partner.
  AffineFunction sum{Rational(0), Vector(size, Rational(1))};
  cheb.functions.push_back(sum + constant_function(shift - 1, size));
  if (variant == ChebVariant::Corrected) {
    cheb.functions.push_back(constant_function(shift + 1, size) - sum);
  } else {
    cheb.functions.push_back(constant_function(1 - shift, size) - sum);
  }
  return {std::move(cheb), GameToChebCert{variant, size, shift, alpha}};
}

Strategy cheb_sol_to_strategy(const GameToChebCert& cert, const Solution& s) {
  if (s.status != SolutionStatus::Optimal) {
    throw ContractViolationError(
        std::string("expected an optimal solution, got ") +
        to_string(s.status));
  }
  require_point_size(s, cert.game_size, "strategy extraction");
  return Strategy(*s.point);
}

std::pair<ChebyshevProblem, ChainCert> l1_to_cheb_linear(const L1Problem& p) {
  auto [lp, to_lp] = l1_to_lp(p);
  auto [standard, to_standard] = lp_to_standard(lp);
  auto [game, to_game] = standard_to_game(standard);
  auto [cheb, to_cheb] = game_to_cheb(game, ChebVariant::Corrected);
  return {std::move(cheb), ChainCert{std::move(to_lp), std::move(to_standard),
                                     std::move(to_game), std::move(to_cheb)}};
}

namespace {

// Over the optimal strategies {Mx <= 0, x >= 0, sum(x) = 1} of the game,
// the largest achievable final coordinate together with an achieving
// vertex, as a standard-form LP. Returns nullopt when the polytope is
// empty (the alleged strategy was not optimal; the caller's exact check
// will report that).
std::optional<std::pair<Vector, Rational>> max_trailing_coordinate(
    const Matrix& payoff) {
  const std::size_t size = payoff.rows();
  StandardLP lp;
  lp.c = Vector(size);
  lp.c[size - 1] = 1;
  lp.A = Matrix(size + 2, size);
  lp.b = Vector(size + 2);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) lp.A(i, j) = payoff(i, j);
  }
  for (std::size_t j = 0; j < size; ++j) {
    lp.A(size, j) = 1;
    lp.A(size + 1, j) = -1;
  }
  lp.b[size] = 1;
  lp.b[size + 1] = -1;
  const Solution s = solve_standard(lp);
  if (s.status != SolutionStatus::Optimal) return std::nullopt;
  return std::make_pair(*s.point, *s.value);
}

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (Error& e) {
    e.prepend_context(std::string(name) + ": ");
    throw;
  }
}

}  // namespace

Solution cheb_chain_pullback(const ChainCert& cert, const Solution& s) {
  Strategy z = stage("strategy extraction stage",
                     [&] { return cheb_sol_to_strategy(cert.to_cheb, s); });

  // The optimum set of a pipeline problem always contains points whose
  // final game coordinate is 0, and the solver is free to return one; the
  // LP recovery needs that coordinate positive whenever any optimal
  // strategy makes it so. Re-select before recovering.
  if (z.probabilities().back() == 0) {
    const MatrixGame game = standard_to_game(cert.to_game.source).first;
    if (auto best = max_trailing_coordinate(game.payoff());
        best && best->second > 0) {
      z = Strategy(std::move(best->first));
    }
  }

  const Solution standard_sol =
      stage("game recovery stage",
            [&] { return game_strategy_to_lp_sol(cert.to_game, z); });
  const Solution lp_sol =
      stage("de-standardization stage",
            [&] { return standard_sol_pullback(cert.to_standard, standard_sol); });
  return stage("sum-abs pullback stage",
               [&] { return lp_sol_to_l1_sol(cert.to_lp, lp_sol); });
}

ChebyshevProblem l1_to_cheb_direct(const L1Problem& p, std::size_t cap) {
  validate(p);
  const std::size_t m = p.size();
  if (m > cap) {
    throw CapExceededError("sign-pattern reduction of " + std::to_string(m) +
                           " functions exceeds the cap of " +
                           std::to_string(cap));
  }
  ChebyshevProblem cheb;
  cheb.functions.reserve(std::size_t(1) << (m - 1));
  for (std::size_t mask = 0; mask < (std::size_t(1) << (m - 1)); ++mask) {
    AffineFunction g = p.functions.front();
    for (std::size_t k = 1; k < m; ++k) {
      if (mask & (std::size_t(1) << (k - 1))) {
        g = g - p.functions[k];
      } else {
        g = g + p.functions[k];
      }
    }
    cheb.functions.push_back(std::move(g));
  }
  return cheb;
}

}  // namespace linred
