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

#include "linred/model.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "linred/error.hpp"
#include "linred/rational.hpp"

namespace linred {

bool Matrix::is_zero() const {
  for (const Rational& entry : data_) {
    if (entry != 0) return false;
  }
  return true;
}

namespace {

void require_same_arity(const AffineFunction& a, const AffineFunction& b) {
  if (a.arity() != b.arity()) {
    throw DimensionError("affine function arities differ: " +
                         std::to_string(a.arity()) + " vs " +
                         std::to_string(b.arity()));
  }
}

}  // namespace

Rational eval_affine(const AffineFunction& f, const Vector& x) {
  if (f.arity() != x.size()) {
    throw DimensionError("evaluating arity-" + std::to_string(f.arity()) +
                         " function at a point of dimension " +
                         std::to_string(x.size()));
  }
  Rational result = f.constant;
  for (std::size_t j = 0; j < x.size(); ++j) {
    result += f.coefficients[j] * x[j];
  }
  return result;
}

AffineFunction operator+(const AffineFunction& a, const AffineFunction& b) {
  require_same_arity(a, b);
  AffineFunction result = a;
  result.constant += b.constant;
  for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
    result.coefficients[j] += b.coefficients[j];
  }
  return result;
}

AffineFunction operator-(const AffineFunction& a, const AffineFunction& b) {
  return a + (-b);
}

AffineFunction operator-(const AffineFunction& a) {
  AffineFunction result = a;
  result.constant = -result.constant;
  for (Rational& coefficient : result.coefficients) {
    coefficient = -coefficient;
  }
  return result;
}

AffineFunction operator*(const Rational& factor, const AffineFunction& a) {
  AffineFunction result = a;
  result.constant *= factor;
  for (Rational& coefficient : result.coefficients) {
    coefficient *= factor;
  }
  return result;
}

LinearConstraint constraint_le(AffineFunction lhs, AffineFunction rhs) {
  require_same_arity(lhs, rhs);
  return LinearConstraint{std::move(lhs), Relation::Le, std::move(rhs)};
}

LinearConstraint constraint_ge(AffineFunction lhs, AffineFunction rhs) {
  require_same_arity(lhs, rhs);
  return LinearConstraint{std::move(lhs), Relation::Ge, std::move(rhs)};
}

LinearConstraint constraint_eq(AffineFunction lhs, AffineFunction rhs) {
  require_same_arity(lhs, rhs);
  return LinearConstraint{std::move(lhs), Relation::Eq, std::move(rhs)};
}

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  if (lp.objective.arity() != n) {
    throw InvariantViolation("objective arity " +
                             std::to_string(lp.objective.arity()) +
                             " does not match variable count " +
                             std::to_string(n));
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const LinearConstraint& row = lp.constraints[i];
    if (row.lhs.arity() != n || row.rhs.arity() != n) {
      throw InvariantViolation("constraint " + std::to_string(i) +
                               " arity does not match variable count " +
                               std::to_string(n));
    }
  }
}

void validate(const StandardLP& lp) {
  if (lp.c.empty()) {
    throw InvariantViolation("standard-form LP needs at least one variable");
  }
  if (lp.A.cols() != lp.c.size() || lp.A.rows() != lp.b.size()) {
    throw InvariantViolation(
        "standard-form shape mismatch: A is " + std::to_string(lp.A.rows()) +
        "x" + std::to_string(lp.A.cols()) + ", c has " +
        std::to_string(lp.c.size()) + ", b has " + std::to_string(lp.b.size()));
  }
}

MatrixGame::MatrixGame(Matrix payoff) : payoff_(std::move(payoff)) {
  if (payoff_.rows() != payoff_.cols()) {
    throw InvariantViolation("payoff matrix is " +
                             std::to_string(payoff_.rows()) + "x" +
                             std::to_string(payoff_.cols()) + ", not square");
  }
  if (payoff_.rows() == 0) {
    throw InvariantViolation("empty payoff matrix");
  }
  for (std::size_t i = 0; i < payoff_.rows(); ++i) {
    for (std::size_t j = i; j < payoff_.cols(); ++j) {
      if (payoff_(i, j) != -payoff_(j, i)) {
        throw InvariantViolation(
            "payoff matrix is not skew-symmetric: entry (" +
            std::to_string(i) + "," + std::to_string(j) + ") = " +
            to_string(payoff_(i, j)) + " but (" + std::to_string(j) + "," +
            std::to_string(i) + ") = " + to_string(payoff_(j, i)));
      }
    }
  }
}

Rational MatrixGame::max_entry() const {
  Rational best = payoff_(0, 0);
  for (std::size_t i = 0; i < payoff_.rows(); ++i) {
    for (std::size_t j = 0; j < payoff_.cols(); ++j) {
      if (payoff_(i, j) > best) best = payoff_(i, j);
    }
  }
  return best;
}

Strategy::Strategy(Vector x) : x_(std::move(x)) {
  if (x_.empty()) {
    throw NotAStrategyError("empty probability vector");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (x_[i] < 0) {
      throw NotAStrategyError("negative entry: x[" + std::to_string(i) +
                              "] = " + to_string(x_[i]));
    }
    total += x_[i];
  }
  if (total != 1) {
    throw NotAStrategyError("entries sum to " + to_string(total) +
                            ", expected 1");
  }
}

Strategy uniform_strategy(std::size_t n) {
  if (n == 0) {
    throw InvariantViolation("uniform strategy over zero actions");
  }
  return Strategy(Vector(n, make_rational(1, BigInt(n))));
}

namespace {

void validate_function_list(const std::vector<AffineFunction>& functions,
                            const char* what) {
  if (functions.empty()) {
    throw InvariantViolation(std::string(what) +
                             " needs at least one function");
  }
  const std::size_t arity = functions.front().arity();
  for (std::size_t i = 1; i < functions.size(); ++i) {
    if (functions[i].arity() != arity) {
      throw InvariantViolation(std::string(what) + ": function " +
                               std::to_string(i) + " has arity " +
                               std::to_string(functions[i].arity()) +
                               ", expected " + std::to_string(arity));
    }
  }
}

}  // namespace

void validate(const ChebyshevProblem& p) {
  validate_function_list(p.functions, "max-abs problem");
}

void validate(const L1Problem& p) {
  validate_function_list(p.functions, "sum-abs problem");
}

Rational eval_cheb(const ChebyshevProblem& p, const Vector& x) {
  validate(p);
  Rational best = abs(eval_affine(p.functions.front(), x));
  for (std::size_t i = 1; i < p.functions.size(); ++i) {
    Rational candidate = abs(eval_affine(p.functions[i], x));
    if (candidate > best) best = std::move(candidate);
  }
  return best;
}

Rational eval_l1(const L1Problem& p, const Vector& x) {
  validate(p);
  Rational total = 0;
  for (const AffineFunction& f : p.functions) {
    total += abs(eval_affine(f, x));
  }
  return total;
}

const char* to_string(SolutionStatus status) {
  switch (status) {
    case SolutionStatus::Optimal:
      return "OPTIMAL";
    case SolutionStatus::Infeasible:
      return "INFEASIBLE";
    case SolutionStatus::Unbounded:
      return "UNBOUNDED";
    case SolutionStatus::NoFiniteOptimum:
      return "NO_FINITE_OPTIMUM";
  }
  return "UNKNOWN";
}

}  // namespace linred
