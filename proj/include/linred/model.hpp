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
// Value types for every problem form handled by the library: affine
// functions, linear programs (general and standard form), symmetric matrix
// games, mixed strategies, and max-abs / sum-abs approximation problems.
// All values are immutable after construction and every operation is a
// pure function.

#ifndef LINRED_MODEL_HPP_
#define LINRED_MODEL_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "linred/error.hpp"
#include "linred/rational.hpp"

namespace linred {

enum class Sense { Min, Max };
enum class Relation { Le, Ge, Eq };
enum class VarSign { Free, NonNeg };
enum class SolutionStatus { Optimal, Infeasible, Unbounded, NoFiniteOptimum };

// Dense row-major rational matrix. Instances here are desk scale, so no
// sparsity machinery.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// b0 + c_1 x_1 + ... + c_n x_n.
struct AffineFunction {
  Rational constant;    // b0
  Vector coefficients;  // c_1..c_n

  std::size_t arity() const { return coefficients.size(); }

  bool operator==(const AffineFunction& other) const = default;
};

// Exact evaluation at a point of matching length.
Rational eval_affine(const AffineFunction& f, const Vector& x);

// Pointwise algebra on affine functions of equal arity.
AffineFunction operator+(const AffineFunction& a, const AffineFunction& b);
AffineFunction operator-(const AffineFunction& a, const AffineFunction& b);
AffineFunction operator-(const AffineFunction& a);
AffineFunction operator*(const Rational& factor, const AffineFunction& a);

struct LinearConstraint {
  AffineFunction lhs;
  Relation rel = Relation::Le;
  AffineFunction rhs;

  bool operator==(const LinearConstraint& other) const = default;
};

// Arity-checked constraint builders.
LinearConstraint constraint_le(AffineFunction lhs, AffineFunction rhs);
LinearConstraint constraint_ge(AffineFunction lhs, AffineFunction rhs);
LinearConstraint constraint_eq(AffineFunction lhs, AffineFunction rhs);

// Optimize an affine objective under affine <=, >=, = constraints.
// var_signs[j] == NonNeg is only ever set by producers for which x_j >= 0
// is implied by (or consistent with) the constraint set.
struct LinearProgram {
  Sense sense = Sense::Min;
  AffineFunction objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VarSign> var_signs;

  std::size_t num_vars() const { return var_signs.size(); }

  bool operator==(const LinearProgram& other) const = default;
};

// Throws InvariantViolation unless all arities agree with var_signs.
void validate(const LinearProgram& lp);

// maximize c.w subject to Aw <= b, w >= 0. Zero rows are fine; at least
// one variable is required.
struct StandardLP {
  Vector c;  // length n
  Matrix A;  // m x n
  Vector b;  // length m

  std::size_t num_vars() const { return c.size(); }
  std::size_t num_rows() const { return b.size(); }

  bool operator==(const StandardLP& other) const = default;
};

void validate(const StandardLP& lp);

// Symmetric two-player zero-sum game: payoff matrix M with M = -M^T,
// enforced entrywise at construction. When M != 0, the largest entry is
// positive (entries come in +/- pairs).
class MatrixGame {
 public:
  explicit MatrixGame(Matrix payoff);

  const Matrix& payoff() const { return payoff_; }
  std::size_t size() const { return payoff_.rows(); }
  bool is_zero() const { return payoff_.is_zero(); }
  Rational max_entry() const;

  bool operator==(const MatrixGame& other) const = default;

 private:
  Matrix payoff_;
};

// Mixed strategy: x >= 0 entrywise with sum(x) = 1 exactly, enforced at
// construction (NotAStrategyError otherwise, with the violated condition
// and witness in the message).
class Strategy {
 public:
  explicit Strategy(Vector x);

  const Vector& probabilities() const { return x_; }
  std::size_t size() const { return x_.size(); }

  bool operator==(const Strategy& other) const = default;

 private:
  Vector x_;
};

Strategy uniform_strategy(std::size_t n);

// Minimize max_i |f_i(x)| over a finite list of affine functions with a
// common arity.
struct ChebyshevProblem {
  std::vector<AffineFunction> functions;

  std::size_t size() const { return functions.size(); }
  std::size_t arity() const {
    return functions.empty() ? 0 : functions.front().arity();
  }

  bool operator==(const ChebyshevProblem& other) const = default;
};

void validate(const ChebyshevProblem& p);

// Minimize sum_i |f_i(x)|.
struct L1Problem {
  std::vector<AffineFunction> functions;

  std::size_t size() const { return functions.size(); }
  std::size_t arity() const {
    return functions.empty() ? 0 : functions.front().arity();
  }

  bool operator==(const L1Problem& other) const = default;
};

void validate(const L1Problem& p);

Rational eval_cheb(const ChebyshevProblem& p, const Vector& x);
Rational eval_l1(const L1Problem& p, const Vector& x);

// point and value are present exactly when status == Optimal, and the
// value equals the objective at the point, exactly.
struct Solution {
  SolutionStatus status = SolutionStatus::Infeasible;
  std::optional<Vector> point;
  std::optional<Rational> value;

  static Solution optimal(Vector point, Rational value) {
    return Solution{SolutionStatus::Optimal, std::move(point),
                    std::move(value)};
  }
  static Solution infeasible() {
    return Solution{SolutionStatus::Infeasible, std::nullopt, std::nullopt};
  }
  static Solution unbounded() {
    return Solution{SolutionStatus::Unbounded, std::nullopt, std::nullopt};
  }
  static Solution no_finite_optimum() {
    return Solution{SolutionStatus::NoFiniteOptimum, std::nullopt,
                    std::nullopt};
  }

  bool operator==(const Solution& other) const = default;
};

const char* to_string(SolutionStatus status);

}  // namespace linred

#endif  // LINRED_MODEL_HPP_
