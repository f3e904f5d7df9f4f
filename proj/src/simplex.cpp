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
// Dense exact tableau simplex. Internally everything is minimization in
// the row form
//
//   z + sum_j T(obj, j) x_j = T(obj, rhs)
//
// so with basic columns kept at coefficient zero the current objective
// value is the objective row's rhs, and a nonbasic column with a positive
// objective-row coefficient decreases z when it enters. Bland's rule
// (lowest-index entering column, lowest-index basic variable on ratio
// ties) is used throughout, which rules out cycling.

#include "linred/simplex.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linred/error.hpp"
#include "linred/rational.hpp"

namespace linred {

namespace {

class Tableau {
 public:
  explicit Tableau(const StandardLP& lp) : c_(lp.c) { build(lp); }

  // Drives the artificial variables to zero. False means infeasible.
  bool run_phase_one();

  // From a feasible basis, maximizes c.w. False means unbounded.
  bool run_phase_two();

  // Basic solution of the structural variables.
  Vector point() const;

 private:
  enum class Step { Done, Pivoted, Unbounded };

  std::size_t width() const { return num_columns_ + 1; }  // + rhs
  Rational& rhs(Vector& row) const { return row[num_columns_]; }
  const Rational& rhs(const Vector& row) const { return row[num_columns_]; }

  void build(const StandardLP& lp);
  void pivot(std::size_t pivot_row, std::size_t pivot_col);
  Step bland_step(std::size_t enterable_columns);
  void remove_artificials_from_basis();

  Vector c_;
  std::size_t num_structural_;  // n
  std::size_t num_real_;        // n + one slack per row
  std::size_t num_columns_;     // + artificials
  std::vector<Vector> rows_;
  Vector objective_;
  std::vector<std::size_t> basis_;  // variable basic in each row
};

void Tableau::build(const StandardLP& lp) {
  const std::size_t m = lp.num_rows();
  const std::size_t n = lp.num_vars();
  num_structural_ = n;
  num_real_ = n + m;

  std::size_t num_artificial = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.b[i] < 0) ++num_artificial;
  }
  num_columns_ = num_real_ + num_artificial;

  // Aw + s = b row by row; rows with negative rhs are negated and given
  // an artificial basic variable, the rest start with their slack basic.
  rows_.assign(m, Vector(width()));
  basis_.resize(m);
  std::size_t next_artificial = num_real_;
  for (std::size_t i = 0; i < m; ++i) {
    Vector& row = rows_[i];
    const bool negate = lp.b[i] < 0;
    const Rational sign = negate ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) row[j] = sign * lp.A(i, j);
    row[n + i] = sign;
    rhs(row) = sign * lp.b[i];
    if (negate) {
      const std::size_t artificial = next_artificial++;
      row[artificial] = 1;
      basis_[i] = artificial;
    } else {
      basis_[i] = n + i;
    }
  }

  // Phase-one objective: minimize the sum of the artificials. Starting
  // from z - sum(a_k) = 0, adding each artificial row restores zero
  // coefficients on the basic columns.
  objective_.assign(width(), Rational(0));
  for (std::size_t a = num_real_; a < num_columns_; ++a) objective_[a] = -1;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis_[i] < num_real_) continue;
    for (std::size_t j = 0; j < width(); ++j) objective_[j] += rows_[i][j];
  }
}

void Tableau::pivot(std::size_t pivot_row, std::size_t pivot_col) {
  Vector& prow = rows_[pivot_row];
  const Rational factor = prow[pivot_col];
  for (Rational& entry : prow) entry /= factor;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i == pivot_row) continue;
    const Rational scale = rows_[i][pivot_col];
    if (scale == 0) continue;
    for (std::size_t j = 0; j < width(); ++j) {
      rows_[i][j] -= scale * prow[j];
    }
  }
  const Rational scale = objective_[pivot_col];
  if (scale != 0) {
    for (std::size_t j = 0; j < width(); ++j) {
      objective_[j] -= scale * prow[j];
    }
  }
  basis_[pivot_row] = pivot_col;
}

Tableau::Step Tableau::bland_step(std::size_t enterable_columns) {
  std::size_t entering = enterable_columns;
  for (std::size_t j = 0; j < enterable_columns; ++j) {
    if (objective_[j] > 0) {
      entering = j;
      break;
    }
  }
  if (entering == enterable_columns) return Step::Done;

  std::optional<std::size_t> leaving;
  Rational best_ratio;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i][entering] <= 0) continue;
    const Rational ratio = rhs(rows_[i]) / rows_[i][entering];
    if (!leaving || ratio < best_ratio ||
        (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
      leaving = i;
      best_ratio = ratio;
    }
  }
  if (!leaving) return Step::Unbounded;
  pivot(*leaving, entering);
  return Step::Pivoted;
}

bool Tableau::run_phase_one() {
  while (true) {
    const Step step = bland_step(num_columns_);
    if (step == Step::Done) break;
    if (step == Step::Unbounded) {
      // The artificial sum is bounded below by zero; no entering column
      // can ever be ratio-free.
      throw std::logic_error("phase one reported an unbounded objective");
    }
  }
  if (rhs(objective_) != 0) return false;
  remove_artificials_from_basis();
  return true;
}

void Tableau::remove_artificials_from_basis() {
  // Basic artificials sit at value zero now. Swap each for any real
  // column with a nonzero coefficient (a zero-rhs pivot keeps the basis
  // feasible even on a negative element); a row with none is a redundant
  // original constraint and is dropped.
  for (std::size_t i = rows_.size(); i-- > 0;) {
    if (basis_[i] < num_real_) continue;
    std::size_t replacement = num_real_;
    for (std::size_t j = 0; j < num_real_; ++j) {
      if (rows_[i][j] != 0) {
        replacement = j;
        break;
      }
    }
    if (replacement < num_real_) {
      pivot(i, replacement);
    } else {
      rows_.erase(rows_.begin() + i);
      basis_.erase(basis_.begin() + i);
    }
  }
}

bool Tableau::run_phase_two() {
  // Maximizing c.w is minimizing -c.w; in row form that puts +c_j on the
  // structural columns. Subtracting multiples of the basic rows restores
  // zero coefficients over the current basis.
  objective_.assign(width(), Rational(0));
  for (std::size_t j = 0; j < num_structural_; ++j) objective_[j] = c_[j];
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational scale = objective_[basis_[i]];
    if (scale == 0) continue;
    for (std::size_t j = 0; j < width(); ++j) {
      objective_[j] -= scale * rows_[i][j];
    }
  }
  while (true) {
    const Step step = bland_step(num_real_);
    if (step == Step::Done) return true;
    if (step == Step::Unbounded) return false;
  }
}

Vector Tableau::point() const {
  Vector w(num_structural_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (basis_[i] < num_structural_) w[basis_[i]] = rhs(rows_[i]);
  }
  return w;
}

}  // namespace

Solution solve_standard(const StandardLP& lp) {
  validate(lp);
  Tableau tableau(lp);
  if (!tableau.run_phase_one()) return Solution::infeasible();
  if (!tableau.run_phase_two()) return Solution::unbounded();
  Vector w = tableau.point();
  Rational value = 0;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) value += lp.c[j] * w[j];
  return Solution::optimal(std::move(w), std::move(value));
}

bool standard_feasible(const StandardLP& lp) {
  validate(lp);
  Tableau tableau(lp);
  return tableau.run_phase_one();
}

}  // namespace linred
