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

#ifndef LINRED_SIMPLEX_HPP_
#define LINRED_SIMPLEX_HPP_

#include "linred/model.hpp"

namespace linred {

// Exact two-phase dense tableau simplex on a standard-form LP
// (maximize c.w, Aw <= b, w >= 0), with Bland's smallest-index rule for
// both the entering and the leaving variable, so it terminates on
// degenerate instances too. Returns Optimal (vertex point and exact
// value), Infeasible, or Unbounded.
Solution solve_standard(const StandardLP& lp);

// Phase one only: whether {Aw <= b, w >= 0} is nonempty.
bool standard_feasible(const StandardLP& lp);

}  // namespace linred

#endif  // LINRED_SIMPLEX_HPP_
