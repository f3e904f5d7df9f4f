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

#ifndef LINRED_VERIFY_HPP_
#define LINRED_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace linred {

struct VerifyReport {
  std::size_t checks_run = 0;
  std::vector<std::string> failures;  // one line per failed check

  bool ok() const { return failures.empty(); }
};

// Seeded random cross-verification suites, all with exact equality:
//   - corrected game-to-max-abs equivalence on random skew games
//     (optimum exactly 1, argmin is an optimal strategy, and every
//     enumerated optimal strategy evaluates to exactly 1);
//   - simplex versus the vertex-enumeration oracle on random LPs covering
//     optimal, infeasible, and unbounded outcomes;
//   - the three sum-abs routes (direct solve, sign-pattern reduction,
//     four-stage pipeline with pullback) agreeing on random instances,
//     plus pointwise sum-abs/max-abs agreement at random points;
//   - serialization round trips on every generated instance.
// trials scales the instance counts; max_size caps game sizes (<= 6) and
// is clamped to the oracle limits.
VerifyReport run_verification(std::uint64_t seed, std::size_t trials,
                              std::size_t max_size);

}  // namespace linred

#endif  // LINRED_VERIFY_HPP_
