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

#include "linred/verify.hpp"

#include <cstddef>
#include <exception>
#include <string>
#include <utility>

#include "linred/error.hpp"
#include "linred/generators.hpp"
#include "linred/model.hpp"
#include "linred/oracles.hpp"
#include "linred/rational.hpp"
#include "linred/reductions.hpp"
#include "linred/serialize.hpp"
#include "linred/solvers.hpp"

namespace linred {

namespace {

class Checker {
 public:
  explicit Checker(VerifyReport* report) : report_(report) {}

  void check(bool ok, const std::string& note) {
    ++report_->checks_run;
    if (!ok) report_->failures.push_back(note);
  }

  // Serialization must round-trip to an equal value and re-emit to the
  // identical byte string.
  void check_round_trip(const Problem& problem,
                        const std::optional<ReductionCertificate>& cert,
                        const std::string& note) {
    ++report_->checks_run;
    try {
      const std::string first = emit_problem(problem, cert);
      const ParsedDocument parsed = parse_problem(first);
      const bool same_value =
          parsed.problem == problem && parsed.certificate == cert;
      const bool same_bytes =
          emit_problem(parsed.problem, parsed.certificate) == first;
      if (!same_value || !same_bytes) {
        report_->failures.push_back(note + ": round trip mismatch");
      }
    } catch (const std::exception& e) {
      report_->failures.push_back(note + ": " + e.what());
    }
  }

 private:
  VerifyReport* report_;
};

void verify_game_cheb_equivalence(Rng& rng, std::size_t trials,
                                  std::size_t max_size, Checker& out) {
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t size = 2 + trial % (max_size - 1);
    const std::string tag =
        "game/cheb trial " + std::to_string(trial);
    try {
      const MatrixGame game = random_skew_game(rng, size);
      const auto [cheb, cert] = game_to_cheb(game, ChebVariant::Corrected);
      const Solution sol = solve_cheb(cheb);
      out.check(sol.status == SolutionStatus::Optimal && *sol.value == 1,
                tag + ": optimum is not exactly 1");
      const Strategy strategy = cheb_sol_to_strategy(cert, sol);
      out.check(verify_strategy_optimal(game, strategy),
                tag + ": recovered point is not an optimal strategy");
      for (const Strategy& vertex : enumerate_game_optima(game)) {
        out.check(eval_cheb(cheb, vertex.probabilities()) == 1,
                  tag + ": an optimal strategy does not evaluate to 1");
      }
      out.check_round_trip(Problem(game), std::nullopt, tag + " (game)");
      out.check_round_trip(Problem(cheb), ReductionCertificate(cert),
                           tag + " (cheb)");
    } catch (const std::exception& e) {
      out.check(false, tag + ": " + e.what());
    }
  }
}

void verify_simplex_against_oracle(Rng& rng, std::size_t trials,
                                   Checker& out) {
  constexpr LpShape kShapes[] = {LpShape::BoundedFeasible, LpShape::Mixed,
                                 LpShape::ForcedInfeasible,
                                 LpShape::ForcedUnbounded};
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::string tag = "simplex/oracle trial " + std::to_string(trial);
    try {
      const LinearProgram lp = random_lp(rng, kShapes[trial % 4]);
      const Solution fast = simplex_solve(lp);
      const Solution truth = vertex_enum_solve(lp);
      out.check(fast.status == truth.status,
                tag + ": status " + to_string(fast.status) + " vs oracle " +
                    to_string(truth.status));
      if (fast.status == SolutionStatus::Optimal &&
          truth.status == SolutionStatus::Optimal) {
        out.check(*fast.value == *truth.value,
                  tag + ": value " + to_string(*fast.value) + " vs oracle " +
                      to_string(*truth.value));
        out.check(eval_affine(lp.objective, *fast.point) == *fast.value,
                  tag + ": reported value differs from the objective at the "
                        "reported point");
      }
      out.check_round_trip(Problem(lp), std::nullopt, tag + " (lp)");
    } catch (const std::exception& e) {
      out.check(false, tag + ": " + e.what());
    }
  }
}

void verify_l1_routes(Rng& rng, std::size_t trials, Checker& out) {
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::string tag = "sum-abs routes trial " + std::to_string(trial);
    try {
      const std::size_t m = 1 + trial % 6;
      const std::size_t n = 1 + trial % 3;
      const L1Problem p = random_l1(rng, m, n);

      const Solution direct = solve_l1(p);
      const Solution via_signs = solve_cheb(l1_to_cheb_direct(p));
      const auto [cheb, chain] = l1_to_cheb_linear(p);
      const Solution pulled = cheb_chain_pullback(chain, solve_cheb(cheb));

      out.check(direct.status == SolutionStatus::Optimal &&
                    via_signs.status == SolutionStatus::Optimal &&
                    pulled.status == SolutionStatus::Optimal,
                tag + ": a route failed to report an optimum");
      out.check(*direct.value == *via_signs.value &&
                    *direct.value == *pulled.value,
                tag + ": route values disagree: " + to_string(*direct.value) +
                    ", " + to_string(*via_signs.value) + ", " +
                    to_string(*pulled.value));
      out.check(eval_l1(p, *pulled.point) == *pulled.value,
                tag + ": pulled-back point does not achieve the value");
      out.check(l1_cheb_pointwise_check(p, 100, 1000003 * (trial + 1)),
                tag + ": pointwise sum-abs/max-abs identity failed");
      out.check_round_trip(Problem(p), std::nullopt, tag + " (l1)");
      out.check_round_trip(Problem(cheb), ReductionCertificate(chain),
                           tag + " (chain)");
    } catch (const std::exception& e) {
      out.check(false, tag + ": " + e.what());
    }
  }
}

}  // namespace

VerifyReport run_verification(std::uint64_t seed, std::size_t trials,
                              std::size_t max_size) {
  if (max_size < 2) max_size = 2;
  if (max_size > 6) max_size = 6;
  VerifyReport report;
  Checker out(&report);
  Rng rng(seed);
  verify_game_cheb_equivalence(rng, trials, max_size, out);
  verify_simplex_against_oracle(rng, trials, out);
  verify_l1_routes(rng, trials, out);
  return report;
}

}  // namespace linred
