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
// Reduction certificates: the metadata each transformation records so that
// a solution of the target problem can be mapped back to the source problem
// exactly. One struct per reduction; the pullback maps live in
// reductions.hpp.

#ifndef LINRED_CERTIFICATE_HPP_
#define LINRED_CERTIFICATE_HPP_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "linred/model.hpp"
#include "linred/rational.hpp"

namespace linred {

// Max-abs problem (m functions, arity n) to epigraph LP in (x, t): the
// pullback just drops the trailing t coordinate.
struct ChebToLpCert {
  std::size_t source_arity = 0;   // n
  std::size_t num_functions = 0;  // m

  bool operator==(const ChebToLpCert& other) const = default;
};

// Sum-abs problem to LP in (x, t_1..t_m): the pullback drops the t block.
struct L1ToLpCert {
  std::size_t source_arity = 0;   // n
  std::size_t num_functions = 0;  // m

  bool operator==(const L1ToLpCert& other) const = default;
};

// Where one original LP variable went in the standard form: a single
// nonnegative column, or a split pair u - v for a free variable.
struct VarOrigin {
  std::size_t pos = 0;               // column of the variable, or of u
  std::optional<std::size_t> neg;    // column of v when split

  bool operator==(const VarOrigin& other) const = default;
};

struct LpToStandardCert {
  Sense source_sense = Sense::Min;  // Min means the objective was negated
  Rational objective_constant;      // dropped constant term, restored on pullback
  std::vector<VarOrigin> var_map;   // one entry per source variable
  std::size_t standard_num_vars = 0;

  bool operator==(const LpToStandardCert& other) const = default;
};

// Standard-form LP to symmetric game. The source is kept whole: the
// pullback needs its dimensions for the (y, w, t) partition and its data
// to re-derive the game when an optimal strategy with positive last
// coordinate has to be searched for.
struct StandardToGameCert {
  StandardLP source;

  std::size_t num_rows() const { return source.num_rows(); }      // m'
  std::size_t num_vars() const { return source.num_vars(); }      // n'
  std::size_t game_size() const {
    return source.num_rows() + source.num_vars() + 1;             // N
  }

  bool operator==(const StandardToGameCert& other) const = default;
};

enum class ChebVariant { Literal, Corrected };

const char* to_string(ChebVariant variant);

// Game to max-abs problem. shift_c is the constant added to the (scaled)
// payoff entries; scale_alpha is the factor the payoff matrix was
// multiplied by first. The literal form uses (c0, 1), the corrected form
// (1, 1/c0), where c0 is the largest payoff entry.
struct GameToChebCert {
  ChebVariant variant = ChebVariant::Corrected;
  std::size_t game_size = 0;  // N
  Rational shift_c;
  Rational scale_alpha;

  bool operator==(const GameToChebCert& other) const = default;
};

// Composite certificate for the four-stage sum-abs to max-abs pipeline,
// stored in application order (source to target).
struct ChainCert {
  L1ToLpCert to_lp;
  LpToStandardCert to_standard;
  StandardToGameCert to_game;
  GameToChebCert to_cheb;

  bool operator==(const ChainCert& other) const = default;
};

// Open union used where a certificate of unknown stage is carried around
// (serialization, CLI output). Internal code prefers the concrete types.
using ReductionCertificate =
    std::variant<ChebToLpCert, L1ToLpCert, LpToStandardCert,
                 StandardToGameCert, GameToChebCert, ChainCert>;

}  // namespace linred

#endif  // LINRED_CERTIFICATE_HPP_
