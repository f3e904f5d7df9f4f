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
// nlohmann::json keeps object keys sorted, so dumping with two-space
// indentation plus a trailing newline is already the canonical encoding;
// all rationals go through to_string and come out in lowest terms.

#include "linred/serialize.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "linred/error.hpp"
#include "linred/rational.hpp"

namespace linred {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------
// Decoding.

const json& field(const json& obj, const std::string& key,
                  const std::string& where) {
  if (!obj.is_object()) {
    throw ParseError(where + ": expected an object");
  }
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(where + ": missing field \"" + key + "\"");
  }
  return *it;
}

Rational rational_from(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (Error& e) {
      e.prepend_context(where + ": ");
      throw;
    }
  }
  if (v.is_number_integer()) {
    return Rational(BigInt(v.get<std::int64_t>()));
  }
  throw ParseError(where +
                   ": expected a rational as \"p/q\" or an integer, got " +
                   v.dump());
}

std::size_t size_from(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() &&
                                   v.get<std::int64_t>() >= 0)) {
    throw ParseError(where + ": expected a nonnegative integer, got " +
                     v.dump());
  }
  return v.get<std::size_t>();
}

Vector vector_from(const json& v, const std::string& where) {
  if (!v.is_array()) {
    throw ParseError(where + ": expected an array");
  }
  Vector result;
  result.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    result.push_back(
        rational_from(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return result;
}

Matrix matrix_from(const json& v, const std::string& where) {
  if (!v.is_array()) {
    throw ParseError(where + ": expected an array of rows");
  }
  std::vector<Vector> rows;
  rows.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    rows.push_back(vector_from(v[i], where + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != rows.front().size()) {
      throw ParseError(where + "[" + std::to_string(i) +
                       "]: ragged matrix row");
    }
  }
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = std::move(rows[i][j]);
  }
  return m;
}

AffineFunction affine_from(const json& v, const std::string& where) {
  AffineFunction f;
  f.constant = rational_from(field(v, "constant", where), where + ".constant");
  f.coefficients =
      vector_from(field(v, "coefficients", where), where + ".coefficients");
  return f;
}

std::vector<AffineFunction> functions_from(const json& v,
                                           const std::string& where) {
  if (!v.is_array()) {
    throw ParseError(where + ": expected an array of functions");
  }
  std::vector<AffineFunction> functions;
  functions.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    functions.push_back(
        affine_from(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return functions;
}

Sense sense_from(const json& v, const std::string& where) {
  const std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  if (text == "min") return Sense::Min;
  if (text == "max") return Sense::Max;
  throw ParseError(where + ": expected \"min\" or \"max\", got " + text);
}

Relation relation_from(const json& v, const std::string& where) {
  const std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  if (text == "<=") return Relation::Le;
  if (text == ">=") return Relation::Ge;
  if (text == "=") return Relation::Eq;
  throw ParseError(where + ": expected \"<=\", \">=\" or \"=\", got " + text);
}

LinearProgram lp_from(const json& doc) {
  LinearProgram lp;
  lp.sense = sense_from(field(doc, "sense", "lp"), "lp.sense");
  lp.objective = affine_from(field(doc, "objective", "lp"), "lp.objective");
  const json& rows = field(doc, "constraints", "lp");
  if (!rows.is_array()) {
    throw ParseError("lp.constraints: expected an array");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "lp.constraints[" + std::to_string(i) + "]";
    LinearConstraint row;
    row.lhs = affine_from(field(rows[i], "lhs", where), where + ".lhs");
    row.rel = relation_from(field(rows[i], "rel", where), where + ".rel");
    row.rhs = affine_from(field(rows[i], "rhs", where), where + ".rhs");
    lp.constraints.push_back(std::move(row));
  }
  const json& signs = field(doc, "var_signs", "lp");
  if (!signs.is_array()) {
    throw ParseError("lp.var_signs: expected an array");
  }
  for (std::size_t j = 0; j < signs.size(); ++j) {
    const std::string where = "lp.var_signs[" + std::to_string(j) + "]";
    const std::string text =
        signs[j].is_string() ? signs[j].get<std::string>() : signs[j].dump();
    if (text == "free") {
      lp.var_signs.push_back(VarSign::Free);
    } else if (text == "nonneg") {
      lp.var_signs.push_back(VarSign::NonNeg);
    } else {
      throw ParseError(where + ": expected \"free\" or \"nonneg\", got " +
                       text);
    }
  }
  validate(lp);
  return lp;
}

StandardLP standard_from(const json& doc, const std::string& where) {
  StandardLP lp;
  lp.c = vector_from(field(doc, "c", where), where + ".c");
  lp.A = matrix_from(field(doc, "A", where), where + ".A");
  lp.b = vector_from(field(doc, "b", where), where + ".b");
  // An empty row list cannot carry its width; rebuild the matrix with the
  // right column count so the shape check passes.
  if (lp.A.rows() == 0) lp.A = Matrix(0, lp.c.size());
  validate(lp);
  return lp;
}

// ---------------------------------------------------------------------
// Certificates.

ChebToLpCert cheb_to_lp_cert_from(const json& doc, const std::string& where) {
  return ChebToLpCert{
      size_from(field(doc, "source_arity", where), where + ".source_arity"),
      size_from(field(doc, "num_functions", where),
                where + ".num_functions")};
}

L1ToLpCert l1_to_lp_cert_from(const json& doc, const std::string& where) {
  return L1ToLpCert{
      size_from(field(doc, "source_arity", where), where + ".source_arity"),
      size_from(field(doc, "num_functions", where),
                where + ".num_functions")};
}

LpToStandardCert lp_to_standard_cert_from(const json& doc,
                                          const std::string& where) {
  LpToStandardCert cert;
  cert.source_sense =
      sense_from(field(doc, "source_sense", where), where + ".source_sense");
  cert.objective_constant =
      rational_from(field(doc, "objective_constant", where),
                    where + ".objective_constant");
  const json& entries = field(doc, "var_map", where);
  if (!entries.is_array()) {
    throw ParseError(where + ".var_map: expected an array");
  }
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const std::string entry_where =
        where + ".var_map[" + std::to_string(j) + "]";
    VarOrigin origin;
    origin.pos = size_from(field(entries[j], "pos", entry_where),
                           entry_where + ".pos");
    if (entries[j].is_object() && entries[j].contains("neg")) {
      origin.neg = size_from(entries[j]["neg"], entry_where + ".neg");
    }
    cert.var_map.push_back(origin);
  }
  cert.standard_num_vars =
      size_from(field(doc, "standard_num_vars", where),
                where + ".standard_num_vars");
  return cert;
}

StandardToGameCert standard_to_game_cert_from(const json& doc,
                                              const std::string& where) {
  return StandardToGameCert{
      standard_from(field(doc, "source", where), where + ".source")};
}

GameToChebCert game_to_cheb_cert_from(const json& doc,
                                      const std::string& where) {
  GameToChebCert cert;
  const json& variant = field(doc, "variant", where);
  const std::string text =
      variant.is_string() ? variant.get<std::string>() : variant.dump();
  if (text == "literal") {
    cert.variant = ChebVariant::Literal;
  } else if (text == "corrected") {
    cert.variant = ChebVariant::Corrected;
  } else {
    throw ParseError(where +
                     ".variant: expected \"literal\" or \"corrected\", got " +
                     text);
  }
  cert.game_size =
      size_from(field(doc, "game_size", where), where + ".game_size");
  cert.shift_c = rational_from(field(doc, "shift_c", where),
                               where + ".shift_c");
  cert.scale_alpha = rational_from(field(doc, "scale_alpha", where),
                                   where + ".scale_alpha");
  return cert;
}

ReductionCertificate certificate_from(const json& doc,
                                      const std::string& where);

ChainCert chain_cert_from(const json& doc, const std::string& where) {
  const json& stages = field(doc, "stages", where);
  if (!stages.is_array() || stages.size() != 4) {
    throw ParseError(where + ".stages: expected exactly 4 stages");
  }
  ChainCert chain;
  const auto stage_where = [&](std::size_t i) {
    return where + ".stages[" + std::to_string(i) + "]";
  };
  const ReductionCertificate s0 = certificate_from(stages[0], stage_where(0));
  const ReductionCertificate s1 = certificate_from(stages[1], stage_where(1));
  const ReductionCertificate s2 = certificate_from(stages[2], stage_where(2));
  const ReductionCertificate s3 = certificate_from(stages[3], stage_where(3));
  if (!std::holds_alternative<L1ToLpCert>(s0) ||
      !std::holds_alternative<LpToStandardCert>(s1) ||
      !std::holds_alternative<StandardToGameCert>(s2) ||
      !std::holds_alternative<GameToChebCert>(s3)) {
    throw ParseError(where + ".stages: expected the kinds l1_to_lp, "
                             "lp_to_standard, standard_to_game, game_to_cheb "
                             "in order");
  }
  chain.to_lp = std::get<L1ToLpCert>(s0);
  chain.to_standard = std::get<LpToStandardCert>(s1);
  chain.to_game = std::get<StandardToGameCert>(s2);
  chain.to_cheb = std::get<GameToChebCert>(s3);
  return chain;
}

ReductionCertificate certificate_from(const json& doc,
                                      const std::string& where) {
  const json& kind = field(doc, "kind", where);
  const std::string text =
      kind.is_string() ? kind.get<std::string>() : kind.dump();
  if (text == "cheb_to_lp") return cheb_to_lp_cert_from(doc, where);
  if (text == "l1_to_lp") return l1_to_lp_cert_from(doc, where);
  if (text == "lp_to_standard") return lp_to_standard_cert_from(doc, where);
  if (text == "standard_to_game") {
    return standard_to_game_cert_from(doc, where);
  }
  if (text == "game_to_cheb") return game_to_cheb_cert_from(doc, where);
  if (text == "chain") return chain_cert_from(doc, where);
  throw ParseError(where + ".kind: unknown certificate kind " + text);
}

// ---------------------------------------------------------------------
// Encoding.

json to_json(const Rational& value) { return to_string(value); }

json to_json(const Vector& values) {
  json arr = json::array();
  for (const Rational& value : values) arr.push_back(to_json(value));
  return arr;
}

json to_json(const Matrix& m) {
  json arr = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    arr.push_back(std::move(row));
  }
  return arr;
}

json to_json(const AffineFunction& f) {
  return json{{"constant", to_json(f.constant)},
              {"coefficients", to_json(f.coefficients)}};
}

json to_json(const std::vector<AffineFunction>& functions) {
  json arr = json::array();
  for (const AffineFunction& f : functions) arr.push_back(to_json(f));
  return arr;
}

json to_json(const StandardLP& lp) {
  return json{
      {"c", to_json(lp.c)}, {"A", to_json(lp.A)}, {"b", to_json(lp.b)}};
}

const char* sense_name(Sense sense) {
  return sense == Sense::Min ? "min" : "max";
}

json to_json(const LinearProgram& lp) {
  json rows = json::array();
  for (const LinearConstraint& row : lp.constraints) {
    const char* rel = row.rel == Relation::Le   ? "<="
                      : row.rel == Relation::Ge ? ">="
                                                : "=";
    rows.push_back(json{{"lhs", to_json(row.lhs)},
                        {"rel", rel},
                        {"rhs", to_json(row.rhs)}});
  }
  json signs = json::array();
  for (VarSign sign : lp.var_signs) {
    signs.push_back(sign == VarSign::Free ? "free" : "nonneg");
  }
  return json{{"sense", sense_name(lp.sense)},
              {"objective", to_json(lp.objective)},
              {"constraints", std::move(rows)},
              {"var_signs", std::move(signs)}};
}

json to_json(const ReductionCertificate& cert);

json to_json(const ChebToLpCert& cert) {
  return json{{"kind", "cheb_to_lp"},
              {"source_arity", cert.source_arity},
              {"num_functions", cert.num_functions}};
}

json to_json(const L1ToLpCert& cert) {
  return json{{"kind", "l1_to_lp"},
              {"source_arity", cert.source_arity},
              {"num_functions", cert.num_functions}};
}

json to_json(const LpToStandardCert& cert) {
  json entries = json::array();
  for (const VarOrigin& origin : cert.var_map) {
    json entry{{"pos", origin.pos}};
    if (origin.neg) entry["neg"] = *origin.neg;
    entries.push_back(std::move(entry));
  }
  return json{{"kind", "lp_to_standard"},
              {"source_sense", sense_name(cert.source_sense)},
              {"objective_constant", to_json(cert.objective_constant)},
              {"var_map", std::move(entries)},
              {"standard_num_vars", cert.standard_num_vars}};
}

json to_json(const StandardToGameCert& cert) {
  return json{{"kind", "standard_to_game"}, {"source", to_json(cert.source)}};
}

json to_json(const GameToChebCert& cert) {
  return json{{"kind", "game_to_cheb"},
              {"variant", to_string(cert.variant)},
              {"game_size", cert.game_size},
              {"shift_c", to_json(cert.shift_c)},
              {"scale_alpha", to_json(cert.scale_alpha)}};
}

json to_json(const ChainCert& cert) {
  json stages = json::array();
  stages.push_back(to_json(cert.to_lp));
  stages.push_back(to_json(cert.to_standard));
  stages.push_back(to_json(cert.to_game));
  stages.push_back(to_json(cert.to_cheb));
  return json{{"kind", "chain"}, {"stages", std::move(stages)}};
}

json to_json(const ReductionCertificate& cert) {
  return std::visit([](const auto& c) { return to_json(c); }, cert);
}

}  // namespace

const char* form_name(const Problem& problem) {
  struct Namer {
    const char* operator()(const LinearProgram&) const { return "lp"; }
    const char* operator()(const StandardLP&) const { return "standard"; }
    const char* operator()(const MatrixGame&) const { return "game"; }
    const char* operator()(const ChebyshevProblem&) const { return "cheb"; }
    const char* operator()(const L1Problem&) const { return "l1"; }
  };
  return std::visit(Namer{}, problem);
}

ParsedDocument parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("top level: expected an object");
  }
  const json& form = field(doc, "form", "top level");
  const std::string name =
      form.is_string() ? form.get<std::string>() : form.dump();

  Problem problem = [&]() -> Problem {
    if (name == "lp") return lp_from(doc);
    if (name == "standard") return standard_from(doc, "standard");
    if (name == "game") {
      return MatrixGame(matrix_from(field(doc, "payoff", "game"),
                                    "game.payoff"));
    }
    if (name == "cheb") {
      ChebyshevProblem p{
          functions_from(field(doc, "functions", "cheb"), "cheb.functions")};
      validate(p);
      return p;
    }
    if (name == "l1") {
      L1Problem p{
          functions_from(field(doc, "functions", "l1"), "l1.functions")};
      validate(p);
      return p;
    }
    throw ParseError("form: expected one of lp, standard, game, cheb, l1; "
                     "got " + name);
  }();

  std::optional<ReductionCertificate> certificate;
  if (doc.contains("certificate") && !doc["certificate"].is_null()) {
    certificate = certificate_from(doc["certificate"], "certificate");
  }
  return ParsedDocument{std::move(problem), std::move(certificate)};
}

std::string emit_problem(const Problem& problem,
                         const std::optional<ReductionCertificate>& certificate) {
  json doc;
  doc["form"] = form_name(problem);
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LinearProgram>) {
          const json fields = to_json(p);
          for (const auto& [key, value] : fields.items()) doc[key] = value;
        } else if constexpr (std::is_same_v<T, StandardLP>) {
          const json fields = to_json(p);
          for (const auto& [key, value] : fields.items()) doc[key] = value;
        } else if constexpr (std::is_same_v<T, MatrixGame>) {
          doc["payoff"] = to_json(p.payoff());
        } else {
          doc["functions"] = to_json(p.functions);
        }
      },
      problem);
  if (certificate) doc["certificate"] = to_json(*certificate);
  return doc.dump(2) + "\n";
}

}  // namespace linred
