// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "serialize.hpp"

#include <sstream>
#include <utility>

#include "error.hpp"

namespace qmat::io {
namespace {

void RequireTag(const Json& j, const char* key, const char* value) {
  Require(j.is_object() && j.contains(key) && j[key].is_string() &&
              j[key].get<std::string>() == value,
          ErrorCode::kParse,
          std::string("expected \"") + key + "\": \"" + value + "\"");
}

int GetInt(const Json& j, const char* key) {
  Require(j.is_object() && j.contains(key) && j[key].is_number_integer(),
          ErrorCode::kParse, std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

const Json& GetArray(const Json& j, const char* key) {
  Require(j.is_object() && j.contains(key) && j[key].is_array(),
          ErrorCode::kParse, std::string("missing array field \"") + key + "\"");
  return j[key];
}

}  // namespace

Json FieldToJson(const Field& f) {
  return Json{{"p", f.characteristic()},
              {"e", f.degree()},
              {"modulus", f.modulus()}};
}

FieldPtr FieldFromJson(const Json& j) {
  FieldPtr f = Field::Make(GetInt(j, "p"), GetInt(j, "e"));
  if (j.contains("modulus")) {
    Require(j["modulus"].is_array() &&
                j["modulus"].get<std::vector<int>>() == f->modulus(),
            ErrorCode::kParse,
            "modulus differs from the deterministic choice for this field");
  }
  return f;
}

Json RowsToJson(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Elem e : m.row(r)) row.push_back(m.field().Format(e));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix RowsFromJson(const FieldPtr& field, const Json& rows, int cols) {
  Require(rows.is_array(), ErrorCode::kParse, "rows must be an array");
  std::vector<Elem> data;
  for (const Json& row : rows) {
    Require(row.is_array() && static_cast<int>(row.size()) == cols,
            ErrorCode::kShape,
            "every row must have " + std::to_string(cols) + " entries");
    for (const Json& e : row) {
      Require(e.is_string(), ErrorCode::kParse, "entries must be strings");
      data.push_back(field->Parse(e.get<std::string>()));
    }
  }
  return Matrix(field, static_cast<int>(rows.size()), cols, std::move(data));
}

Json RankTableToJson(const RankTable& t) {
  return Json{{"format", kFormatTag},
              {"q", t.q()},
              {"n", t.n()},
              {"ordering", kOrderingTag},
              {"ranks", t.ranks()}};
}

RankTable RankTableFromJson(const Json& j) {
  RequireTag(j, "format", kFormatTag);
  RequireTag(j, "ordering", kOrderingTag);
  const Json& ranks = GetArray(j, "ranks");
  std::vector<int> values;
  for (const Json& r : ranks) {
    Require(r.is_number_integer(), ErrorCode::kParse, "ranks must be integers");
    values.push_back(r.get<int>());
  }
  return RankTable(LatticeIndex::Get(GetInt(j, "q"), GetInt(j, "n")),
                   std::move(values));
}

Json MatrixToJson(const Matrix& m) {
  return Json{{"format", kFormatTag},
              {"field", FieldToJson(m.field())},
              {"k", m.rows()},
              {"n", m.cols()},
              {"rows", RowsToJson(m)}};
}

Matrix MatrixFromJson(const Json& j) {
  RequireTag(j, "format", kFormatTag);
  Require(j.contains("field"), ErrorCode::kParse, "missing field descriptor");
  FieldPtr f = FieldFromJson(j["field"]);
  Matrix m = RowsFromJson(f, GetArray(j, "rows"), GetInt(j, "n"));
  if (j.contains("k"))
    Require(GetInt(j, "k") == m.rows(), ErrorCode::kShape,
            "row count does not match k");
  return m;
}

GeneratorMatrix GeneratorFromJson(const Json& j) {
  return GeneratorMatrix(MatrixFromJson(j));
}

Json CdcToJson(const ConstantDimensionCode& c) {
  Json words = Json::array();
  for (const Subspace& s : c.codewords()) words.push_back(RowsToJson(s.basis()));
  return Json{{"format", kFormatTag},
              {"q", c.q()},
              {"n", c.n()},
              {"k", c.k()},
              {"codewords", std::move(words)}};
}

ConstantDimensionCode CdcFromJson(const Json& j) {
  RequireTag(j, "format", kFormatTag);
  const int q = GetInt(j, "q"), n = GetInt(j, "n"), k = GetInt(j, "k");
  FieldPtr f = Field::OfOrder(q);
  std::vector<Subspace> words;
  for (const Json& rows : GetArray(j, "codewords"))
    words.push_back(Subspace::FromRows(RowsFromJson(f, rows, n)));
  return ConstantDimensionCode(q, n, k, std::move(words));
}

Json AxiomReportToJson(const AxiomReport& r) {
  if (r.pass) return Json{{"verdict", "pass"}};
  Json witness = Json::array({r.first});
  if (r.second >= 0) witness.push_back(r.second);
  return Json{{"verdict", "fail"}, {"axiom", r.axiom}, {"witness", witness}};
}

Json StructureToJson(const DerivedStructure& s) {
  return Json{{"rank", s.rank},
              {"independents", s.independents},
              {"bases", s.bases},
              {"circuits", s.circuits},
              {"loops", s.loops},
              {"loop_space", s.loop_space},
              {"is_paving", s.is_paving},
              {"counts",
               {{"independents", s.independents.size()},
                {"bases", s.bases.size()},
                {"circuits", s.circuits.size()},
                {"loops", s.loops.size()}}}};
}

Json SearchToJson(const RepresentationSearch& r) {
  Json j{{"format", kFormatTag}, {"found", r.found}, {"m", r.m}};
  if (r.generator) j["generator"] = MatrixToJson(*r.generator);
  return j;
}

Json SweepToJson(const DetSystem& sys, int m, const SweepOutcome& sweep,
                 bool include_patterns) {
  const long long polys = sys.size();
  const long long vars = static_cast<long long>(sys.k()) * sys.n();
  Json j{{"q", sys.q()},
         {"n", sys.n()},
         {"k", sys.k()},
         {"m", m},
         {"points", sweep.points},
         {"count", sweep.patterns.size()},
         {"full_rank_count", sweep.full_rank_patterns.size()}};
  if (polys >= vars) {
    const BigInt bound = sys.k() == 1 ? ZeroPatternBoundLinear(polys, vars)
                                      : ZeroPatternBound(polys, sys.k(), vars);
    j["bound"] = bound.str();
  } else {
    j["bound"] = nullptr;
  }
  if (include_patterns) {
    Json list = Json::array();
    for (const ZeroPattern& p : sweep.patterns) list.push_back(p.symbols());
    j["patterns"] = std::move(list);
  }
  return j;
}

Json CollectionToJson(int q, int n, const std::vector<Subspace>& s) {
  Json list = Json::array();
  for (const Subspace& v : s) list.push_back(RowsToJson(v.basis()));
  return Json{{"format", kFormatTag}, {"q", q}, {"n", n},
              {"subspaces", std::move(list)}};
}

Collection CollectionFromJson(const Json& j) {
  RequireTag(j, "format", kFormatTag);
  Collection c;
  c.q = GetInt(j, "q");
  c.n = GetInt(j, "n");
  FieldPtr f = Field::OfOrder(c.q);
  for (const Json& rows : GetArray(j, "subspaces"))
    c.subspaces.push_back(Subspace::FromRows(RowsFromJson(f, rows, c.n)));
  return c;
}

std::string BoundsCsv(const std::vector<BoundRow>& rows) {
  std::ostringstream out;
  out << "n,log2_lower_N,log2_upper_R,gap\n";
  for (const BoundRow& r : rows) {
    out << r.n << ',' << r.LowerString() << ',' << r.upper.Format(12) << ','
        << r.GapString() << '\n';
  }
  return out.str();
}

Json BoundsJson(int q, const std::vector<BoundRow>& rows) {
  Json list = Json::array();
  for (const BoundRow& r : rows) {
    list.push_back(Json{{"n", r.n},
                        {"log2_lower_N", r.LowerString()},
                        {"log2_upper_R", r.upper.Format(12)},
                        {"gap", r.GapString()}});
  }
  Json j{{"q", q}, {"rows", std::move(list)}};
  if (auto n0 = Crossover(rows)) j["crossover"] = *n0;
  else j["crossover"] = nullptr;
  return j;
}

std::string Dump(const Json& j) { return j.dump() + "\n"; }

Json Parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace qmat::io
