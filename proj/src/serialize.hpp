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

#ifndef QMAT_SERIALIZE_HPP_
#define QMAT_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "bounds.hpp"
#include "cdc.hpp"
#include "qmatroid.hpp"
#include "repr_codes.hpp"
#include "zeropattern.hpp"

namespace qmat::io {

using Json = nlohmann::json;

inline constexpr char kFormatTag[] = "qml-v1";
inline constexpr char kOrderingTag[] = "canonical-v1";

// {"p", "e", "modulus"}; the modulus is low-degree-first and empty for e = 1.
Json FieldToJson(const Field& f);
// Rejects a modulus that differs from the deterministic choice for (p, e).
FieldPtr FieldFromJson(const Json& j);

// Array of rows, each an array of base-p digit strings.
Json RowsToJson(const Matrix& m);
Matrix RowsFromJson(const FieldPtr& field, const Json& rows, int cols);

// {"format", "q", "n", "ordering", "ranks"}. Parsing checks the lattice size
// but not the axioms.
Json RankTableToJson(const RankTable& t);
RankTable RankTableFromJson(const Json& j);

// {"format", "field", "k", "n", "rows"}.
Json MatrixToJson(const Matrix& m);
Matrix MatrixFromJson(const Json& j);
GeneratorMatrix GeneratorFromJson(const Json& j);

// {"format", "q", "n", "k", "codewords"}; codewords are canonicalized.
Json CdcToJson(const ConstantDimensionCode& c);
ConstantDimensionCode CdcFromJson(const Json& j);

Json AxiomReportToJson(const AxiomReport& r);
Json StructureToJson(const DerivedStructure& s);
// {"format", "found", "m", "generator"?}.
Json SearchToJson(const RepresentationSearch& r);
Json SweepToJson(const DetSystem& sys, int m, const SweepOutcome& sweep,
                 bool include_patterns);

// {"format", "q", "n", "subspaces"}; extra keys are ignored on parse.
Json CollectionToJson(int q, int n, const std::vector<Subspace>& s);
struct Collection {
  int q = 0;
  int n = 0;
  std::vector<Subspace> subspaces;
};
Collection CollectionFromJson(const Json& j);

std::string BoundsCsv(const std::vector<BoundRow>& rows);
Json BoundsJson(int q, const std::vector<BoundRow>& rows);

// Compact dump followed by a newline.
std::string Dump(const Json& j);
Json Parse(const std::string& text);

}  // namespace qmat::io

#endif  // QMAT_SERIALIZE_HPP_
