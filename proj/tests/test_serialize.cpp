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

#include <random>
#include <string>

#include "doctest.h"
#include "serialize.hpp"
#include "test_util.hpp"

namespace qmat {
namespace {

using io::Json;
using testing::CodeOf;

template <typename ToJson, typename FromJson>
void RoundTrip(const Json& first, ToJson to, FromJson from) {
  const std::string text = io::Dump(first);
  const std::string again = io::Dump(to(from(io::Parse(text))));
  CHECK(text == again);
}

TEST_CASE("field descriptors") {
  Json j = io::FieldToJson(*Field::Make(2, 4));
  CHECK(j.dump() == R"({"e":4,"modulus":[1,1,0,0,1],"p":2})");
  CHECK(io::FieldFromJson(j) == Field::Make(2, 4));
  CHECK(io::FieldToJson(*Field::Make(3)).dump() == R"({"e":1,"modulus":[],"p":3})");
  j["modulus"] = {1, 0, 0, 1, 1};
  CHECK(CodeOf([&] { io::FieldFromJson(j); }) == ErrorCode::kParse);
}

TEST_CASE("rank tables round-trip") {
  RankTable u = Uniform(2, 4, 2);
  const std::string text = io::Dump(io::RankTableToJson(u));
  CHECK(text.rfind(R"({"format":"qml-v1","n":4,"ordering":"canonical-v1","q":2,"ranks":[0,)", 0) == 0);
  RoundTrip(io::RankTableToJson(u), io::RankTableToJson, io::RankTableFromJson);
  CHECK(io::RankTableFromJson(io::Parse(text)) == u);

  Json bad = io::RankTableToJson(u);
  bad["ordering"] = "other";
  CHECK(CodeOf([&] { io::RankTableFromJson(bad); }) == ErrorCode::kParse);
  bad = io::RankTableToJson(u);
  bad.erase("format");
  CHECK(CodeOf([&] { io::RankTableFromJson(bad); }) == ErrorCode::kParse);
  bad = io::RankTableToJson(u);
  bad["ranks"].erase(0);
  CHECK(CodeOf([&] { io::RankTableFromJson(bad); }) == ErrorCode::kInvalidTable);
  // Axiom violations are representable so that check can report them.
  bad = io::RankTableToJson(u);
  bad["ranks"][0] = 1;
  CHECK(!CheckAxioms(io::RankTableFromJson(bad)).pass);
}

TEST_CASE("generators, codes and collections round-trip") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    GeneratorMatrix g = RandomGenerator(t % 2 ? 3 : 2, 1 + t % 4, 4, 2, rng);
    RoundTrip(io::MatrixToJson(g.matrix()), io::MatrixToJson, io::MatrixFromJson);
    CHECK(io::GeneratorFromJson(io::MatrixToJson(g.matrix())).matrix() == g.matrix());
  }
  ConstantDimensionCode c = LiftedMrd(3, 6, 3, 4);
  RoundTrip(io::CdcToJson(c), io::CdcToJson, io::CdcFromJson);

  auto list = EnumerateGrassmannian(3, 3, 1);
  Json coll = io::CollectionToJson(3, 3, list);
  io::Collection back = io::CollectionFromJson(coll);
  CHECK(back.subspaces == list);
  CHECK(io::Dump(io::CollectionToJson(back.q, back.n, back.subspaces)) ==
        io::Dump(coll));
}

TEST_CASE("search results round-trip through their generator") {
  RepresentationSearch r = SearchRepresentation(Uniform(2, 3, 1), 3);
  REQUIRE(r.found);
  Json j = io::SearchToJson(r);
  CHECK(j["found"] == true);
  Matrix g = io::MatrixFromJson(j["generator"]);
  CHECK(g == *r.generator);
  RepresentationSearch none = SearchRepresentation(Uniform(2, 3, 2), 1);
  CHECK(io::SearchToJson(none).dump() == R"({"format":"qml-v1","found":false,"m":0})");
}

TEST_CASE("codeword input is canonicalized") {
  Json j = io::CdcToJson(LiftedMrd(2, 4, 2, 4));
  // Replace one basis by an equivalent non-reduced one.
  Json rows = j["codewords"][1];
  for (size_t c = 0; c < rows[0].size(); ++c) {
    const int a = std::stoi(rows[0][c].get<std::string>());
    const int b = std::stoi(rows[1][c].get<std::string>());
    rows[0][c] = std::to_string(a ^ b);
  }
  j["codewords"][1] = rows;
  ConstantDimensionCode c = io::CdcFromJson(j);
  CHECK(c.codewords() == LiftedMrd(2, 4, 2, 4).codewords());
}

TEST_CASE("malformed input is rejected with a parse or shape error") {
  CHECK(CodeOf([] { io::Parse("{not json"); }) == ErrorCode::kParse);
  Json g = io::MatrixToJson(Matrix::Identity(Field::Make(2, 2), 2));
  Json wrong = g;
  wrong["rows"][0][0] = "2";
  CHECK(CodeOf([&] { io::MatrixFromJson(wrong); }) == ErrorCode::kParse);
  wrong = g;
  wrong["rows"][0].erase(0);
  CHECK(CodeOf([&] { io::MatrixFromJson(wrong); }) == ErrorCode::kShape);
  wrong = g;
  wrong["k"] = 3;
  CHECK(CodeOf([&] { io::MatrixFromJson(wrong); }) == ErrorCode::kShape);
  wrong = g;
  wrong["field"]["p"] = 4;
  CHECK(CodeOf([&] { io::MatrixFromJson(wrong); }) ==
        ErrorCode::kInvalidCharacteristic);
}

TEST_CASE("reports") {
  CHECK(io::AxiomReportToJson(CheckAxioms(Uniform(2, 4, 2))).dump() ==
        R"({"verdict":"pass"})");
  AxiomReport fail;
  fail.pass = false;
  fail.axiom = 3;
  fail.first = 4;
  fail.second = 9;
  CHECK(io::AxiomReportToJson(fail).dump() ==
        R"({"axiom":3,"verdict":"fail","witness":[4,9]})");
  DetSystem sys(2, 2, 1);
  Json sweep = io::SweepToJson(sys, 1, SweepPatterns(sys, 1), true);
  CHECK(sweep["count"] == 4);
  CHECK(sweep["bound"] == "7");  // 1 + 3 + 3
  CHECK(sweep["patterns"].size() == 4);
  const std::string csv = io::BoundsCsv(AsymptoticTable(2, 4, 5));
  CHECK(csv == "n,log2_lower_N,log2_upper_R,gap\n"
               "4,4,31.907178143707,-27.907178143707\n"
               "5,8,49.035938923263,-41.035938923263\n");
  Json bj = io::BoundsJson(2, AsymptoticTable(2, 4, 12));
  CHECK(bj["crossover"] == 7);
  CHECK(bj["rows"][0]["gap"] == "-27.907178143707");
}

}  // namespace
}  // namespace qmat
