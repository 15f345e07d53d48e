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

#include <cstring>
#include <string>

#include "doctest.h"
#include "qmat/qmat.h"

namespace {

std::string Take(char* s) {
  std::string out = s ? s : "";
  qmat_string_free(s);
  return out;
}

TEST_CASE("uniform table through the C interface") {
  qmat_rank_table* t = nullptr;
  REQUIRE(qmat_uniform(2, 4, 2, &t) == QMAT_OK);
  int q = 0, n = 0, size = 0, rank = 0;
  CHECK(qmat_rank_table_info(t, &q, &n, &size, &rank) == QMAT_OK);
  CHECK(q == 2);
  CHECK(n == 4);
  CHECK(size == 67);
  CHECK(rank == 2);
  int r = -1;
  CHECK(qmat_rank_table_get(t, 0, &r) == QMAT_OK);
  CHECK(r == 0);
  CHECK(qmat_rank_table_get(t, 67, &r) == QMAT_ERR_INVALID_ARGUMENT);

  int pass = 0;
  char* report = nullptr;
  CHECK(qmat_check_axioms(t, &pass, &report) == QMAT_OK);
  CHECK(pass == 1);
  CHECK(Take(report) == "{\"verdict\":\"pass\"}\n");

  char* json = nullptr;
  REQUIRE(qmat_rank_table_to_json(t, &json) == QMAT_OK);
  const std::string text = Take(json);
  qmat_rank_table* back = nullptr;
  REQUIRE(qmat_rank_table_from_json(text.c_str(), &back) == QMAT_OK);
  int equal = 0;
  CHECK(qmat_rank_table_equal(t, back, &equal) == QMAT_OK);
  CHECK(equal == 1);

  qmat_rank_table* dual = nullptr;
  REQUIRE(qmat_dualize(t, &dual) == QMAT_OK);
  CHECK(qmat_rank_table_equal(t, dual, &equal) == QMAT_OK);
  CHECK(equal == 1);  // U_{2,4} is self-dual

  char* pattern = nullptr;
  CHECK(qmat_pattern_of(t, &pattern) == QMAT_OK);
  CHECK(Take(pattern) == std::string(35, '*'));

  qmat_rank_table_free(dual);
  qmat_rank_table_free(back);
  qmat_rank_table_free(t);
}

TEST_CASE("errors carry a status and a message") {
  qmat_rank_table* t = nullptr;
  CHECK(qmat_uniform(4, 3, 1, &t) == QMAT_OK);  // F_4 is a valid ground field
  qmat_rank_table_free(t);
  t = nullptr;
  CHECK(qmat_uniform(6, 3, 1, &t) == QMAT_ERR_INVALID_CHARACTERISTIC);
  CHECK(t == nullptr);
  CHECK(std::strlen(qmat_last_error()) > 0);
  CHECK(qmat_rank_table_from_json("{", &t) == QMAT_ERR_PARSE);
  CHECK(qmat_rank_table_from_json(nullptr, &t) == QMAT_ERR_INVALID_ARGUMENT);
  CHECK(qmat_uniform(2, 3, 1, nullptr) == QMAT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(qmat_status_name(QMAT_ERR_CEILING)) == "ceiling");
  char* s = nullptr;
  CHECK(qmat_qbinom(4, 2, 2, &s) == QMAT_OK);
  CHECK(Take(s) == "35");
  CHECK(std::strlen(qmat_last_error()) == 0);
  CHECK(qmat_enumerate_qmatroids_json(2, 7, 1, &s) == QMAT_ERR_CEILING);
  qmat_string_free(nullptr);
  qmat_rank_table_free(nullptr);
}

TEST_CASE("paving, generator and search through the C interface") {
  const char* collection =
      R"({"format":"qml-v1","q":2,"n":4,"subspaces":[)"
      R"([["1","0","0","0"],["0","1","0","0"]],)"
      R"([["0","0","1","0"],["0","0","0","1"]]]})";
  const char* generator =
      R"({"format":"qml-v1","field":{"p":2,"e":4,"modulus":[1,1,0,0,1]},)"
      R"("k":2,"n":4,"rows":[["1000","0100","0000","0000"],)"
      R"(["0000","0000","1000","0010"]]})";
  qmat_rank_table* paving = nullptr;
  REQUIRE(qmat_paving(collection, -1, &paving) == QMAT_OK);
  qmat_generator* g = nullptr;
  REQUIRE(qmat_generator_from_json(generator, &g) == QMAT_OK);
  qmat_rank_table* from_g = nullptr;
  REQUIRE(qmat_from_generator(g, &from_g) == QMAT_OK);
  int equal = 0;
  CHECK(qmat_rank_table_equal(paving, from_g, &equal) == QMAT_OK);
  CHECK(equal == 1);

  int found = 0;
  qmat_generator* witness = nullptr;
  CHECK(qmat_search_representation(paving, 4, 1, &found, &witness) == QMAT_OK);
  CHECK(found == 1);
  REQUIRE(witness != nullptr);
  qmat_rank_table* check = nullptr;
  REQUIRE(qmat_from_generator(witness, &check) == QMAT_OK);
  CHECK(qmat_rank_table_equal(paving, check, &equal) == QMAT_OK);
  CHECK(equal == 1);

  char* structure = nullptr;
  CHECK(qmat_structure_json(paving, &structure) == QMAT_OK);
  CHECK(Take(structure).find("\"bases\":33") != std::string::npos);

  qmat_rank_table_free(check);
  qmat_generator_free(witness);
  qmat_rank_table_free(from_g);
  qmat_generator_free(g);
  qmat_rank_table_free(paving);
}

TEST_CASE("seeded random generators are reproducible") {
  qmat_generator* a = nullptr;
  qmat_generator* b = nullptr;
  REQUIRE(qmat_generator_random(2, 3, 4, 2, 99, &a) == QMAT_OK);
  REQUIRE(qmat_generator_random(2, 3, 4, 2, 99, &b) == QMAT_OK);
  char* ja = nullptr;
  char* jb = nullptr;
  qmat_generator_to_json(a, &ja);
  qmat_generator_to_json(b, &jb);
  CHECK(Take(ja) == Take(jb));
  qmat_generator_free(a);
  qmat_generator_free(b);
}

TEST_CASE("subspace codes through the C interface") {
  qmat_cdc* c = nullptr;
  REQUIRE(qmat_lifted_mrd(2, 6, 3, 4, &c) == QMAT_OK);
  int size = 0, d = 0;
  CHECK(qmat_cdc_size(c, &size) == QMAT_OK);
  CHECK(size == 64);
  CHECK(qmat_cdc_min_distance(c, &d) == QMAT_OK);
  CHECK(d >= 4);
  qmat_rank_table* t = nullptr;
  CHECK(qmat_cdc_to_paving(c, &t) == QMAT_OK);
  int pass = 0;
  CHECK(qmat_check_axioms(t, &pass, nullptr) == QMAT_OK);
  CHECK(pass == 1);
  char* json = nullptr;
  REQUIRE(qmat_cdc_to_json(c, &json) == QMAT_OK);
  qmat_cdc* back = nullptr;
  const std::string text = Take(json);
  CHECK(qmat_cdc_from_json(text.c_str(), &back) == QMAT_OK);
  char* again = nullptr;
  qmat_cdc_to_json(back, &again);
  CHECK(Take(again) == text);
  CHECK(qmat_lifted_mrd(2, 4, 2, 6, &back) == QMAT_ERR_INVALID_ARGUMENT);
  qmat_cdc_free(back);
  qmat_rank_table_free(t);
  qmat_cdc_free(c);
}

TEST_CASE("reports through the C interface") {
  char* s = nullptr;
  REQUIRE(qmat_bounds_table(2, 4, 5, 1, 0, 0, &s) == QMAT_OK);
  CHECK(Take(s).rfind("n,log2_lower_N,log2_upper_R,gap\n4,4,", 0) == 0);
  REQUIRE(qmat_zero_sweep_json(2, 2, 1, 1, 1, 0, &s) == QMAT_OK);
  CHECK(Take(s).find("\"count\":4") != std::string::npos);
  REQUIRE(qmat_rank1_census_json(2, 3, 3, 1, &s) == QMAT_OK);
  const std::string census = Take(s);
  CHECK(census.find("\"count\":15") != std::string::npos);
  CHECK(census.find("\"representable\":15") != std::string::npos);
  REQUIRE(qmat_enumerate_subspaces_json(2, 4, 2, &s) == QMAT_OK);
  CHECK(Take(s).find("\"count\":35") != std::string::npos);
}

}  // namespace
