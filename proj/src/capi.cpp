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

#include "qmat/qmat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <random>
#include <string>
#include <utility>

#include "bounds.hpp"
#include "cdc.hpp"
#include "error.hpp"
#include "qmatroid.hpp"
#include "repr_codes.hpp"
#include "serialize.hpp"
#include "zeropattern.hpp"

struct qmat_rank_table {
  qmat::RankTable value;
};
struct qmat_generator {
  qmat::GeneratorMatrix value;
};
struct qmat_cdc {
  qmat::ConstantDimensionCode value;
};

namespace {

using qmat::io::Json;

thread_local std::string g_last_error;

template <typename F>
qmat_status Guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return QMAT_OK;
  } catch (const qmat::Error& e) {
    g_last_error = e.what();
    return static_cast<qmat_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return QMAT_ERR_INTERNAL;
}

void NotNull(const void* p, const char* what) {
  qmat::Require(p != nullptr, qmat::ErrorCode::kInvalidArgument,
                std::string(what) + " must not be null");
}

char* Copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Emit(const std::string& s, char** out) {
  NotNull(out, "out");
  *out = Copy(s);
}

void EmitJson(const Json& j, char** out) { Emit(qmat::io::Dump(j), out); }

Json ParseArg(const char* json) {
  NotNull(json, "json");
  return qmat::io::Parse(json);
}

void Store(qmat::RankTable t, qmat_rank_table** out) {
  NotNull(out, "out");
  *out = new qmat_rank_table{std::move(t)};
}

}  // namespace

extern "C" {

const char* qmat_last_error(void) { return g_last_error.c_str(); }

const char* qmat_status_name(qmat_status status) {
  switch (status) {
    case QMAT_OK: return "ok";
    case QMAT_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case QMAT_ERR_INVALID_CHARACTERISTIC: return "invalid-characteristic";
    case QMAT_ERR_DIVISION_BY_ZERO: return "division-by-zero";
    case QMAT_ERR_SHAPE: return "shape";
    case QMAT_ERR_AMBIENT_MISMATCH: return "ambient-mismatch";
    case QMAT_ERR_INVALID_COLLECTION: return "invalid-collection";
    case QMAT_ERR_INVALID_TABLE: return "invalid-table";
    case QMAT_ERR_CEILING: return "ceiling";
    case QMAT_ERR_PARSE: return "parse";
    case QMAT_ERR_DEGENERATE: return "degenerate";
    case QMAT_ERR_UNDEFINED_DISTANCE: return "undefined-distance";
    case QMAT_ERR_HYPOTHESIS: return "hypothesis";
    case QMAT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void qmat_string_free(char* s) { std::free(s); }

qmat_status qmat_rank_table_from_json(const char* json, qmat_rank_table** out) {
  return Guard([&] { Store(qmat::io::RankTableFromJson(ParseArg(json)), out); });
}

qmat_status qmat_rank_table_to_json(const qmat_rank_table* t, char** out) {
  return Guard([&] {
    NotNull(t, "table");
    EmitJson(qmat::io::RankTableToJson(t->value), out);
  });
}

void qmat_rank_table_free(qmat_rank_table* t) { delete t; }

qmat_status qmat_rank_table_info(const qmat_rank_table* t, int* q, int* n,
                                 int* size, int* rank) {
  return Guard([&] {
    NotNull(t, "table");
    if (q) *q = t->value.q();
    if (n) *n = t->value.n();
    if (size) *size = t->value.size();
    if (rank) *rank = t->value.rank();
  });
}

qmat_status qmat_rank_table_get(const qmat_rank_table* t, int id, int* rank) {
  return Guard([&] {
    NotNull(t, "table");
    NotNull(rank, "rank");
    qmat::Require(id >= 0 && id < t->value.size(),
                  qmat::ErrorCode::kInvalidArgument, "subspace id out of range");
    *rank = t->value[id];
  });
}

qmat_status qmat_rank_table_equal(const qmat_rank_table* a,
                                  const qmat_rank_table* b, int* equal) {
  return Guard([&] {
    NotNull(a, "table");
    NotNull(b, "table");
    NotNull(equal, "equal");
    *equal = a->value == b->value ? 1 : 0;
  });
}

qmat_status qmat_uniform(int q, int n, int k, qmat_rank_table** out) {
  return Guard([&] { Store(qmat::Uniform(q, n, k), out); });
}

qmat_status qmat_paving(const char* collection_json, int k,
                        qmat_rank_table** out) {
  return Guard([&] {
    qmat::io::Collection c =
        qmat::io::CollectionFromJson(ParseArg(collection_json));
    if (k < 0) {
      qmat::Require(!c.subspaces.empty(), qmat::ErrorCode::kInvalidArgument,
                    "k is required for an empty collection");
      k = c.subspaces.front().dim();
    }
    Store(qmat::PavingFromCollection(c.q, c.n, k, c.subspaces), out);
  });
}

qmat_status qmat_dualize(const qmat_rank_table* t, qmat_rank_table** out) {
  return Guard([&] {
    NotNull(t, "table");
    Store(qmat::Dualize(t->value), out);
  });
}

qmat_status qmat_check_axioms(const qmat_rank_table* t, int* pass,
                              char** report_json) {
  return Guard([&] {
    NotNull(t, "table");
    const qmat::AxiomReport r = qmat::CheckAxioms(t->value);
    if (pass) *pass = r.pass ? 1 : 0;
    if (report_json) EmitJson(qmat::io::AxiomReportToJson(r), report_json);
  });
}

qmat_status qmat_structure_json(const qmat_rank_table* t, char** out) {
  return Guard([&] {
    NotNull(t, "table");
    EmitJson(qmat::io::StructureToJson(qmat::Derive(t->value)), out);
  });
}

qmat_status qmat_pattern_of(const qmat_rank_table* t, char** out) {
  return Guard([&] {
    NotNull(t, "table");
    Emit(qmat::PatternOfQMatroid(t->value).symbols(), out);
  });
}

qmat_status qmat_generator_from_json(const char* json, qmat_generator** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = new qmat_generator{qmat::io::GeneratorFromJson(ParseArg(json))};
  });
}

qmat_status qmat_generator_to_json(const qmat_generator* g, char** out) {
  return Guard([&] {
    NotNull(g, "generator");
    EmitJson(qmat::io::MatrixToJson(g->value.matrix()), out);
  });
}

void qmat_generator_free(qmat_generator* g) { delete g; }

qmat_status qmat_generator_random(int q, int m, int n, int k, uint64_t seed,
                                  qmat_generator** out) {
  return Guard([&] {
    NotNull(out, "out");
    std::mt19937_64 rng(seed);
    *out = new qmat_generator{qmat::RandomGenerator(q, m, n, k, rng)};
  });
}

qmat_status qmat_from_generator(const qmat_generator* g,
                                qmat_rank_table** out) {
  return Guard([&] {
    NotNull(g, "generator");
    Store(qmat::QMatroidFromGenerator(g->value), out);
  });
}

qmat_status qmat_search_representation(const qmat_rank_table* t, int m_max,
                                       int threads, int* found,
                                       qmat_generator** witness) {
  return Guard([&] {
    NotNull(t, "table");
    NotNull(found, "found");
    qmat::RepresentationSearch r =
        qmat::SearchRepresentation(t->value, m_max, threads);
    *found = r.found ? 1 : 0;
    if (witness) {
      *witness = nullptr;
      // A rank-0 witness has no rows, so it is not a GeneratorMatrix.
      if (r.found && r.generator->rows() > 0)
        *witness = new qmat_generator{qmat::GeneratorMatrix(*r.generator)};
    }
  });
}

qmat_status qmat_search_representation_json(const qmat_rank_table* t,
                                            int m_max, int threads,
                                            char** out) {
  return Guard([&] {
    NotNull(t, "table");
    EmitJson(qmat::io::SearchToJson(
                 qmat::SearchRepresentation(t->value, m_max, threads)),
             out);
  });
}

qmat_status qmat_cdc_from_json(const char* json, qmat_cdc** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = new qmat_cdc{qmat::io::CdcFromJson(ParseArg(json))};
  });
}

qmat_status qmat_cdc_to_json(const qmat_cdc* c, char** out) {
  return Guard([&] {
    NotNull(c, "code");
    EmitJson(qmat::io::CdcToJson(c->value), out);
  });
}

void qmat_cdc_free(qmat_cdc* c) { delete c; }

qmat_status qmat_cdc_size(const qmat_cdc* c, int* size) {
  return Guard([&] {
    NotNull(c, "code");
    NotNull(size, "size");
    *size = c->value.size();
  });
}

qmat_status qmat_lifted_mrd(int q, int n, int k, int d, qmat_cdc** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = new qmat_cdc{qmat::LiftedMrd(q, n, k, d)};
  });
}

qmat_status qmat_cdc_min_distance(const qmat_cdc* c, int* d) {
  return Guard([&] {
    NotNull(c, "code");
    NotNull(d, "d");
    *d = qmat::MinSubspaceDistance(c->value);
  });
}

qmat_status qmat_cdc_to_paving(const qmat_cdc* c, qmat_rank_table** out) {
  return Guard([&] {
    NotNull(c, "code");
    Store(qmat::CdcToPaving(c->value), out);
  });
}

qmat_status qmat_qbinom(int n, int k, int q, char** decimal) {
  return Guard([&] {
    qmat::Require(q >= 2, qmat::ErrorCode::kInvalidArgument, "q must be >= 2");
    qmat::Require(n >= 0, qmat::ErrorCode::kInvalidArgument, "n must be >= 0");
    Emit(qmat::GaussianBinomial(n, k, q).str(), decimal);
  });
}

qmat_status qmat_enumerate_subspaces_json(int q, int n, int k, char** out) {
  return Guard([&] {
    const auto list = qmat::EnumerateGrassmannian(q, n, k);
    Json j = qmat::io::CollectionToJson(q, n, list);
    j["k"] = k;
    j["count"] = list.size();
    EmitJson(j, out);
  });
}

qmat_status qmat_zero_sweep_json(int q, int n, int k, int m, int threads,
                                 int list_patterns, char** out) {
  return Guard([&] {
    const qmat::DetSystem sys(q, n, k);
    const qmat::SweepOutcome sweep = qmat::SweepPatterns(sys, m, threads);
    EmitJson(qmat::io::SweepToJson(sys, m, sweep, list_patterns != 0), out);
  });
}

qmat_status qmat_bounds_table(int q, int n_from, int n_to, int csv,
                              int corrected_uniform, int sum_over_k,
                              char** out) {
  return Guard([&] {
    qmat::BoundOptions opts;
    opts.corrected_uniform = corrected_uniform != 0;
    opts.sum_over_k = sum_over_k != 0;
    const auto rows = qmat::AsymptoticTable(q, n_from, n_to, opts);
    if (csv) Emit(qmat::io::BoundsCsv(rows), out);
    else EmitJson(qmat::io::BoundsJson(q, rows), out);
  });
}

qmat_status qmat_rank1_census_json(int q, int n, int m_max, int threads,
                                   char** out) {
  return Guard([&] {
    int count = 0, representable = 0, max_m = 0;
    for (const qmat::RankTable& t : qmat::EnumerateQMatroids(q, n, 1)) {
      if (t.rank() != 1) continue;
      ++count;
      const auto r = qmat::SearchRepresentation(t, m_max, threads);
      if (r.found) {
        ++representable;
        max_m = std::max(max_m, r.m);
      }
    }
    qmat::BigInt formula = 0;
    for (int i = 0; i < n; ++i) formula += qmat::GaussianBinomial(n, i, q);
    EmitJson(Json{{"q", q},
                  {"n", n},
                  {"m_max", m_max},
                  {"count", count},
                  {"formula", formula.str()},
                  {"representable", representable},
                  {"max_m", max_m}},
             out);
  });
}

qmat_status qmat_enumerate_qmatroids_json(int q, int n, int k_max,
                                          char** out) {
  return Guard([&] {
    Json tables = Json::array();
    for (const qmat::RankTable& t : qmat::EnumerateQMatroids(q, n, k_max))
      tables.push_back(t.ranks());
    EmitJson(Json{{"format", qmat::io::kFormatTag},
                  {"q", q},
                  {"n", n},
                  {"k_max", k_max},
                  {"ordering", qmat::io::kOrderingTag},
                  {"count", tables.size()},
                  {"tables", std::move(tables)}},
             out);
  });
}

}  // extern "C"
