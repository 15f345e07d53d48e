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

// C interface to the q-matroid library.
//
// Every function returns a qmat_status. On failure the message is available
// from qmat_last_error() until the next call on the same thread. Strings
// returned through char** are owned by the caller and released with
// qmat_string_free. Handles are released with their matching *_free.

#ifndef QMAT_QMAT_H_
#define QMAT_QMAT_H_

#include <stdint.h>

#if defined(QMAT_BUILDING_LIBRARY)
#define QMAT_API __attribute__((visibility("default")))
#else
#define QMAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qmat_status {
  QMAT_OK = 0,
  QMAT_ERR_INVALID_ARGUMENT = 1,
  QMAT_ERR_INVALID_CHARACTERISTIC = 2,
  QMAT_ERR_DIVISION_BY_ZERO = 3,
  QMAT_ERR_SHAPE = 4,
  QMAT_ERR_AMBIENT_MISMATCH = 5,
  QMAT_ERR_INVALID_COLLECTION = 6,
  QMAT_ERR_INVALID_TABLE = 7,
  QMAT_ERR_CEILING = 8,
  QMAT_ERR_PARSE = 9,
  QMAT_ERR_DEGENERATE = 10,
  QMAT_ERR_UNDEFINED_DISTANCE = 11,
  QMAT_ERR_HYPOTHESIS = 12,
  QMAT_ERR_INTERNAL = 99
} qmat_status;

typedef struct qmat_rank_table qmat_rank_table;
typedef struct qmat_generator qmat_generator;
typedef struct qmat_cdc qmat_cdc;

QMAT_API const char* qmat_last_error(void);
QMAT_API const char* qmat_status_name(qmat_status status);
QMAT_API void qmat_string_free(char* s);

// Rank tables.
QMAT_API qmat_status qmat_rank_table_from_json(const char* json,
                                               qmat_rank_table** out);
QMAT_API qmat_status qmat_rank_table_to_json(const qmat_rank_table* t,
                                             char** out);
QMAT_API void qmat_rank_table_free(qmat_rank_table* t);
QMAT_API qmat_status qmat_rank_table_info(const qmat_rank_table* t, int* q,
                                          int* n, int* size, int* rank);
QMAT_API qmat_status qmat_rank_table_get(const qmat_rank_table* t, int id,
                                         int* rank);
QMAT_API qmat_status qmat_rank_table_equal(const qmat_rank_table* a,
                                           const qmat_rank_table* b,
                                           int* equal);

QMAT_API qmat_status qmat_uniform(int q, int n, int k, qmat_rank_table** out);
// collection_json: {"format","q","n","subspaces":[basis rows, ...]}.
// Pass k < 0 to take k from the members.
QMAT_API qmat_status qmat_paving(const char* collection_json, int k,
                                 qmat_rank_table** out);
QMAT_API qmat_status qmat_dualize(const qmat_rank_table* t,
                                  qmat_rank_table** out);
// *pass is 1 or 0; report_json may be NULL.
QMAT_API qmat_status qmat_check_axioms(const qmat_rank_table* t, int* pass,
                                       char** report_json);
QMAT_API qmat_status qmat_structure_json(const qmat_rank_table* t,
                                         char** out);
// Writes the {0,*} pattern of the table.
QMAT_API qmat_status qmat_pattern_of(const qmat_rank_table* t, char** out);

// Generator matrices over F_{q^m}.
QMAT_API qmat_status qmat_generator_from_json(const char* json,
                                              qmat_generator** out);
QMAT_API qmat_status qmat_generator_to_json(const qmat_generator* g,
                                            char** out);
QMAT_API void qmat_generator_free(qmat_generator* g);
QMAT_API qmat_status qmat_generator_random(int q, int m, int n, int k,
                                           uint64_t seed,
                                           qmat_generator** out);
QMAT_API qmat_status qmat_from_generator(const qmat_generator* g,
                                         qmat_rank_table** out);
// witness may be NULL. *witness is left NULL when nothing is found.
QMAT_API qmat_status qmat_search_representation(const qmat_rank_table* t,
                                                int m_max, int threads,
                                                int* found,
                                                qmat_generator** witness);
QMAT_API qmat_status qmat_search_representation_json(const qmat_rank_table* t,
                                                     int m_max, int threads,
                                                     char** out);

// Constant dimension codes.
QMAT_API qmat_status qmat_cdc_from_json(const char* json, qmat_cdc** out);
QMAT_API qmat_status qmat_cdc_to_json(const qmat_cdc* c, char** out);
QMAT_API void qmat_cdc_free(qmat_cdc* c);
QMAT_API qmat_status qmat_cdc_size(const qmat_cdc* c, int* size);
QMAT_API qmat_status qmat_lifted_mrd(int q, int n, int k, int d,
                                     qmat_cdc** out);
QMAT_API qmat_status qmat_cdc_min_distance(const qmat_cdc* c, int* d);
QMAT_API qmat_status qmat_cdc_to_paving(const qmat_cdc* c,
                                        qmat_rank_table** out);

// Reports.
QMAT_API qmat_status qmat_qbinom(int n, int k, int q, char** decimal);
QMAT_API qmat_status qmat_enumerate_subspaces_json(int q, int n, int k,
                                                   char** out);
QMAT_API qmat_status qmat_zero_sweep_json(int q, int n, int k, int m,
                                          int threads, int list_patterns,
                                          char** out);
QMAT_API qmat_status qmat_bounds_table(int q, int n_from, int n_to, int csv,
                                       int corrected_uniform, int sum_over_k,
                                       char** out);
QMAT_API qmat_status qmat_rank1_census_json(int q, int n, int m_max,
                                            int threads, char** out);
QMAT_API qmat_status qmat_enumerate_qmatroids_json(int q, int n, int k_max,
                                                   char** out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // QMAT_QMAT_H_
