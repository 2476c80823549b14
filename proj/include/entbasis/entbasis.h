// Copyright 2026 The entbasis Authors
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

#ifndef ENTBASIS_ENTBASIS_H
#define ENTBASIS_ENTBASIS_H

/*
 * C interface to the entbasis library.
 *
 * Bases are passed around as opaque entb_basis handles. Every fallible call
 * returns an entb_status; on failure entb_last_error() describes the problem
 * (the message is thread-local and valid until the next call on the same
 * thread). Strings returned through char** out-parameters are owned by the
 * caller and must be released with entb_string_free().
 *
 * Analysis calls return a JSON report with the shared envelope
 * {"command", "inputs", "verdict", "evidence", "timings"}.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(ENTBASIS_BUILDING_LIBRARY)
#define ENTB_API __attribute__((visibility("default")))
#else
#define ENTB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct entb_basis entb_basis;

typedef enum entb_status {
  ENTB_OK = 0,
  ENTB_ERR_INVALID_ARGUMENT = 1,
  ENTB_ERR_DIMENSION_MISMATCH = 2,
  ENTB_ERR_NOT_ORTHONORMAL = 3,
  ENTB_ERR_RANK_DEFICIENT = 4,
  ENTB_ERR_INCOMPLETE_BASIS = 5,
  ENTB_ERR_PRECONDITION = 6,
  ENTB_ERR_PARSE = 7,
  ENTB_ERR_IO = 8,
  ENTB_ERR_NUMERIC = 9,
  ENTB_ERR_INTERNAL = 99
} entb_status;

typedef struct entb_search_options {
  int restarts;     /* seesaw restarts per search (default 200) */
  int max_iter;     /* sweeps per restart (default 500) */
  double tol;       /* product-state tolerance on Schmidt coefficients (1e-8) */
  double margin;    /* overlap >= 1 - margin counts as a product state (1e-6) */
  uint64_t seed;    /* base seed for every randomized step */
  int threads;      /* restart parallelism, 0 = all cores */
} entb_search_options;

ENTB_API void entb_search_options_init(entb_search_options* opts);

ENTB_API const char* entb_last_error(void);
ENTB_API const char* entb_status_name(entb_status status);
ENTB_API const char* entb_version(void);
ENTB_API void entb_string_free(char* s);

/* kind: "standard" (uses dims), "bell", "tiles", "shifts", "gentiles1" (uses n). */
ENTB_API entb_status entb_basis_generate(const char* kind, int n,
                                         const int* dims, size_t num_dims,
                                         entb_basis** out);

/* amplitudes: num_states * N interleaved (re, im) pairs, Kronecker order. */
ENTB_API entb_status entb_basis_from_amplitudes(const int* dims,
                                                size_t num_dims,
                                                const double* amplitudes,
                                                size_t num_states,
                                                entb_basis** out);

ENTB_API entb_status entb_basis_load(const char* path, entb_basis** out);
ENTB_API entb_status entb_basis_parse(const char* json_text, entb_basis** out);
ENTB_API entb_status entb_basis_save(const entb_basis* b, const char* path);
ENTB_API entb_status entb_basis_serialize(const entb_basis* b, char** out_text);
ENTB_API void entb_basis_free(entb_basis* b);

ENTB_API size_t entb_basis_size(const entb_basis* b);
ENTB_API size_t entb_basis_total_dim(const entb_basis* b);
ENTB_API size_t entb_basis_num_parties(const entb_basis* b);
ENTB_API int entb_basis_party_dim(const entb_basis* b, size_t party);
/* -1 when the file carries no partition index. */
ENTB_API int64_t entb_basis_partition_index(const entb_basis* b);
ENTB_API entb_status entb_basis_amplitude(const entb_basis* b, size_t state,
                                          size_t index, double* re, double* im);

/* States [begin, end) as a new handle without a partition index. */
ENTB_API entb_status entb_basis_select(const entb_basis* b, size_t begin,
                                       size_t end, entb_basis** out);

/* Completes an orthonormal partial basis; the result records the partition
 * index (the size of the input). */
ENTB_API entb_status entb_basis_complete(const entb_basis* b, entb_basis** out);

ENTB_API entb_status entb_verify_basis_json(const entb_basis* b, double tol,
                                            char** out_json);
ENTB_API entb_status entb_classify_json(const entb_basis* b,
                                        const entb_search_options* opts,
                                        char** out_json);
ENTB_API entb_status entb_verify_upb_json(const entb_basis* b,
                                          const entb_search_options* opts,
                                          char** out_json);
/* Bound-entanglement certificate for the uniform mixture of all states. */
ENTB_API entb_status entb_certify_json(const entb_basis* b,
                                       const entb_search_options* opts,
                                       char** out_json);
ENTB_API entb_status entb_lu_orbit_json(const entb_basis* b, int trials,
                                        const entb_search_options* opts,
                                        char** out_json);

#ifdef __cplusplus
}
#endif

#endif  // ENTBASIS_ENTBASIS_H
