// Copyright 2026 The indcomplex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INDCOMPLEX_H
#define INDCOMPLEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IC_API __declspec(dllexport)
#else
#define IC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ic_status {
  IC_OK = 0,
  IC_ERR_INVALID_VERTEX = 1,
  IC_ERR_INVALID_INPUT = 2,
  IC_ERR_ENUMERATION_OVERFLOW = 3,
  IC_ERR_RESOURCE = 4,
  IC_ERR_DEGENERATE_QUOTIENT = 5,
  IC_ERR_INCOMPATIBLE_DIMS = 6,
  IC_ERR_NOT_TILEABLE = 7,
  IC_ERR_NO_TEMPLATE_FOUND = 8,
  IC_ERR_NO_UNIQUE_SOLUTION = 9,
  IC_ERR_NOT_A_FOREST = 10,
  IC_ERR_PARSE = 11,
  IC_ERR_IO = 12,
  IC_ERR_INTERNAL = 13,
  IC_ERR_NULL_ARGUMENT = 100,
  IC_ERR_UNKNOWN = 101
} ic_status;

typedef struct ic_graph ic_graph;

/* Progress callback: done out of total, user data passed through. */
typedef void (*ic_progress_fn)(uint64_t done, uint64_t total, void* user);

typedef struct ic_options {
  uint64_t cap_faces;   /* independent-set enumeration cap */
  uint64_t max_columns; /* largest boundary matrix, in columns */
  uint32_t workers;     /* threads for homology jobs */
  uint64_t seed;        /* randomized suites */
  ic_progress_fn progress;
  void* progress_user;
} ic_options;

/* Defaults; honors INDCOMPLEX_CAP_FACES when set to a positive integer. */
IC_API void ic_options_init(ic_options* opts);

IC_API const char* ic_version(void);
IC_API const char* ic_status_name(ic_status status);
/* Message of the last failure on this thread; never NULL. */
IC_API const char* ic_last_error(void);
/* Frees any string returned through a char** out parameter. */
IC_API void ic_string_free(char* s);

/* Graphs. edges holds 2*m vertex ids. */
IC_API ic_status ic_graph_create(size_t n, const int32_t* edges, size_t m, ic_graph** out);
IC_API ic_status ic_graph_parse(const char* text, ic_graph** out);
IC_API ic_status ic_graph_read(const char* path, ic_graph** out);
IC_API ic_status ic_graph_write(const ic_graph* g, const char* path);
IC_API ic_status ic_graph_to_text(const ic_graph* g, char** out);
IC_API void ic_graph_free(ic_graph* g);
IC_API size_t ic_graph_vertex_count(const ic_graph* g);
IC_API size_t ic_graph_edge_count(const ic_graph* g);

/* Generators: kind is kagome, triangular, delta3, delta4 or cycle (m ignored).
   With tiled != 0 the quotient must admit the tile decomposition. */
IC_API ic_status ic_gen(const char* kind, int n, int m, int tiled, ic_graph** out);
/* Smallest tileable quotient of a kind. */
IC_API ic_status ic_smallest_tileable(const char* kind, int* n, int* m);

/* Homology. */
IC_API ic_status ic_betti_json(const ic_graph* g, const ic_options* opts, char** out);
IC_API ic_status ic_total_betti(const ic_graph* g, const ic_options* opts, uint64_t* out);

/* Bounds on a graph; u lists separator vertices (may be NULL when u_len is 0).
   mode is "lower", "upper" or "both". */
IC_API ic_status ic_graph_bounds_json(const ic_graph* g, const int32_t* u, size_t u_len,
                                      const char* mode, const ic_options* opts, char** out);
/* Filtration bound B * |I(G[U])| as a decimal string. */
IC_API ic_status ic_upper_bound(const ic_graph* g, const int32_t* u, size_t u_len,
                                const ic_options* opts, char** bound_out, uint64_t* max_betti);

/* Tile-based bounds on a lattice quotient. */
IC_API ic_status ic_lattice_bounds_json(const char* kind, int n, int m, const char* mode,
                                        const ic_options* opts, char** out);
IC_API ic_status ic_tiles_json(const char* kind, int n, int m, int with_templates, char** out);
IC_API ic_status ic_residual_csv(const char* kind, int n, int m, const ic_options* opts, char** out);
/* The 2^k template family, one pair per line, transversal vertex first. */
IC_API ic_status ic_lattice_family(const char* kind, int n, int m, char** out);

/* Splitting trace; family_text uses the family format, NULL searches up to
   max_pairs validated pairs. */
IC_API ic_status ic_splitting_json(const ic_graph* g, const char* family_text, size_t max_pairs,
                                   int try_reorder, const ic_options* opts, char** out);

/* Reproduce suite. format is "text" or "json"; *passed is 1 iff all checks pass. */
IC_API ic_status ic_reproduce(const char* target, const char* format, const ic_options* opts,
                              char** out, int* passed);
/* Space-separated target names. */
IC_API const char* ic_reproduce_targets(void);

#ifdef __cplusplus
}
#endif

#endif /* INDCOMPLEX_H */
