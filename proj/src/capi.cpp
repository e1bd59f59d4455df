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

#include "indcomplex/indcomplex.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "indcomplex/bounds.hpp"
#include "indcomplex/complex.hpp"
#include "indcomplex/error.hpp"
#include "indcomplex/io.hpp"
#include "indcomplex/lattice.hpp"
#include "indcomplex/reproduce.hpp"
#include "indcomplex/splitting.hpp"

struct ic_graph {
  indcomplex::Graph g;
};

namespace {

using namespace indcomplex;

thread_local std::string last_error;

ic_status fail(ic_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class Fn>
ic_status guard(Fn fn) {
  try {
    last_error.clear();
    fn();
    return IC_OK;
  } catch (const Error& e) {
    return fail(static_cast<ic_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(IC_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(IC_ERR_UNKNOWN, e.what());
  } catch (...) {
    return fail(IC_ERR_UNKNOWN, "unknown failure");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

ic_options resolve(const ic_options* opts) {
  ic_options o;
  if (opts) {
    o = *opts;
  } else {
    ic_options_init(&o);
  }
  return o;
}

BoundOptions bound_options(const ic_options* opts) {
  const auto o = resolve(opts);
  BoundOptions b;
  b.cap_faces = o.cap_faces;
  b.max_columns = o.max_columns;
  b.workers = o.workers ? o.workers : 1;
  if (o.progress) {
    auto fn = o.progress;
    auto user = o.progress_user;
    b.progress = [fn, user](std::uint64_t done, std::uint64_t total) { fn(done, total, user); };
  }
  return b;
}

HomologyOptions homology_options(const ic_options* opts) {
  HomologyOptions h;
  h.max_columns = resolve(opts).max_columns;
  return h;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::kInvalidInput, std::string("null argument: ") + what);
}

VertexSet vertex_set(const Graph& g, const int32_t* u, size_t u_len) {
  VertexSet s(g.vertex_count());
  if (u_len) require(u, "u");
  for (size_t i = 0; i < u_len; ++i) {
    if (u[i] < 0 || static_cast<size_t>(u[i]) >= g.vertex_count())
      throw Error(ErrorCode::kInvalidVertex, "separator vertex " + std::to_string(u[i]) + " out of range");
    s.insert(u[i]);
  }
  return s;
}

BoundMode parse_mode(const char* mode) {
  const std::string m = mode ? mode : "both";
  if (m == "lower") return BoundMode::kLower;
  if (m == "upper") return BoundMode::kUpper;
  if (m == "both") return BoundMode::kBoth;
  throw Error(ErrorCode::kInvalidInput, "mode must be lower, upper or both");
}

LatticeSpec lattice_spec(const char* kind, int n, int m) {
  require(kind, "kind");
  return LatticeSpec{parse_lattice_kind(kind), n, m};
}

}  // namespace

extern "C" {

void ic_options_init(ic_options* opts) {
  if (!opts) return;
  opts->cap_faces = kDefaultFaceCap;
  opts->max_columns = 20'000'000;
  opts->workers = 1;
  opts->seed = kDefaultSeed;
  opts->progress = nullptr;
  opts->progress_user = nullptr;
  if (const char* env = std::getenv("INDCOMPLEX_CAP_FACES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) opts->cap_faces = v;
  }
}

const char* ic_version(void) { return "0.1.0"; }

const char* ic_status_name(ic_status status) {
  switch (status) {
    case IC_OK: return "ok";
    case IC_ERR_NULL_ARGUMENT: return "null-argument";
    case IC_ERR_UNKNOWN: return "unknown";
    default:
      if (status >= IC_ERR_INVALID_VERTEX && status <= IC_ERR_INTERNAL)
        return error_code_name(static_cast<ErrorCode>(status));
      return "unknown";
  }
}

const char* ic_last_error(void) { return last_error.c_str(); }

void ic_string_free(char* s) { std::free(s); }

ic_status ic_graph_create(size_t n, const int32_t* edges, size_t m, ic_graph** out) {
  if (!out || (m && !edges)) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] {
    std::vector<Edge> e;
    e.reserve(m);
    for (size_t i = 0; i < m; ++i) e.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new ic_graph{Graph(n, e)};
  });
}

ic_status ic_graph_parse(const char* text, ic_graph** out) {
  if (!text || !out) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = new ic_graph{parse_edge_list(text)}; });
}

ic_status ic_graph_read(const char* path, ic_graph** out) {
  if (!path || !out) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = new ic_graph{read_edge_list_file(path)}; });
}

ic_status ic_graph_write(const ic_graph* g, const char* path) {
  if (!g || !path) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] { write_edge_list_file(path, g->g); });
}

ic_status ic_graph_to_text(const ic_graph* g, char** out) {
  if (!g || !out) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = dup(format_edge_list(g->g)); });
}

void ic_graph_free(ic_graph* g) { delete g; }

size_t ic_graph_vertex_count(const ic_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t ic_graph_edge_count(const ic_graph* g) { return g ? g->g.edge_count() : 0; }

ic_status ic_gen(const char* kind, int n, int m, int tiled, ic_graph** out) {
  if (!kind || !out) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto spec = lattice_spec(kind, n, m);
    if (spec.kind == LatticeKind::kCycle) {
      if (tiled) throw Error(ErrorCode::kNotTileable, "cycles have no tile decomposition");
      *out = new ic_graph{gen_cycle(n)};
      return;
    }
    auto lat = generate(spec);
    if (tiled) (void)tile(lat);
    *out = new ic_graph{std::move(lat.graph)};
  });
}

ic_status ic_smallest_tileable(const char* kind, int* n, int* m) {
  if (!kind || !n || !m) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto spec = smallest_tileable(parse_lattice_kind(kind));
    *n = spec.n;
    *m = spec.m;
  });
}

ic_status ic_betti_json(const ic_graph* g, const ic_options* opts, char** out) {
  if (!g || !out) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] {
    *out = dup(betti_report_json(g->g, resolve(opts).cap_faces, homology_options(opts)));
  });
}

ic_status ic_total_betti(const ic_graph* g, const ic_options* opts, uint64_t* out) {
  if (!g || !out) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] {
    *out = betti_numbers(independence_complex(g->g, resolve(opts).cap_faces), homology_options(opts)).total();
  });
}

ic_status ic_graph_bounds_json(const ic_graph* g, const int32_t* u, size_t u_len, const char* mode,
                               const ic_options* opts, char** out) {
  if (!g || !out) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto reports = graph_bounds(g->g, vertex_set(g->g, u, u_len), parse_mode(mode), bound_options(opts));
    *out = dup(reports_json(reports));
  });
}

ic_status ic_upper_bound(const ic_graph* g, const int32_t* u, size_t u_len, const ic_options* opts,
                         char** bound_out, uint64_t* max_betti) {
  if (!g || !bound_out) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto r = upper_bound(g->g, vertex_set(g->g, u, u_len), bound_options(opts));
    *bound_out = dup(r.bound.get_str());
    if (max_betti) *max_betti = r.max_betti;
  });
}

ic_status ic_lattice_bounds_json(const char* kind, int n, int m, const char* mode, const ic_options* opts,
                                 char** out) {
  if (!kind || !out) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto lb = lattice_bounds(lattice_spec(kind, n, m), parse_mode(mode), bound_options(opts));
    std::vector<BoundReport> reports;
    if (lb.lower) reports.push_back(*lb.lower);
    if (lb.upper) reports.push_back(*lb.upper);
    *out = dup(reports_json(reports));
  });
}

ic_status ic_tiles_json(const char* kind, int n, int m, int with_templates, char** out) {
  if (!kind || !out) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto lat = generate(lattice_spec(kind, n, m));
    const auto t = tile(lat);
    if (with_templates) {
      const auto tp = search_tile_templates(t);
      *out = dup(tiling_json(lat, t, &tp));
    } else {
      *out = dup(tiling_json(lat, t));
    }
  });
}

ic_status ic_residual_csv(const char* kind, int n, int m, const ic_options* opts, char** out) {
  if (!kind || !out) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto lat = generate(lattice_spec(kind, n, m));
    *out = dup(residual_table_csv(residual_class_table(tile(lat), bound_options(opts))));
  });
}

ic_status ic_lattice_family(const char* kind, int n, int m, char** out) {
  if (!kind || !out) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto lat = generate(lattice_spec(kind, n, m));
    const auto t = tile(lat);
    const auto tp = search_tile_templates(t);
    std::vector<MatchingWithTransversal> family;
    for (const auto& w : assignment_words(t.tile_count())) family.push_back(family_from_assignment(t, tp, w));
    *out = dup(format_family(family));
  });
}

ic_status ic_splitting_json(const ic_graph* g, const char* family_text, size_t max_pairs, int try_reorder,
                            const ic_options* opts, char** out) {
  if (!g || !out) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto cap = resolve(opts).cap_faces;
    const auto family = family_text ? parse_family(family_text, g->g.vertex_count())
                                    : find_matching_pairs(g->g, max_pairs, cap, 1);
    if (family.empty()) throw Error(ErrorCode::kInvalidInput, "no matching with a dominating transversal");
    SplittingOptions so;
    so.cap_faces = cap;
    so.try_reorder = try_reorder != 0;
    *out = dup(trace_json(splitting_trace(g->g, family, so)));
  });
}

ic_status ic_reproduce(const char* target, const char* format, const ic_options* opts, char** out,
                       int* passed) {
  if (!target || !out) return fail(IC_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto o = resolve(opts);
    ReproduceOptions ro;
    ro.seed = o.seed;
    ro.workers = o.workers ? o.workers : 1;
    ro.cap_faces = o.cap_faces;
    const auto r = reproduce(target, ro);
    const std::string f = format ? format : "text";
    if (f != "text" && f != "json") throw Error(ErrorCode::kInvalidInput, "format must be text or json");
    *out = dup(f == "json" ? reproduce_json(r) : reproduce_text(r));
    if (passed) *passed = r.ok() ? 1 : 0;
  });
}

const char* ic_reproduce_targets(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& t : reproduce_targets()) s += (s.empty() ? "" : " ") + t;
    return s;
  }();
  return names.c_str();
}

}  // extern "C"
