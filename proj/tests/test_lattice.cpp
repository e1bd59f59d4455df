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

#include <set>

#include "doctest.h"
#include "indcomplex/cross_cycles.hpp"
#include "indcomplex/error.hpp"
#include "indcomplex/lattice.hpp"
#include "support.hpp"

using namespace indcomplex;

namespace {

int pmod(int x, int d) { return ((x % d) + d) % d; }

// Quotient of the triangular lattice by periods (p, 0), (q, r), built
// independently: points in a fundamental domain, edges along the three
// directions unless the edge's line is erased.
Graph plane_quotient(int d, int s, int p, int q, int r) {
  auto reduce = [&](int a, int b) {
    const int k = (b >= 0 ? b / r : -((-b + r - 1) / r));
    a -= k * q;
    b -= k * r;
    return std::pair<int, int>{pmod(a, p), b};
  };
  auto removed = [&](int a, int b) { return d >= 2 && pmod(a - s, d) == 0 && pmod(b - s, d) == 0; };
  std::map<std::pair<int, int>, int> id;
  for (int b = 0; b < r; ++b)
    for (int a = 0; a < p; ++a)
      if (!removed(a, b)) id[{a, b}] = static_cast<int>(id.size());
  std::set<std::pair<int, int>> edges;
  for (const auto& [pt, v] : id) {
    const auto [a, b] = pt;
    const std::pair<int, int> dirs[3] = {{1, 0}, {0, 1}, {1, -1}};
    for (int k = 0; k < 3; ++k) {
      // line through the edge: b const, a const, a + b const
      const bool erased = d >= 2 && (k == 0   ? pmod(b - s, d) == 0
                                     : k == 1 ? pmod(a - s, d) == 0
                                              : pmod(a + b - 2 * s, d) == 0);
      if (erased) continue;
      const auto other = reduce(a + dirs[k].first, b + dirs[k].second);
      auto it = id.find(other);
      if (it == id.end()) continue;
      edges.insert({std::min(v, it->second), std::max(v, it->second)});
    }
  }
  std::vector<Edge> e(edges.begin(), edges.end());
  return Graph(id.size(), e);
}

bool regular(const Graph& g, std::size_t k) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<int>(v)) != k) return false;
  return true;
}

}  // namespace

TEST_CASE("Kagome quotients") {
  for (auto [n, m] : {std::pair{6, 4}, {2, 2}, {3, 2}, {4, 4}, {5, 6}}) {
    const auto lat = gen_kagome(n, m);
    CHECK(lat.graph.vertex_count() == static_cast<std::size_t>(3 * n * m));
    CHECK(regular(lat.graph, 4));
    CHECK(lat.points.size() == lat.graph.vertex_count());
    REQUIRE(lat.graph.coords().has_value());
    // periods (2n, 0), (-m, 2m)
    const auto oracle_graph = plane_quotient(2, 1, 2 * n, -m, 2 * m);
    CHECK(canonical_code(lat.graph) == canonical_code(oracle_graph));
  }
}

TEST_CASE("Kagome dimension errors") {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  CHECK(code_of([] { gen_kagome(6, 3); }) == ErrorCode::kIncompatibleDims);
  CHECK(code_of([] { gen_kagome(1, 4); }) == ErrorCode::kDegenerateQuotient);
  CHECK(code_of([] { gen_triangular(2, 3); }) == ErrorCode::kDegenerateQuotient);
  CHECK(code_of([] { gen_cycle(2); }) == ErrorCode::kInvalidInput);
  CHECK(code_of([] { parse_lattice_kind("hexagonal"); }) == ErrorCode::kInvalidInput);
}

TEST_CASE("triangular and diluted quotients against the plane construction") {
  for (auto [n, m] : {std::pair{3, 3}, {4, 5}, {6, 3}}) {
    const auto t = gen_triangular(n, m);
    CHECK(regular(t.graph, 6));
    CHECK(canonical_code(t.graph) == canonical_code(plane_quotient(0, 0, n, 0, m)));
  }
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    const auto d3 = gen_delta(3, n, m);
    CHECK(d3.graph.vertex_count() == static_cast<std::size_t>(8 * n * m));
    CHECK(canonical_code(d3.graph) == canonical_code(plane_quotient(3, d3.offset, 3 * n, 0, 3 * m)));
  }
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {3, 3}}) {
    const auto d4 = gen_delta(4, n, m);
    CHECK(d4.graph.vertex_count() == static_cast<std::size_t>(15 * n * m));
    CHECK(canonical_code(d4.graph) == canonical_code(plane_quotient(4, d4.offset, 4 * n, 0, 4 * m)));
  }
  const auto c = gen_cycle(7);
  CHECK(c.vertex_count() == 7);
  CHECK(regular(c, 2));
}

TEST_CASE("period lattices") {
  const auto l = Lattice2::from_generators({12, 0}, {-4, 8});
  CHECK(l.index() == 96);
  CHECK(l.contains(LatticePoint{12, 0}));
  CHECK(l.contains(LatticePoint{-4, 8}));
  CHECK(l.contains(LatticePoint{8, 8}));
  CHECK_FALSE(l.contains(LatticePoint{4, 0}));
  CHECK(Lattice2::from_generators({4, 0}, {0, 4}).contains(Lattice2::from_generators({8, 0}, {0, 4})));
  const auto x = l.reduce(LatticePoint{-7, 19});
  CHECK(l.contains(LatticePoint{-7 - x.a, 19 - x.b}));
}

TEST_CASE("hexagon tiling of the smallest Kagome quotient") {
  const auto spec = smallest_tileable(LatticeKind::kKagome);
  CHECK(spec.n == 6);
  CHECK(spec.m == 4);
  const auto lat = gen_kagome(6, 4);
  const auto t = tile(lat);
  CHECK(t.tile_count() == 2);
  CHECK(t.tile_graph.vertex_count() == 30);
  CHECK(t.separator.count() == 12);
  CHECK(t.slot_count() == 12);
  // tiles and separator partition the vertices, tiles are far apart
  VertexSet all = t.separator;
  for (std::size_t i = 0; i < t.tile_count(); ++i) {
    CHECK_FALSE(all.intersects(t.tiles[i]));
    all |= t.tiles[i];
    CHECK(induced_subgraph(lat.graph, t.tiles[i]).graph.edge_count() == t.tile_graph.edge_count());
    for (std::size_t j = i + 1; j < t.tile_count(); ++j)
      for (int v : t.tiles[i].members()) CHECK_FALSE(lat.graph.neighbors(v).intersects(t.tiles[j]));
  }
  CHECK(all == lat.graph.all_vertices());
  CHECK(t.separator.count() * 6 == lat.graph.vertex_count());
  CHECK(geometry_digest(t) == geometry_digest(tile(gen_kagome(6, 4))));

  CHECK_FALSE(is_tileable({LatticeKind::kKagome, 5, 4}));
  CHECK(is_tileable({LatticeKind::kKagome, 12, 4}));
  try {
    (void)tile(gen_kagome(5, 4));
    FAIL("expected not tileable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotTileable);
  }
}

TEST_CASE("diluted tilings") {
  const auto s3 = smallest_tileable(LatticeKind::kDelta3);
  const auto l3 = generate(s3);
  CHECK(l3.graph.vertex_count() == 8);
  const auto t3 = tile(l3);
  CHECK(t3.tile_count() == 1);
  CHECK(t3.tile_graph.vertex_count() == 6);
  CHECK(t3.separator.count() == 2);
  const auto s4 = smallest_tileable(LatticeKind::kDelta4);
  const auto l4 = generate(s4);
  CHECK(l4.graph.vertex_count() == 135);
  const auto t4 = tile(l4);
  CHECK(t4.separator.count() * 5 == l4.graph.vertex_count());
  CHECK(t4.tile_count() * 45 == l4.graph.vertex_count());
}

TEST_CASE("tile templates give a triangular certificate") {
  CHECK(assignment_words(2) == std::vector<std::string>{"AA", "AB", "BA", "BB"});
  const auto lat = gen_kagome(6, 4);
  const auto t = tile(lat);
  const auto tp = search_tile_templates(t);
  CHECK(tp.a.edges.size() == 8);
  CHECK(tp.b.edges.size() == 8);
  std::vector<MatchingWithTransversal> family;
  for (const auto& w : assignment_words(t.tile_count())) {
    family.push_back(family_from_assignment(t, tp, w));
    CHECK(validate_pair(lat.graph, family.back()).ok());
    CHECK(family.back().edges.size() == 8 * t.tile_count());
  }
  const auto pm = pairing_matrix(family);
  for (std::size_t r = 0; r < pm.rows; ++r) {
    CHECK(std::abs(pm.at(r, r)) == 1);
    for (std::size_t c = r + 1; c < pm.cols; ++c) CHECK(pm.at(r, c) == 0);
  }
  CHECK(rank_lower_bound(pm) == 4);
}
