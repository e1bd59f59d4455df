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

#ifndef INDCOMPLEX_LATTICE_HPP
#define INDCOMPLEX_LATTICE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "indcomplex/cross_cycles.hpp"
#include "indcomplex/graph.hpp"

namespace indcomplex {

enum class LatticeKind { kKagome, kTriangular, kDelta3, kDelta4, kCycle };

const char* lattice_kind_name(LatticeKind kind) noexcept;
// Throws Error(kInvalidInput) for unknown names.
LatticeKind parse_lattice_kind(const std::string& name);

struct LatticeSpec {
  LatticeKind kind = LatticeKind::kKagome;
  int n = 0;
  int m = 0;  // unused for cycles
};

// Point of the triangular lattice in the basis (1,0), (1/2, sqrt(3)/2).
struct LatticePoint {
  int a = 0;
  int b = 0;
  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint&) const = default;
};

// Two-dimensional integer lattice in Hermite normal form: generated by
// (p, 0) and (q, r) with p, r > 0 and 0 <= q < p.
struct Lattice2 {
  int p = 1;
  int q = 0;
  int r = 1;

  static Lattice2 from_generators(std::array<int, 2> u, std::array<int, 2> v);
  LatticePoint reduce(LatticePoint x) const;
  bool contains(LatticePoint x) const { return reduce(x) == LatticePoint{0, 0}; }
  bool contains(const Lattice2& sub) const;
  std::int64_t index() const { return std::int64_t{p} * r; }
};

/// Finite quotient of a triangular lattice with every d-th line erased in
/// each of the three directions. Lines b = s, a = s and a + b = 2s (mod d)
/// are erased, where s is the removal offset; the points where all three
/// erased lines meet disappear. d = 0 keeps the full triangular lattice.
struct PeriodicLattice {
  LatticeSpec spec;
  int d = 0;
  int offset = 0;
  Lattice2 periods;
  Graph graph;
  std::vector<LatticePoint> points;  // canonical representative per vertex

  bool has_point(LatticePoint x) const;
  // Vertex id of the class of x. Throws Error(kInvalidVertex) for erased points.
  int vertex_of(LatticePoint x) const;

 private:
  friend PeriodicLattice build_periodic(LatticeSpec, int, int, Lattice2);
  std::vector<int> index_;  // indexed by reduced (a, b)
};

// Neighbors of x in the plane lattice (before taking the quotient).
std::vector<LatticePoint> plane_neighbors(int d, int offset, LatticePoint x);

PeriodicLattice gen_kagome(int n, int m);
PeriodicLattice gen_triangular(int n, int m);
PeriodicLattice gen_delta(int d, int n, int m);
Graph gen_cycle(int n);
PeriodicLattice generate(const LatticeSpec& spec);

/// Tiles are translates of one plane region, U is everything outside them.
/// Each tile has the same ordered list of boundary slots: a slot is a plane
/// neighbor of the tile region and maps to a U vertex; on small quotients two
/// slots of one tile can land on the same U vertex.
struct Tiling {
  std::vector<VertexSet> tiles;
  VertexSet separator;
  // tile_vertices[t][i] is the global id of tile-local vertex i of tile t.
  std::vector<std::vector<int>> tile_vertices;
  // boundary[t][j] is the U vertex behind slot j of tile t.
  std::vector<std::vector<int>> boundary;

  // Shared tile-local data.
  Graph tile_graph;
  std::vector<LatticePoint> tile_points;    // plane points, center at the origin cell
  std::vector<LatticePoint> slot_points;    // plane points of the slots
  std::vector<VertexSet> slot_neighbors;    // tile-local neighbors of each slot
  std::vector<int> slot_orbit;              // U vertex class under tile translations
  int orbit_count = 0;

  std::size_t tile_count() const { return tiles.size(); }
  std::size_t slot_count() const { return slot_points.size(); }
  // Number of distinct U vertices adjacent to tile t.
  std::size_t distinct_boundary(std::size_t t) const;
};

// Plane geometry of a tiling family: tile centers at origin + L.
struct TilingGeometry {
  LatticeKind kind;
  LatticePoint origin;
  Lattice2 centers;
};

TilingGeometry tiling_geometry(LatticeKind kind);

// Tiling of a Kagome quotient by 30-vertex hexagons; requires 6 | n, 4 | m.
Tiling hexagon_tiling(const PeriodicLattice& lattice);
// Tiling of a Delta_3 / Delta_4 quotient.
Tiling delta_tiling(const PeriodicLattice& lattice);
// Dispatches on the lattice kind. Throws Error(kNotTileable).
Tiling tile(const PeriodicLattice& lattice);
bool is_tileable(const LatticeSpec& spec);
// Smallest (by vertex count, then n) tileable spec for a kind.
LatticeSpec smallest_tileable(LatticeKind kind, int max_period = 12);

// Digest of the tile region and slots; changes whenever the reconstructed
// geometry changes.
std::string geometry_digest(const Tiling& t);

struct TileTemplate {
  char label = 'A';
  std::vector<Edge> edges;         // tile-local (v, w), v in the transversal
  std::vector<int> transversal;    // tile-local, sorted
  std::vector<int> responsible;    // slots this template pair dominates
};

struct TemplateSearchStats {
  std::size_t matching_size = 0;
  std::size_t candidates = 0;
  std::size_t pairs_tested = 0;
  std::size_t failed_transversal = 0;  // sigma_B is a transversal of M_A
  std::size_t failed_domination = 0;   // some U class left undominated
};

struct TemplatePair {
  TileTemplate a;
  TileTemplate b;
  TemplateSearchStats stats;
};

/// Searches the largest matching size first and returns the lexicographically
/// least valid pair. Throws Error(kNoTemplateFound) with the dominant failure.
TemplatePair search_tile_templates(const Tiling& t);

// word[i] in {'A','B'} picks the template for tile i.
MatchingWithTransversal family_from_assignment(const Tiling& t,
                                               const TemplatePair& templates,
                                               const std::string& word);
// All 2^k words in lexicographic order, A < B.
std::vector<std::string> assignment_words(std::size_t k);

}  // namespace indcomplex

#endif  // INDCOMPLEX_LATTICE_HPP
