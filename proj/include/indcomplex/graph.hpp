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

#ifndef INDCOMPLEX_GRAPH_HPP
#define INDCOMPLEX_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace indcomplex {

/// Bitset over the vertex ids 0..universe-1 of an ambient graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::span<const int> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(int v) const noexcept {
    auto u = static_cast<std::size_t>(v);
    return u < universe_ && ((words_[u >> 6] >> (u & 63)) & 1u);
  }
  // Throws Error(kInvalidVertex) when v is outside the universe.
  void insert(int v);
  void erase(int v);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  bool operator==(const VertexSet& other) const = default;
  // Lexicographic order of the sorted member lists.
  bool lex_less(const VertexSet& other) const;

  std::vector<int> members() const;
  // Index of the lowest member, or -1.
  int first() const noexcept;
  // Lowest member greater than v, or -1.
  int next(int v) const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  // Low 64 bits; only meaningful for universes of at most 64 vertices.
  std::uint64_t low_word() const noexcept {
    return words_.empty() ? 0 : words_[0];
  }

 private:
  void require_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Rational64 {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool operator==(const Rational64&) const = default;
};

struct Coord {
  Rational64 x;
  Rational64 y;
  bool operator==(const Coord&) const = default;
};

using Edge = std::pair<int, int>;

/// Undirected simple graph on dense ids 0..n-1; immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Rejects loops, out-of-range ids and repeated edges.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const VertexSet& neighbors(int v) const;
  bool has_edge(int u, int v) const;
  std::size_t degree(int v) const { return neighbors(v).count(); }
  // Sorted pairs (u, v) with u < v.
  std::vector<Edge> edges() const;

  const std::optional<std::vector<Coord>>& coords() const noexcept {
    return coords_;
  }
  void set_coords(std::vector<Coord> coords);

  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  VertexSet empty_set() const { return VertexSet(vertex_count()); }

  bool operator==(const Graph& other) const;

 private:
  void add_edge(int u, int v);

  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
  std::optional<std::vector<Coord>> coords_;
};

struct InducedSubgraph {
  Graph graph;
  // parent_ids[i] is the id in the ambient graph of local vertex i.
  std::vector<int> parent_ids;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
// G minus the vertices of s.
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s);

VertexSet closed_neighborhood(const Graph& g, const VertexSet& w);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);
bool is_forest(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph relabel(const Graph& g, std::span<const int> perm);

inline constexpr std::uint64_t kDefaultFaceCap = 50'000'000;

/// All independent sets including the empty one, ordered lexicographically
/// by their sorted member lists (the empty set first). Throws
/// Error(kEnumerationOverflow) once more than `cap` sets would be produced.
std::vector<VertexSet> enumerate_independent_sets(
    const Graph& g, std::uint64_t cap = kDefaultFaceCap);

// Counts without materializing; same cap semantics.
std::uint64_t count_independent_sets(const Graph& g,
                                     std::uint64_t cap = kDefaultFaceCap);

// Visits independent sets in the same order as enumerate_independent_sets.
// Returning false from the visitor stops the walk.
void for_each_independent_set(const Graph& g,
                              const std::function<bool(const VertexSet&)>& fn);

using CanonicalCode = std::string;

/// Isomorphism-invariant byte string: equal iff the graphs are isomorphic.
CanonicalCode canonical_code(const Graph& g);

// Canonical relabeling of a connected graph: result[i] is the vertex placed
// at position i.
std::vector<int> canonical_labeling(const Graph& g);

std::string to_hex(const CanonicalCode& code);
// 64-bit FNV-1a digest, used as a short display hash.
std::uint64_t digest64(std::string_view bytes);

}  // namespace indcomplex

#endif  // INDCOMPLEX_GRAPH_HPP
