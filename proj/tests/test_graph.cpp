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
#include "indcomplex/error.hpp"
#include "indcomplex/graph.hpp"
#include "support.hpp"

using namespace indcomplex;

TEST_CASE("graph construction rejects bad edges") {
  const Edge loop[] = {{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), Error);
  const Edge out_of_range[] = {{0, 3}};
  try {
    Graph g(3, out_of_range);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidVertex);
  }
  const Edge twice[] = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(2, twice), Error);
}

TEST_CASE("adjacency is symmetric") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto g = oracle::random_graph(rng, 12, 0.3);
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
      for (int v : g.neighbors(static_cast<int>(u)).members()) {
        CHECK(g.has_edge(v, static_cast<int>(u)));
        CHECK(v != static_cast<int>(u));
      }
  }
}

TEST_CASE("induced subgraph") {
  const auto c6 = oracle::cycle(6);
  // {2,3,5,6} in 1-based labels
  const auto sub = induced_subgraph(c6, oracle::set_of(6, {1, 2, 4, 5}));
  CHECK(sub.graph.vertex_count() == 4);
  CHECK(sub.graph.edge_count() == 2);
  CHECK(sub.parent_ids == std::vector<int>{1, 2, 4, 5});
  CHECK(sub.graph.has_edge(0, 1));
  CHECK(sub.graph.has_edge(2, 3));

  CHECK(induced_subgraph(c6, VertexSet(6)).graph.vertex_count() == 0);
  CHECK(induced_subgraph(c6, c6.all_vertices()).graph == c6);

  VertexSet wrong(7);
  wrong.insert(6);
  CHECK_THROWS_AS(induced_subgraph(c6, wrong), Error);
}

TEST_CASE("closed neighborhood") {
  const auto c6 = oracle::cycle(6);
  CHECK(closed_neighborhood(c6, oracle::set_of(6, {0})) == oracle::set_of(6, {5, 0, 1}));
  CHECK(closed_neighborhood(c6, VertexSet(6)).empty());
  CHECK(closed_neighborhood(c6, c6.all_vertices()) == c6.all_vertices());

  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    const auto g = oracle::random_graph(rng, 10, 0.25);
    const auto w = oracle::random_subset(rng, 10, 0.3);
    CHECK(w.is_subset_of(closed_neighborhood(g, w)));
  }
}

TEST_CASE("forests") {
  CHECK(is_forest(oracle::path(4)));
  CHECK_FALSE(is_forest(oracle::cycle(6)));
  CHECK(is_forest(disjoint_union(oracle::path(3), oracle::path(5))));
  CHECK(is_forest(Graph(0)));
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    const auto f = oracle::random_forest(rng, 15);
    CHECK(is_forest(f));
    // a forest has v - c edges
    CHECK(f.edge_count() + connected_components(f).size() == f.vertex_count());
  }
}

TEST_CASE("independent set enumeration matches brute force") {
  const Edge e[] = {{0, 1}};
  const Graph edge(2, e);
  CHECK(enumerate_independent_sets(edge).size() == 3);
  CHECK(count_independent_sets(oracle::cycle(6)) == 18);
  CHECK(oracle::independent_sets(oracle::cycle(6)).size() == 18);
  const auto empty = enumerate_independent_sets(Graph(0));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());

  std::mt19937_64 rng(14);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + rng() % 16;
    const auto g = oracle::random_graph(rng, n, 0.3);
    const auto sets = enumerate_independent_sets(g);
    std::set<std::uint32_t> got;
    for (const auto& s : sets) got.insert(static_cast<std::uint32_t>(s.low_word()));
    const auto want = oracle::independent_sets(g);
    CHECK(got == std::set<std::uint32_t>(want.begin(), want.end()));
    CHECK(got.size() == sets.size());
    CHECK(count_independent_sets(g) == sets.size());
    // sorted member lists, lexicographic
    for (std::size_t k = 1; k < sets.size(); ++k) CHECK(sets[k - 1].lex_less(sets[k]));
    // downward closed
    for (auto s : got)
      for (int v = 0; v < 16; ++v)
        if ((s >> v) & 1) CHECK(got.count(s & ~(1u << v)));
  }
}

TEST_CASE("enumeration cap") {
  try {
    (void)enumerate_independent_sets(Graph(12), 100);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEnumerationOverflow);
    CHECK(std::string(e.what()).find("100") != std::string::npos);
  }
}

TEST_CASE("canonical code is an isomorphism invariant") {
  const auto c6 = oracle::cycle(6);
  std::mt19937_64 rng(15);
  CHECK(canonical_code(relabel(c6, oracle::random_permutation(rng, 6))) ==
        canonical_code(relabel(c6, oracle::random_permutation(rng, 6))));
  CHECK(canonical_code(c6) != canonical_code(oracle::path(6)));

  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 14;
    const auto g = oracle::random_graph(rng, n, 0.1 + 0.5 * (rng() % 100) / 100.0);
    const auto code = canonical_code(g);
    for (int k = 0; k < 10; ++k)
      CHECK(canonical_code(relabel(g, oracle::random_permutation(rng, n))) == code);
  }
}

TEST_CASE("canonical codes separate graphs with different degree sequences") {
  std::mt19937_64 rng(16);
  auto degrees = [](const Graph& g) {
    std::vector<std::size_t> d;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(static_cast<int>(v)));
    std::sort(d.begin(), d.end());
    return d;
  };
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_graph(rng, 9, 0.35);
    const auto b = oracle::random_graph(rng, 9, 0.35);
    if (degrees(a) == degrees(b)) continue;
    ++compared;
    CHECK(canonical_code(a) != canonical_code(b));
  }
  CHECK(compared > 100);
}

TEST_CASE("canonical codes agree with brute-force isomorphism on small graphs") {
  std::mt19937_64 rng(17);
  auto isomorphic = [](const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> p(a.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    do {
      if (relabel(a, p) == b) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  };
  for (int i = 0; i < 150; ++i) {
    const auto a = oracle::random_graph(rng, 6, 0.4);
    const auto b = oracle::random_graph(rng, 6, 0.4);
    CHECK((canonical_code(a) == canonical_code(b)) == isomorphic(a, b));
  }
}

TEST_CASE("domination") {
  const auto c6 = oracle::cycle(6);
  CHECK(is_dominating(c6, oracle::set_of(6, {0, 3})));
  CHECK_FALSE(is_dominating(c6, oracle::set_of(6, {0})));
  CHECK(is_dominating(c6, c6.all_vertices()));

  std::mt19937_64 rng(18);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 1 + rng() % 12;
    const auto g = oracle::random_graph(rng, n, 0.3);
    for (auto s : oracle::independent_sets(g)) {
      VertexSet vs(n);
      for (std::size_t v = 0; v < n; ++v)
        if ((s >> v) & 1) vs.insert(static_cast<int>(v));
      CHECK(is_dominating(g, vs) == oracle::is_maximal_independent(g, s));
    }
  }
}
