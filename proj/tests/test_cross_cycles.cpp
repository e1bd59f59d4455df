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

#include "doctest.h"
#include "indcomplex/complex.hpp"
#include "indcomplex/cross_cycles.hpp"
#include "indcomplex/error.hpp"
#include "support.hpp"

using namespace indcomplex;

namespace {

// The hexagon example, vertices 1..6 shifted to 0..5.
const Graph c6 = oracle::cycle(6);
MatchingWithTransversal m1() { return {{{0, 1}, {3, 4}}, oracle::set_of(6, {0, 3})}; }
MatchingWithTransversal m2() { return {{{1, 2}, {4, 5}}, oracle::set_of(6, {1, 4})}; }
MatchingWithTransversal m3() { return {{{2, 3}, {5, 0}}, oracle::set_of(6, {2, 5})}; }

// All validated pairs by brute force: maximal independent sets and every
// choice of partners.
std::size_t brute_pair_count(const Graph& g) {
  std::size_t count = 0;
  const auto adj = oracle::adjacency_masks(g);
  for (auto s : oracle::independent_sets(g)) {
    if (s == 0 || !oracle::is_maximal_independent(g, s)) continue;
    std::vector<int> members;
    for (int v = 0; v < 32; ++v)
      if ((s >> v) & 1) members.push_back(v);
    std::vector<std::uint32_t> choice(members.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == members.size()) {
        std::uint32_t all = s;
        for (auto w : choice) all |= 1u << w;
        if (static_cast<std::size_t>(std::popcount(all)) != 2 * members.size()) return;
        // induced: each vertex of the union has exactly one neighbor inside
        for (int v = 0; v < 32; ++v)
          if (((all >> v) & 1) && std::popcount(adj[v] & all) != 1) return;
        ++count;
        return;
      }
      for (int w = 0; w < 32; ++w)
        if ((adj[members[i]] >> w) & 1) {
          choice[i] = w;
          rec(i + 1);
        }
    };
    rec(0);
  }
  return count;
}

}  // namespace

TEST_CASE("hexagon pairing values") {
  CHECK(validate_pair(c6, m1()).ok());
  CHECK(validate_pair(c6, m2()).ok());
  CHECK(validate_pair(c6, m3()).ok());
  CHECK(pairing_value(m1().transversal, m1().edges).value == 1);
  CHECK(pairing_value(m2().transversal, m2().edges).value == 1);
  CHECK(pairing_value(m1().transversal, m2().edges).value == 0);
  CHECK(pairing_value(m2().transversal, m1().edges).value == 1);
  CHECK(pairing_value(m1().transversal, m3().edges).value == -1);
  CHECK(pairing_value(m2().transversal, m3().edges).value == 0);
}

TEST_CASE("hexagon basis expansion") {
  const auto x = express_in_basis(m3(), {m1(), m2()});
  REQUIRE(x.size() == 2);
  CHECK(x[0] == -1);
  CHECK(x[1] == 1);
  // same pair twice gives a singular system
  CHECK_THROWS_AS(express_in_basis(m3(), {m1(), m1()}), Error);
}

TEST_CASE("cross-cycle chains are cycles and transversal cochains are cocycles") {
  const auto a = cross_cycle_chain(c6, m1().edges);
  CHECK(a.degree == 1);
  CHECK(a.terms.size() == 4);
  CHECK(chain_boundary(a).terms.empty());
  const auto s = transversal_cocycle(c6, m1().transversal);
  CHECK(coboundary(c6, s).terms.empty());
  CHECK(evaluate(s, a) == 1);
  // a non-maximal set is not a cocycle
  CHECK_FALSE(coboundary(c6, transversal_cocycle(c6, oracle::set_of(6, {0}))).terms.empty());
}

TEST_CASE("matching of k edges gives the cross-polytope boundary") {
  std::vector<Edge> e;
  for (int i = 0; i < 4; ++i) e.emplace_back(2 * i, 2 * i + 1);
  const Graph g(8, e);
  const auto a = cross_cycle_chain(g, e);
  CHECK(a.degree == 3);
  CHECK(a.terms.size() == 16);
  CHECK(chain_boundary(a).terms.empty());
}

TEST_CASE("pairing value equals cochain evaluation") {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const auto g = oracle::random_graph(rng, 4 + rng() % 8, 0.35);
    const auto pairs = find_matching_pairs(g, 6);
    for (const auto& p : pairs)
      for (const auto& q : pairs) {
        if (p.edges.size() != q.edges.size()) continue;
        const auto chain = cross_cycle_chain(g, q.edges);
        CHECK(chain_boundary(chain).terms.empty());
        const auto cocycle = transversal_cocycle(g, p.transversal);
        CHECK(coboundary(g, cocycle).terms.empty());
        CHECK(evaluate(cocycle, chain) == pairing_value(p.transversal, q.edges).value);
        ++checked;
      }
  }
  CHECK(checked > 50);
}

TEST_CASE("validation") {
  CHECK_FALSE(validate_pair(c6, {{{0, 2}, {3, 4}}, oracle::set_of(6, {0, 3})}).edges_exist);
  CHECK_FALSE(validate_pair(c6, {{{0, 1}, {2, 3}}, oracle::set_of(6, {0, 3})}).induced);
  CHECK_FALSE(validate_pair(c6, {{{0, 1}, {3, 4}}, oracle::set_of(6, {0, 1})}).hits_each_edge);
  const Edge p6e[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
  const Graph p6(6, p6e);
  // {0,3} misses vertex 5
  CHECK_FALSE(validate_pair(p6, {{{0, 1}, {3, 4}}, oracle::set_of(6, {0, 3})}).dominating);
  CHECK(is_induced_matching(c6, {{0, 1}, {3, 4}}));
  CHECK_FALSE(is_induced_matching(c6, {{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(is_induced_matching(c6, {{0, 2}}), Error);
  CHECK_THROWS_AS(cross_cycle_chain(c6, {{0, 1}, {2, 3}}), Error);
}

TEST_CASE("pair search finds every pair") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 10, 0.35);
    const auto pairs = find_matching_pairs(g, 100000);
    CHECK(pairs.size() == brute_pair_count(g));
    for (const auto& p : pairs) CHECK(validate_pair(g, p).ok());
  }
  CHECK(find_matching_pairs(c6, 100).size() == 6);
  CHECK(find_matching_pairs(c6, 100, kDefaultFaceCap, 1).size() == 3);
}

TEST_CASE("pairing rank never exceeds the Betti number") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    const auto g = oracle::random_graph(rng, 2 + rng() % 11, 0.35);
    const auto pairs = find_matching_pairs(g, 40);
    if (pairs.empty()) continue;
    const auto pm = pairing_matrix(pairs);
    CHECK(rank_lower_bound(pm) <= oracle::total(oracle::betti(g)));
    for (std::size_t r = 0; r < pm.rows; ++r) CHECK(std::abs(pm.at(r, r)) == 1);
  }
}
