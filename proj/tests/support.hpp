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

#ifndef INDCOMPLEX_TESTS_SUPPORT_HPP
#define INDCOMPLEX_TESTS_SUPPORT_HPP

// Brute-force oracles and random inputs shared by the test binaries. Nothing
// here calls the library's enumeration, rank or homology code.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "indcomplex/graph.hpp"

namespace oracle {

using indcomplex::Edge;
using indcomplex::Graph;
using indcomplex::VertexSet;

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  return adj;
}

// Every subset of at most 24 vertices, checked edge by edge.
inline std::vector<std::uint32_t> independent_sets(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v)
      if (((s >> v) & 1) && (adj[v] & s)) ok = false;
    if (ok) out.push_back(static_cast<std::uint32_t>(s));
  }
  return out;
}

inline bool is_maximal_independent(const Graph& g, std::uint32_t s) {
  const auto adj = adjacency_masks(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if ((s >> v) & 1) {
      if (adj[v] & s) return false;
    } else if (!(adj[v] & s)) {
      return false;  // v could be added
    }
  }
  return true;
}

// Rank of a dense integer matrix over Q, plain Gaussian elimination on mpq.
inline std::size_t rank_q(std::vector<std::vector<mpq_class>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Same over Z/p, p < 2^31.
inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t iv = inv(a[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::int64_t f = a[r][c] * iv % p;
      for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers of a complex given by all its faces (bitmasks, the
// empty face included), from dense boundary matrices. Exact over Q when every
// matrix is small, else modulo a large prime.
inline std::map<int, std::uint64_t> betti_of_faces(const std::vector<std::uint32_t>& faces) {
  std::map<int, std::vector<std::uint32_t>> by_dim;
  for (auto f : faces) by_dim[std::popcount(f) - 1].push_back(f);
  const int top = by_dim.rbegin()->first;
  // rank of boundary from dim d to d-1
  std::map<int, std::size_t> rk;
  for (int d = 0; d <= top; ++d) {
    const auto& hi = by_dim[d];
    const auto& lo = by_dim[d - 1];
    std::map<std::uint32_t, std::size_t> index;
    for (std::size_t i = 0; i < lo.size(); ++i) index[lo[i]] = i;
    std::vector<std::vector<std::int64_t>> m(lo.size(), std::vector<std::int64_t>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j) {
      int pos = 0;
      for (int v = 0; v < 32; ++v) {
        if (!((hi[j] >> v) & 1)) continue;
        m[index[hi[j] & ~(1u << v)]][j] = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    if (lo.size() * hi.size() <= 40000) {
      std::vector<std::vector<mpq_class>> q(lo.size(), std::vector<mpq_class>(hi.size()));
      for (std::size_t r = 0; r < lo.size(); ++r)
        for (std::size_t c = 0; c < hi.size(); ++c) q[r][c] = m[r][c];
      rk[d] = rank_q(std::move(q));
    } else {
      rk[d] = rank_mod(std::move(m), 2147483629);
    }
  }
  std::map<int, std::uint64_t> out;
  for (int d = -1; d <= top; ++d) {
    const std::size_t f = by_dim[d].size();
    const std::size_t b = f - (d >= 0 ? rk[d] : 0) - (rk.count(d + 1) ? rk[d + 1] : 0);
    if (b) out[d] = b;
  }
  return out;
}

inline std::map<int, std::uint64_t> betti(const Graph& g) { return betti_of_faces(independent_sets(g)); }

inline std::uint64_t total(const std::map<int, std::uint64_t>& b) {
  std::uint64_t t = 0;
  for (auto [d, v] : b) t += v;
  return t;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return Graph(n, edges);
}

inline Graph random_forest(std::mt19937_64& rng, std::size_t n) {
  std::vector<Edge> edges;
  std::bernoulli_distribution keep(0.8);
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    const int p = static_cast<int>(parent(rng));
    if (keep(rng)) edges.emplace_back(p, static_cast<int>(v));
  }
  return Graph(n, edges);
}

inline VertexSet random_subset(std::mt19937_64& rng, std::size_t n, double p) {
  VertexSet s(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t v = 0; v < n; ++v)
    if (coin(rng)) s.insert(static_cast<int>(v));
  return s;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(static_cast<std::size_t>(n), e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(static_cast<std::size_t>(n), e);
}

inline VertexSet set_of(std::size_t n, std::initializer_list<int> members) {
  VertexSet s(n);
  for (int v : members) s.insert(v);
  return s;
}

}  // namespace oracle

#endif  // INDCOMPLEX_TESTS_SUPPORT_HPP
