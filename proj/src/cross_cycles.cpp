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

#include "indcomplex/cross_cycles.hpp"

#include <algorithm>
#include <functional>

#include "indcomplex/error.hpp"

namespace indcomplex {
namespace {

// Sorts seq in place and returns the sign of the sorting permutation.
int sort_with_sign(std::vector<int>& seq) {
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i)
    for (std::size_t j = i; j > 0 && seq[j - 1] > seq[j]; --j) {
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  return sign;
}

void add_term(RationalChain& c, std::vector<int> simplex, const BigRational& coeff) {
  auto it = c.terms.find(simplex);
  if (it == c.terms.end()) {
    if (sgn(coeff) != 0) c.terms.emplace(std::move(simplex), coeff);
    return;
  }
  it->second += coeff;
  if (sgn(it->second) == 0) c.terms.erase(it);
}

VertexSet simplex_set(const Graph& g, const std::vector<int>& s) {
  VertexSet out(g.vertex_count());
  for (int v : s) out.insert(v);
  return out;
}

}  // namespace

bool is_induced_matching(const Graph& g, const std::vector<Edge>& edges) {
  VertexSet used(g.vertex_count());
  for (auto [v, w] : edges) {
    if (!g.has_edge(v, w))
      throw Error(ErrorCode::kInvalidInput,
                  "pair (" + std::to_string(v) + "," + std::to_string(w) +
                      ") is not an edge");
  }
  for (auto [v, w] : edges) {
    if (used.contains(v) || used.contains(w)) return false;
    used.insert(v);
    used.insert(w);
  }
  // Each matched vertex must see exactly its partner among matched vertices.
  for (auto [v, w] : edges) {
    if ((g.neighbors(v) & used).count() != 1) return false;
    if ((g.neighbors(w) & used).count() != 1) return false;
  }
  return true;
}

PairValidation validate_pair(const Graph& g, const MatchingWithTransversal& m) {
  PairValidation r;
  r.edges_exist = std::all_of(m.edges.begin(), m.edges.end(), [&](const Edge& e) {
    return e.first >= 0 && e.second >= 0 &&
           static_cast<std::size_t>(e.first) < g.vertex_count() &&
           static_cast<std::size_t>(e.second) < g.vertex_count() &&
           g.has_edge(e.first, e.second);
  });
  if (m.transversal.universe() != g.vertex_count()) return r;
  r.induced = r.edges_exist && is_induced_matching(g, m.edges);
  r.hits_each_edge = m.transversal.count() == m.edges.size();
  for (auto [v, w] : m.edges)
    if (m.transversal.contains(v) == m.transversal.contains(w)) r.hits_each_edge = false;
  r.dominating = is_dominating(g, m.transversal);
  return r;
}

std::vector<MatchingWithTransversal> find_matching_pairs(const Graph& g, std::size_t limit,
                                                         std::uint64_t cap,
                                                         std::size_t per_transversal) {
  std::vector<MatchingWithTransversal> out;
  if (limit == 0) return out;
  std::uint64_t visited = 0;
  for_each_independent_set(g, [&](const VertexSet& sigma) {
    if (++visited > cap) throw Error(ErrorCode::kEnumerationOverflow, "pair search exceeded face cap");
    if (!is_dominating(g, sigma)) return true;
    const auto members = sigma.members();
    std::vector<int> partner(members.size(), -1);
    const std::size_t stop = out.size() + std::min(per_transversal, limit - out.size());
    // Partner of members[i] must touch no other transversal vertex and no other partner.
    std::function<void(std::size_t)> dfs = [&](std::size_t i) {
      if (out.size() >= stop) return;
      if (i == members.size()) {
        MatchingWithTransversal m{{}, sigma};
        for (std::size_t j = 0; j < members.size(); ++j) m.edges.emplace_back(members[j], partner[j]);
        out.push_back(std::move(m));
        return;
      }
      for (int w : g.neighbors(members[i]).members()) {
        bool ok = true;
        for (std::size_t j = 0; j < members.size() && ok; ++j)
          if (j != i && g.has_edge(w, members[j])) ok = false;
        for (std::size_t j = 0; j < i && ok; ++j)
          if (partner[j] == w || g.has_edge(w, partner[j])) ok = false;
        if (!ok) continue;
        partner[i] = w;
        dfs(i + 1);
        if (out.size() >= stop) return;
      }
    };
    if (!members.empty()) dfs(0);
    return out.size() < limit;
  });
  return out;
}

RationalChain cross_cycle_chain(const Graph& g, const std::vector<Edge>& edges) {
  if (!is_induced_matching(g, edges))
    throw Error(ErrorCode::kInvalidInput, "edges do not form an induced matching");
  const std::size_t k = edges.size();
  if (k > 30) throw Error(ErrorCode::kResource, "matching too large to expand");
  RationalChain c;
  c.degree = static_cast<int>(k) - 1;
  std::vector<int> seq(k);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if ((pick >> i) & 1) {
        seq[i] = edges[i].second;
        sign = -sign;
      } else {
        seq[i] = edges[i].first;
      }
    }
    auto sorted = seq;
    sign *= sort_with_sign(sorted);
    add_term(c, std::move(sorted), BigRational(sign));
  }
  return c;
}

RationalCochain transversal_cocycle(const Graph& g, const VertexSet& sigma) {
  if (!is_independent(g, sigma))
    throw Error(ErrorCode::kInvalidInput, "transversal is not independent");
  RationalCochain f;
  f.degree = static_cast<int>(sigma.count()) - 1;
  f.terms.emplace(sigma.members(), BigRational(1));
  return f;
}

RationalChain chain_boundary(const RationalChain& c) {
  RationalChain out;
  out.degree = c.degree - 1;
  for (const auto& [simplex, coeff] : c.terms) {
    for (std::size_t j = 0; j < simplex.size(); ++j) {
      std::vector<int> face;
      face.reserve(simplex.size() - 1);
      for (std::size_t i = 0; i < simplex.size(); ++i)
        if (i != j) face.push_back(simplex[i]);
      add_term(out, std::move(face), j % 2 == 0 ? coeff : BigRational(-coeff));
    }
  }
  return out;
}

RationalCochain coboundary(const Graph& g, const RationalCochain& c) {
  RationalCochain out;
  out.degree = c.degree + 1;
  for (const auto& [simplex, coeff] : c.terms) {
    const VertexSet s = simplex_set(g, simplex);
    // Cofaces s + u inside I(g).
    const VertexSet blocked = closed_neighborhood(g, s);
    for (int u = 0; u < static_cast<int>(g.vertex_count()); ++u) {
      if (blocked.contains(u)) continue;
      auto coface = simplex;
      auto pos = std::lower_bound(coface.begin(), coface.end(), u);
      const auto j = pos - coface.begin();
      coface.insert(pos, u);
      add_term(out, std::move(coface), j % 2 == 0 ? coeff : BigRational(-coeff));
    }
  }
  return out;
}

BigRational evaluate(const RationalCochain& f, const RationalChain& c) {
  BigRational total(0);
  if (f.degree != c.degree) return total;
  for (const auto& [simplex, coeff] : f.terms) {
    auto it = c.terms.find(simplex);
    if (it != c.terms.end()) total += coeff * it->second;
  }
  return total;
}

PairingValue pairing_value(const VertexSet& sigma, const std::vector<Edge>& edges) {
  PairingValue r;
  if (sigma.count() != edges.size()) {
    r.degree_mismatch = true;
    return r;
  }
  std::vector<int> seq;
  seq.reserve(edges.size());
  int sign = 1;
  for (auto [v, w] : edges) {
    const bool hv = sigma.contains(v);
    const bool hw = sigma.contains(w);
    if (hv == hw) return r;
    if (hv) {
      seq.push_back(v);
    } else {
      seq.push_back(w);
      sign = -sign;
    }
  }
  r.value = sign * sort_with_sign(seq);
  return r;
}

PairingMatrix pairing_matrix(const std::vector<MatchingWithTransversal>& family) {
  PairingMatrix p;
  p.rows = p.cols = family.size();
  p.entries.resize(p.rows * p.cols);
  for (std::size_t r = 0; r < p.rows; ++r)
    for (std::size_t c = 0; c < p.cols; ++c) {
      auto v = pairing_value(family[c].transversal, family[r].edges);
      p.entries[r * p.cols + c] = v.value;
      p.any_degree_mismatch |= v.degree_mismatch;
    }
  return p;
}

std::size_t rank_lower_bound(const PairingMatrix& p) {
  SparseIntMatrix m;
  m.rows = p.rows;
  m.columns.resize(p.cols);
  for (std::size_t c = 0; c < p.cols; ++c)
    for (std::size_t r = 0; r < p.rows; ++r)
      if (p.at(r, c) != 0)
        m.columns[c].emplace_back(static_cast<std::uint32_t>(r), p.at(r, c));
  return exact_rank(m).rank;
}

std::vector<BigRational> express_in_basis(
    const MatchingWithTransversal& target,
    const std::vector<MatchingWithTransversal>& basis) {
  const std::size_t n = basis.size();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n));
  std::vector<BigRational> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = pairing_value(basis[i].transversal, basis[j].edges).value;
    b[i] = pairing_value(basis[i].transversal, target.edges).value;
  }
  std::vector<BigRational> x;
  if (!solve_rational(a, b, x))
    throw Error(ErrorCode::kNoUniqueSolution, "basis pairing matrix is singular");
  return x;
}

}  // namespace indcomplex
