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

#include "indcomplex/complex.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

#include "indcomplex/error.hpp"

namespace indcomplex {

bool face_lex_less(FaceMask a, FaceMask b) noexcept {
  const FaceMask diff = a ^ b;
  if (diff == 0) return false;
  const int d = std::countr_zero(diff);
  // Members below d are shared. Whichever face holds d continues with the
  // smaller element, unless the other face has run out.
  if ((a >> d) & 1u) {
    const FaceMask above = d == 63 ? 0 : (b >> (d + 1));
    return above != 0;
  }
  const FaceMask above = d == 63 ? 0 : (a >> (d + 1));
  return above == 0;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex(std::size_t vertex_count)
    : vertex_count_(vertex_count), by_dim_{{FaceMask{0}}} {
  if (vertex_count > kMaxComplexVertices)
    throw Error(ErrorCode::kResource,
                "complexes are limited to 64 vertices");
  index();
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t vertex_count,
                                                std::vector<FaceMask> faces) {
  SimplicialComplex k(vertex_count);
  const FaceMask allowed =
      vertex_count == 64 ? ~FaceMask{0} : (FaceMask{1} << vertex_count) - 1;
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::unordered_set<FaceMask> present(faces.begin(), faces.end());
  if (!present.count(0))
    throw Error(ErrorCode::kInvalidInput, "face list lacks the empty face");
  k.by_dim_.clear();
  for (FaceMask f : faces) {
    if (f & ~allowed)
      throw Error(ErrorCode::kInvalidVertex, "face uses a vertex out of range");
    for (FaceMask rest = f; rest; rest &= rest - 1) {
      const FaceMask sub = f & ~(rest & (~rest + 1));
      if (!present.count(sub))
        throw Error(ErrorCode::kInvalidInput, "face list is not downward closed");
    }
    const auto level = static_cast<std::size_t>(std::popcount(f));
    if (k.by_dim_.size() <= level) k.by_dim_.resize(level + 1);
    k.by_dim_[level].push_back(f);
  }
  for (auto& level : k.by_dim_) std::sort(level.begin(), level.end(), face_lex_less);
  k.index();
  return k;
}

void SimplicialComplex::index() {
  lookup_.assign(by_dim_.size(), {});
  for (std::size_t level = 0; level < by_dim_.size(); ++level) {
    auto& table = lookup_[level];
    table.reserve(by_dim_[level].size());
    for (std::size_t i = 0; i < by_dim_[level].size(); ++i)
      table.emplace_back(by_dim_[level][i], static_cast<std::uint32_t>(i));
    std::sort(table.begin(), table.end());
  }
}

std::span<const FaceMask> SimplicialComplex::faces(int dim) const {
  const auto level = static_cast<std::size_t>(dim + 1);
  if (dim < -1 || level >= by_dim_.size()) return {};
  return by_dim_[level];
}

std::size_t SimplicialComplex::total_faces() const noexcept {
  std::size_t total = 0;
  for (const auto& level : by_dim_) total += level.size();
  return total;
}

std::int64_t SimplicialComplex::index_of(FaceMask face) const {
  const auto level = static_cast<std::size_t>(std::popcount(face));
  if (level >= lookup_.size()) return -1;
  const auto& table = lookup_[level];
  auto it = std::lower_bound(
      table.begin(), table.end(), face,
      [](const std::pair<FaceMask, std::uint32_t>& e, FaceMask f) { return e.first < f; });
  if (it == table.end() || it->first != face) return -1;
  return it->second;
}

SparseIntMatrix SimplicialComplex::boundary(int dim) const {
  SparseIntMatrix m;
  m.rows = face_count(dim - 1);
  const auto cols = faces(dim);
  m.columns.resize(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& col = m.columns[j];
    FaceMask f = cols[j];
    std::int64_t sign = 1;
    for (FaceMask rest = f; rest; rest &= rest - 1, sign = -sign) {
      const FaceMask facet = f & ~(rest & (~rest + 1));
      const auto row = index_of(facet);
      col.emplace_back(static_cast<std::uint32_t>(row), sign);
    }
    std::sort(col.begin(), col.end());
  }
  return m;
}

SimplicialComplex independence_complex(const Graph& g, std::uint64_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxComplexVertices)
    throw Error(ErrorCode::kResource,
                "independence complex needs at most 64 vertices, graph has " +
                    std::to_string(n));
  std::vector<FaceMask> closed(n);
  for (std::size_t v = 0; v < n; ++v)
    closed[v] = g.neighbors(static_cast<int>(v)).low_word() | (FaceMask{1} << v);

  SimplicialComplex k(n);
  std::vector<std::vector<FaceMask>> levels{{FaceMask{0}}};
  std::vector<FaceMask> blocked{0};
  std::uint64_t total = 1;
  const FaceMask all = n == 64 ? ~FaceMask{0} : (FaceMask{1} << n) - 1;
  while (true) {
    std::vector<FaceMask> next;
    std::vector<FaceMask> next_blocked;
    const auto& cur = levels.back();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const FaceMask f = cur[i];
      const int top = f ? 63 - std::countl_zero(f) : -1;
      const FaceMask later = top >= 63 ? 0 : (all & (~FaceMask{0} << (top + 1)));
      FaceMask cand = later & ~blocked[i];
      while (cand) {
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (++total > cap)
          throw Error(ErrorCode::kEnumerationOverflow,
                      "independent-set enumeration exceeded cap of " +
                          std::to_string(cap) + " faces");
        next.push_back(f | (FaceMask{1} << v));
        next_blocked.push_back(blocked[i] | closed[v]);
      }
    }
    if (next.empty()) break;
    levels.push_back(std::move(next));
    blocked = std::move(next_blocked);
  }
  k.by_dim_ = std::move(levels);
  k.index();
  return k;
}

// ---------------------------------------------------------------------------
// BettiVector

BettiVector::BettiVector(std::map<int, std::uint64_t> values) {
  for (auto [d, v] : values) set(d, v);
}

std::uint64_t BettiVector::operator[](int degree) const {
  auto it = values_.find(degree);
  return it == values_.end() ? 0 : it->second;
}

void BettiVector::set(int degree, std::uint64_t value) {
  if (value == 0)
    values_.erase(degree);
  else
    values_[degree] = value;
}

std::uint64_t BettiVector::total() const {
  std::uint64_t t = 0;
  for (auto [d, v] : values_) {
    if (__builtin_add_overflow(t, v, &t))
      throw Error(ErrorCode::kResource, "total Betti number exceeds 64 bits");
  }
  return t;
}

// ---------------------------------------------------------------------------
// Homology

namespace {

template <class RankFn>
BettiVector betti_with(const SimplicialComplex& k, RankFn rank_of,
                       const HomologyOptions& options) {
  const int top = k.dimension();
  // rank[d] = rank of the boundary map out of dimension d, for d in 0..top+1.
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 3), 0);
  std::vector<std::uint32_t> cleared;
  for (int d = top; d >= 0; --d) {
    const auto m = k.boundary(d);
    if (m.cols() > options.max_columns)
      throw Error(ErrorCode::kResource,
                  "boundary matrix in dimension " + std::to_string(d) + " has " +
                      std::to_string(m.cols()) + " columns, limit is " +
                      std::to_string(options.max_columns));
    std::vector<bool> skip(m.cols(), false);
    for (auto row : cleared) skip[row] = true;
    auto result = rank_of(m, skip);
    rank[static_cast<std::size_t>(d)] = result.rank;
    cleared = std::move(result.pivot_rows);
  }
  BettiVector b;
  for (int d = -1; d <= top; ++d) {
    const auto faces = k.face_count(d);
    const auto out = d >= 0 ? rank[static_cast<std::size_t>(d)] : 0;
    const auto in = rank[static_cast<std::size_t>(d + 1)];
    b.set(d, faces - out - in);
  }
  return b;
}

}  // namespace

BettiVector betti_numbers(const SimplicialComplex& k,
                          const HomologyOptions& options) {
  return betti_with(
      k,
      [](const SparseIntMatrix& m, const std::vector<bool>& skip) {
        return exact_rank(m, skip);
      },
      options);
}

BettiVector betti_numbers_mod_p(const SimplicialComplex& k, std::uint32_t p) {
  return betti_with(
      k,
      [p](const SparseIntMatrix& m, const std::vector<bool>& skip) {
        return rank_mod_p(m, p, skip);
      },
      HomologyOptions{});
}

std::uint64_t total_betti(const SimplicialComplex& k,
                          const HomologyOptions& options) {
  return betti_numbers(k, options).total();
}

std::vector<std::uint64_t> f_polynomial(const SimplicialComplex& k) {
  std::vector<std::uint64_t> f;
  for (int d = -1; d <= k.dimension(); ++d) f.push_back(k.face_count(d));
  return f;
}

std::int64_t witten_index(const SimplicialComplex& k) {
  // chi~ = sum_{i >= -1} (-1)^i f_i
  std::int64_t chi = 0;
  for (int d = -1; d <= k.dimension(); ++d) {
    const auto f = static_cast<std::int64_t>(k.face_count(d));
    chi += (d % 2 == 0) ? f : -f;
  }
  return -chi;
}

std::int64_t witten_index(const Graph& g, std::uint64_t cap) {
  return witten_index(independence_complex(g, cap));
}

std::int64_t witten_index(const BettiVector& b) {
  std::int64_t chi = 0;
  for (auto [d, v] : b.values()) {
    const auto x = static_cast<std::int64_t>(v);
    chi += (d % 2 == 0) ? x : -x;
  }
  return -chi;
}

BettiVector join_betti(const BettiVector& a, const BettiVector& b) {
  std::map<int, std::uint64_t> out;
  for (auto [i, x] : a.values()) {
    for (auto [j, y] : b.values()) {
      std::uint64_t prod;
      if (__builtin_mul_overflow(x, y, &prod) ||
          __builtin_add_overflow(out[i + j + 1], prod, &out[i + j + 1]))
        throw Error(ErrorCode::kResource, "join Betti number exceeds 64 bits");
    }
  }
  return BettiVector(std::move(out));
}

bool BettiMemo::lookup(const CanonicalCode& code, BettiVector& out) const {
  std::lock_guard lock(mutex_);
  auto it = map_.find(code);
  if (it == map_.end()) return false;
  out = it->second;
  return true;
}

void BettiMemo::store(const CanonicalCode& code, const BettiVector& b) {
  std::lock_guard lock(mutex_);
  map_.emplace(code, b);
}

std::size_t BettiMemo::size() const {
  std::lock_guard lock(mutex_);
  return map_.size();
}

Graph fold_reduce(const Graph& g) {
  Graph cur = g;
  for (;;) {
    const int n = static_cast<int>(cur.vertex_count());
    int drop = -1;
    for (int w = 0; w < n && drop < 0; ++w)
      for (int u = 0; u < n; ++u)
        if (u != w && cur.neighbors(u).is_subset_of(cur.neighbors(w))) {
          drop = w;
          break;
        }
    if (drop < 0) return cur;
    VertexSet gone(cur.vertex_count());
    gone.insert(drop);
    cur = remove_vertices(cur, gone).graph;
  }
}

BettiVector graph_betti(const Graph& g, std::uint64_t cap, const HomologyOptions& options,
                        BettiMemo* memo) {
  BettiVector result = BettiVector::empty_complex();
  for (const auto& comp : connected_components(g)) {
    Graph sub = induced_subgraph(g, comp).graph;
    if (sub.vertex_count() == 1) return BettiVector();  // cone point
    Graph reduced = fold_reduce(sub);
    for (int v = 0; v < static_cast<int>(reduced.vertex_count()); ++v)
      if (reduced.degree(v) == 0) return BettiVector();
    BettiVector b;
    if (connected_components(reduced).size() > 1) {
      b = graph_betti(reduced, cap, options, memo);
    } else {
      CanonicalCode code;
      if (memo) code = canonical_code(reduced);
      if (!memo || !memo->lookup(code, b)) {
        b = betti_numbers(independence_complex(reduced, cap), options);
        if (memo) memo->store(code, b);
      }
    }
    if (b.values().empty()) return BettiVector();
    result = join_betti(result, b);
  }
  return result;
}

}  // namespace indcomplex
