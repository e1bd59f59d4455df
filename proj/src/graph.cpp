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

#include "indcomplex/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "indcomplex/error.hpp"

namespace indcomplex {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidVertex: return "invalid-vertex";
    case ErrorCode::kInvalidInput: return "invalid-input";
    case ErrorCode::kEnumerationOverflow: return "enumeration-overflow";
    case ErrorCode::kResource: return "resource";
    case ErrorCode::kDegenerateQuotient: return "degenerate-quotient";
    case ErrorCode::kIncompatibleDims: return "incompatible-dims";
    case ErrorCode::kNotTileable: return "not-tileable";
    case ErrorCode::kNoTemplateFound: return "no-template-found";
    case ErrorCode::kNoUniqueSolution: return "no-unique-solution";
    case ErrorCode::kNotAForest: return "not-a-forest";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe, std::span<const int> members)
    : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || static_cast<std::size_t>(v) >= universe_) {
    std::ostringstream msg;
    msg << "vertex " << v << " outside universe of size " << universe_;
    throw Error(ErrorCode::kInvalidVertex, msg.str());
  }
  words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || static_cast<std::size_t>(v) >= universe_) return;
  words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw Error(ErrorCode::kInvalidInput,
                "vertex sets over different universes");
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

bool VertexSet::lex_less(const VertexSet& other) const {
  int a = first();
  int b = other.first();
  while (a >= 0 && b >= 0) {
    if (a != b) return a < b;
    a = next(a);
    b = other.next(b);
  }
  return a < 0 && b >= 0;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(count());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

int VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
  return -1;
}

int VertexSet::next(int v) const noexcept {
  auto u = static_cast<std::size_t>(v + 1);
  if (u >= universe_) return -1;
  std::size_t i = u >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (u & 63));
  while (true) {
    if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
    if (++i >= words_.size()) return -1;
    w = words_[i];
  }
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  const auto n = static_cast<int>(vertex_count());
  if (u < 0 || v < 0 || u >= n || v >= n) {
    std::ostringstream msg;
    msg << "edge (" << u << "," << v << ") references a vertex outside 0.."
        << n - 1;
    throw Error(ErrorCode::kInvalidVertex, msg.str());
  }
  if (u == v) {
    throw Error(ErrorCode::kInvalidInput,
                "loop at vertex " + std::to_string(u));
  }
  if (adj_[u].contains(v)) {
    std::ostringstream msg;
    msg << "repeated edge (" << u << "," << v << ")";
    throw Error(ErrorCode::kInvalidInput, msg.str());
  }
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++edge_count_;
}

const VertexSet& Graph::neighbors(int v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= vertex_count())
    throw Error(ErrorCode::kInvalidVertex,
                "vertex " + std::to_string(v) + " out of range");
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const { return neighbors(u).contains(v); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < static_cast<int>(vertex_count()); ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
      out.emplace_back(u, v);
  return out;
}

void Graph::set_coords(std::vector<Coord> coords) {
  if (coords.size() != vertex_count())
    throw Error(ErrorCode::kInvalidInput,
                "coordinate count does not match vertex count");
  coords_ = std::move(coords);
}

bool Graph::operator==(const Graph& other) const {
  return adj_ == other.adj_;
}

// ---------------------------------------------------------------------------
// Subgraphs and neighborhoods

static void require_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) {
    // A shorter universe cannot name vertices outside the graph; a longer one
    // may.
    if (s.universe() > g.vertex_count()) {
      for (int v = s.first(); v >= 0; v = s.next(v))
        if (static_cast<std::size_t>(v) >= g.vertex_count())
          throw Error(ErrorCode::kInvalidVertex,
                      "vertex " + std::to_string(v) + " not in graph");
    }
    throw Error(ErrorCode::kInvalidInput,
                "vertex set universe does not match graph size");
  }
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  InducedSubgraph out;
  out.parent_ids = s.members();
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < out.parent_ids.size(); ++i)
    local[out.parent_ids[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.parent_ids.size(); ++i) {
    const auto& nb = g.neighbors(out.parent_ids[i]);
    for (int w = nb.first(); w >= 0; w = nb.next(w))
      if (local[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[w]);
  }
  out.graph = Graph(out.parent_ids.size(), edges);
  if (g.coords()) {
    std::vector<Coord> c;
    c.reserve(out.parent_ids.size());
    for (int v : out.parent_ids) c.push_back((*g.coords())[v]);
    out.graph.set_coords(std::move(c));
  }
  return out;
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  return induced_subgraph(g, s.complement());
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& w) {
  require_universe(g, w);
  VertexSet out = w;
  for (int v = w.first(); v >= 0; v = w.next(v)) out |= g.neighbors(v);
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  for (int v = s.first(); v >= 0; v = s.next(v))
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  return closed_neighborhood(g, s).count() == g.vertex_count();
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<VertexSet> out;
  VertexSet seen(n);
  for (int start = 0; start < static_cast<int>(n); ++start) {
    if (seen.contains(start)) continue;
    VertexSet comp(n);
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.insert(v);
      const auto& nb = g.neighbors(v);
      for (int w = nb.first(); w >= 0; w = nb.next(w)) {
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_forest(const Graph& g) {
  return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto na = static_cast<int>(a.vertex_count());
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (perm.size() != g.vertex_count())
    throw Error(ErrorCode::kInvalidInput, "permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.vertex_count(), edges);
}

// ---------------------------------------------------------------------------
// Independent sets

namespace {

struct IndependentWalker {
  const Graph& g;
  const std::function<bool(const VertexSet&)>& fn;
  bool stopped = false;

  void walk(VertexSet& current, const VertexSet& candidates) {
    if (stopped) return;
    if (!fn(current)) {
      stopped = true;
      return;
    }
    for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
      VertexSet rest = candidates;
      // Only vertices after v keep the lexicographic order.
      for (int w = rest.first(); w >= 0 && w <= v; w = rest.next(w)) rest.erase(w);
      rest -= g.neighbors(v);
      current.insert(v);
      walk(current, rest);
      current.erase(v);
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_independent_set(
    const Graph& g, const std::function<bool(const VertexSet&)>& fn) {
  VertexSet current(g.vertex_count());
  IndependentWalker walker{g, fn};
  walker.walk(current, g.all_vertices());
}

static Error overflow_error(std::uint64_t cap) {
  return Error(ErrorCode::kEnumerationOverflow,
               "independent-set enumeration exceeded cap of " +
                   std::to_string(cap) + " faces");
}

std::vector<VertexSet> enumerate_independent_sets(const Graph& g,
                                                  std::uint64_t cap) {
  std::vector<VertexSet> out;
  bool overflow = false;
  for_each_independent_set(g, [&](const VertexSet& s) {
    if (out.size() >= cap) {
      overflow = true;
      return false;
    }
    out.push_back(s);
    return true;
  });
  if (overflow) throw overflow_error(cap);
  return out;
}

std::uint64_t count_independent_sets(const Graph& g, std::uint64_t cap) {
  std::uint64_t count = 0;
  bool overflow = false;
  for_each_independent_set(g, [&](const VertexSet&) {
    if (count >= cap) {
      overflow = true;
      return false;
    }
    ++count;
    return true;
  });
  if (overflow) throw overflow_error(cap);
  return count;
}

// ---------------------------------------------------------------------------
// Canonical forms
//
// Individualization-refinement: colors are canonical ranks, refined to an
// equitable partition; leaves are compared by their upper-triangle adjacency
// bit strings and the minimum is kept. Automorphisms found as equal leaves
// prune sibling branches that lie in one orbit of the prefix stabilizer.

namespace {

using Coloring = std::vector<int>;

int color_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

void refine(const Graph& g, Coloring& colors) {
  const int n = static_cast<int>(g.vertex_count());
  int classes = -1;
  std::vector<std::vector<int>> sig(n);
  std::vector<int> order(n);
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(colors[v]);
      const auto& nb = g.neighbors(v);
      for (int w = nb.first(); w >= 0; w = nb.next(w)) s.push_back(colors[w]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a] < sig[b]; });
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      colors[order[i]] = rank;
    }
    const int now = n == 0 ? 0 : rank + 1;
    if (now == classes) return;
    classes = now;
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(static_cast<int>(g.vertex_count())) {}

  std::vector<int> run() {
    if (n_ == 0) return {};
    Coloring colors(n_, 0);
    refine(g_, colors);
    std::vector<int> prefix;
    search(colors, prefix);
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[best_position_[v]] = v;
    return order;
  }

 private:
  std::vector<std::uint64_t> leaf_string(const Coloring& pos) const {
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v) inv[pos[v]] = v;
    const std::size_t bits = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    std::vector<std::uint64_t> out((bits + 63) / 64, 0);
    std::size_t k = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j, ++k)
        if (g_.has_edge(inv[i], inv[j]))
          out[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
    return out;
  }

  void visit_leaf(const Coloring& pos) {
    auto str = leaf_string(pos);
    if (best_position_.empty() || str < best_string_) {
      best_string_ = std::move(str);
      best_position_ = pos;
    } else if (str == best_string_) {
      std::vector<int> best_inv(n_);
      for (int v = 0; v < n_; ++v) best_inv[best_position_[v]] = v;
      std::vector<int> aut(n_);
      for (int v = 0; v < n_; ++v) aut[v] = best_inv[pos[v]];
      if (automorphisms_.size() < kMaxStoredAutomorphisms)
        automorphisms_.push_back(std::move(aut));
    }
  }

  int find(std::vector<int>& parent, int v) const {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  void search(const Coloring& colors, std::vector<int>& prefix) {
    const int classes = color_count(colors);
    if (classes == n_) {
      visit_leaf(colors);
      return;
    }
    std::vector<int> size(classes, 0);
    for (int c : colors) ++size[c];
    int target = -1;
    for (int c = 0; c < classes; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;

    std::vector<int> cell;
    for (int v = 0; v < n_; ++v)
      if (colors[v] == target) cell.push_back(v);

    std::vector<int> explored;
    for (int v : cell) {
      if (!explored.empty() && same_orbit(prefix, explored, v)) continue;
      Coloring child = colors;
      for (int w = 0; w < n_; ++w)
        child[w] = 2 * colors[w] + ((w == v || colors[w] != target) ? 0 : 1);
      refine(g_, child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  bool same_orbit(const std::vector<int>& prefix,
                  const std::vector<int>& explored, int v) {
    if (automorphisms_.empty()) return false;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& aut : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](int p) { return aut[p] == p; });
      if (!fixes) continue;
      for (int w = 0; w < n_; ++w) {
        int a = find(parent, w);
        int b = find(parent, aut[w]);
        if (a != b) parent[a] = b;
      }
    }
    const int root = find(parent, v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](int u) { return find(parent, u) == root; });
  }

  static constexpr std::size_t kMaxStoredAutomorphisms = 256;

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> best_string_;
  Coloring best_position_;
  std::vector<std::vector<int>> automorphisms_;
};

void append_varint(std::string& out, std::uint64_t x) {
  while (x >= 0x80) {
    out.push_back(static_cast<char>((x & 0x7f) | 0x80));
    x >>= 7;
  }
  out.push_back(static_cast<char>(x));
}

std::string connected_code(const Graph& g) {
  const auto order = canonical_labeling(g);
  const int n = static_cast<int>(g.vertex_count());
  std::string out;
  append_varint(out, static_cast<std::uint64_t>(n));
  unsigned char byte = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      byte = static_cast<unsigned char>((byte << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0));
      if (++filled == 8) {
        out.push_back(static_cast<char>(byte));
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(byte << (8 - filled)));
  return out;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  return Canonizer(g).run();
}

CanonicalCode canonical_code(const Graph& g) {
  std::vector<std::string> parts;
  for (const auto& comp : connected_components(g))
    parts.push_back(connected_code(induced_subgraph(g, comp).graph));
  std::sort(parts.begin(), parts.end());
  std::string out;
  append_varint(out, g.vertex_count());
  append_varint(out, parts.size());
  for (const auto& p : parts) {
    append_varint(out, p.size());
    out += p;
  }
  return out;
}

std::string to_hex(const CanonicalCode& code) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (unsigned char c : code) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

std::uint64_t digest64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace indcomplex
