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

#ifndef INDCOMPLEX_COMPLEX_HPP
#define INDCOMPLEX_COMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "indcomplex/graph.hpp"
#include "indcomplex/rank.hpp"

namespace indcomplex {

// Faces are bitmasks over at most 64 vertices.
using FaceMask = std::uint64_t;
inline constexpr std::size_t kMaxComplexVertices = 64;

class SimplicialComplex;
// Faces are the independent sets of g. Throws Error(kEnumerationOverflow) past
// `cap` faces and Error(kResource) above 64 vertices.
SimplicialComplex independence_complex(const Graph& g,
                                       std::uint64_t cap = kDefaultFaceCap);

/// Finite abstract simplicial complex, always augmented: the empty face is
/// present and sits in dimension -1. Faces of one dimension are stored in
/// lexicographic order of their sorted vertex lists, which also fixes the
/// orientation convention (a simplex is positively oriented in sorted order).
class SimplicialComplex {
 public:
  // The empty complex {∅} on `vertex_count` potential vertices.
  explicit SimplicialComplex(std::size_t vertex_count = 0);

  // Builds from an explicit face list. Throws Error(kInvalidInput) unless the
  // family contains ∅ and is closed under taking subsets.
  static SimplicialComplex from_faces(std::size_t vertex_count,
                                      std::vector<FaceMask> faces);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  // Top dimension; -1 for {∅}.
  int dimension() const noexcept {
    return static_cast<int>(by_dim_.size()) - 2;
  }
  std::span<const FaceMask> faces(int dim) const;
  std::size_t face_count(int dim) const { return faces(dim).size(); }
  std::size_t total_faces() const noexcept;
  // Position of `face` within faces(popcount-1), or -1 when absent.
  std::int64_t index_of(FaceMask face) const;
  bool contains(FaceMask face) const { return index_of(face) >= 0; }

  // Boundary map from dim-faces to (dim-1)-faces; dim 0 maps every vertex to
  // the empty face with coefficient +1.
  SparseIntMatrix boundary(int dim) const;

 private:
  friend SimplicialComplex independence_complex(const Graph& g,
                                                std::uint64_t cap);
  void index();

  std::size_t vertex_count_ = 0;
  // by_dim_[d + 1] holds the faces of dimension d.
  std::vector<std::vector<FaceMask>> by_dim_;
  std::vector<std::vector<std::pair<FaceMask, std::uint32_t>>> lookup_;
};

// Lexicographic comparison of the sorted vertex lists of two faces.
bool face_lex_less(FaceMask a, FaceMask b) noexcept;

/// Reduced Betti numbers by degree; zero entries are omitted.
class BettiVector {
 public:
  BettiVector() = default;
  explicit BettiVector(std::map<int, std::uint64_t> values);

  std::uint64_t operator[](int degree) const;
  void set(int degree, std::uint64_t value);
  std::uint64_t total() const;
  const std::map<int, std::uint64_t>& values() const noexcept { return values_; }
  // Betti vector of the empty complex, the unit for joins.
  static BettiVector empty_complex() { return BettiVector(std::map<int, std::uint64_t>{{-1, 1}}); }

  bool operator==(const BettiVector&) const = default;

 private:
  std::map<int, std::uint64_t> values_;
};

struct HomologyOptions {
  // Upper bound on the column count of any single boundary matrix.
  std::size_t max_columns = 20'000'000;
};

BettiVector betti_numbers(const SimplicialComplex& k,
                          const HomologyOptions& options = {});
// Same computation with ranks over Z/p; used to cross-check exact ranks.
BettiVector betti_numbers_mod_p(const SimplicialComplex& k, std::uint32_t p);

std::uint64_t total_betti(const SimplicialComplex& k,
                          const HomologyOptions& options = {});

// Coefficient of t^(i+1) is the number of i-faces.
std::vector<std::uint64_t> f_polynomial(const SimplicialComplex& k);

// -reduced Euler characteristic, from face counts.
std::int64_t witten_index(const SimplicialComplex& k);
std::int64_t witten_index(const Graph& g, std::uint64_t cap = kDefaultFaceCap);
// -reduced Euler characteristic, from Betti numbers.
std::int64_t witten_index(const BettiVector& b);

// Reduced Betti numbers of a join: degrees i, j combine into i + j + 1.
BettiVector join_betti(const BettiVector& a, const BettiVector& b);

// Shared cache of connected, fold-reduced graphs by canonical code.
class BettiMemo {
 public:
  bool lookup(const CanonicalCode& code, BettiVector& out) const;
  void store(const CanonicalCode& code, const BettiVector& b);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<CanonicalCode, BettiVector> map_;
};

// Repeatedly deletes w whenever N(u) is contained in N(w) for some u != w.
// The independence complex keeps its homotopy type.
Graph fold_reduce(const Graph& g);

// Reduced Betti numbers of I(g): components are joined, each component is
// fold-reduced and, if still connected, computed directly (memoized when a
// memo is given).
BettiVector graph_betti(const Graph& g, std::uint64_t cap = kDefaultFaceCap,
                        const HomologyOptions& options = {}, BettiMemo* memo = nullptr);

}  // namespace indcomplex

#endif  // INDCOMPLEX_COMPLEX_HPP
