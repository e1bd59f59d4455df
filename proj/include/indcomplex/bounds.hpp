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

#ifndef INDCOMPLEX_BOUNDS_HPP
#define INDCOMPLEX_BOUNDS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "indcomplex/complex.hpp"
#include "indcomplex/cross_cycles.hpp"
#include "indcomplex/graph.hpp"
#include "indcomplex/lattice.hpp"
#include "indcomplex/rank.hpp"

namespace indcomplex {

struct Factor {
  BigInt base;
  std::uint64_t exponent = 0;
};

/// Exact bound kept as a product of powers, e.g. 14^2 * 2^12. Equal bases
/// are merged and factors are ordered by decreasing base.
class ProductForm {
 public:
  ProductForm() = default;
  explicit ProductForm(std::vector<Factor> factors);
  static ProductForm integer(const BigInt& value);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  BigInt value() const;
  std::string to_string() const;
  ProductForm operator*(const ProductForm& other) const;

 private:
  std::vector<Factor> factors_;
};

// v-th root of the product, rounded half-even to 6 decimal places.
std::string per_vertex_rate(const ProductForm& raw, std::uint64_t v);

struct BoundOptions {
  std::uint64_t cap_faces = kDefaultFaceCap;
  std::size_t max_columns = 20'000'000;
  unsigned workers = 1;
  // Called every 256 enumerated subsets with (done, total).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct ResidualClass {
  CanonicalCode code;
  Graph representative;
  std::uint64_t multiplicity = 0;
  std::uint64_t first_subset = 0;  // bitmask over slots, or index of sigma
  BettiVector betti;
  std::uint64_t total = 0;
};

struct ResidualClassTable {
  std::string scope;  // "per-tile" or "global"
  std::uint64_t enumerated = 0;
  std::uint64_t distinct_labeled = 0;
  std::vector<ResidualClass> classes;  // in order of first appearance
  std::uint64_t max_total = 0;
  std::size_t argmax_class = 0;
  std::string geometry_digest;  // per-tile scope only
  double timing_ms = 0;
};

// The 2^slots residuals of one tile: the tile minus the neighbors of a
// subset of its boundary slots.
ResidualClassTable residual_class_table(const Tiling& t, const BoundOptions& options = {});
// Residuals G - (U + N[sigma]) for sigma in I(G[U]), deduplicated as graphs.
ResidualClassTable residual_class_table(const Graph& g, const VertexSet& u,
                                        const BoundOptions& options = {});
std::string residual_table_csv(const ResidualClassTable& table);

struct UpperBoundResult {
  std::uint64_t max_betti = 0;          // B
  std::uint64_t independent_count = 0;  // |I(G[U])|
  BigInt bound;                         // B * |I(G[U])|
  VertexSet argmax_sigma;
  std::size_t component_classes = 0;
  double timing_ms = 0;
};

// Filtration bound: B = max over sigma in I(G[U]) of the total Betti number
// of I(G - (U + N[sigma])), computed per connected component; returns
// B * |I(G[U])|.
UpperBoundResult upper_bound(const Graph& g, const VertexSet& u,
                             const BoundOptions& options = {});
// |I(G[U])| when G - U is a forest. Throws Error(kNotAForest) otherwise.
UpperBoundResult forest_bound(const Graph& g, const VertexSet& u,
                              const BoundOptions& options = {});

struct LowerBoundResult {
  PairingMatrix matrix;
  std::size_t rank = 0;
  int degree = -1;  // homological degree of the certified classes
};

// Rank of the pairing matrix of a validated family. Throws
// Error(kInvalidInput) naming the first rejected pair.
LowerBoundResult lower_bound(const Graph& g,
                             const std::vector<MatchingWithTransversal>& family);

struct BoundReport {
  std::string kind;        // "lower" or "upper"
  std::string descriptor;  // lattice or graph description
  std::uint64_t vertices = 0;
  ProductForm raw;
  std::string rate_6dp;
  std::string witness_json;  // a JSON value
  double timing_ms = 0;
};

std::string report_json(const BoundReport& r);
std::string reports_json(const std::vector<BoundReport>& rs);

enum class BoundMode { kLower, kUpper, kBoth };

struct LatticeBounds {
  LatticeSpec spec;
  std::uint64_t vertices = 0;
  std::size_t tiles = 0;
  std::string geometry_digest;
  std::optional<BoundReport> lower;
  std::optional<BoundReport> upper;
  std::optional<TemplatePair> templates;
  std::optional<ResidualClassTable> table;
  std::optional<UpperBoundResult> exact_upper;  // only for small |I(G[U])|
};

// Lower bound from the 2^k template families and upper bound from the
// per-tile residual table on a tileable quotient.
LatticeBounds lattice_bounds(const LatticeSpec& spec, BoundMode mode,
                             const BoundOptions& options = {});

// Bounds for an arbitrary graph. Lower: rank of the pairing matrix of up to
// `max_pairs` pairs from find_matching_pairs. Upper: filtration bound over u,
// plus the forest bound when G minus u is a forest.
std::vector<BoundReport> graph_bounds(const Graph& g, const VertexSet& u, BoundMode mode,
                                      const BoundOptions& options = {},
                                      std::size_t max_pairs = 64);

// Tiles, separator, slots and (optionally searched) templates as JSON.
std::string tiling_json(const PeriodicLattice& lattice, const Tiling& t,
                        const TemplatePair* templates = nullptr);

}  // namespace indcomplex

#endif  // INDCOMPLEX_BOUNDS_HPP
