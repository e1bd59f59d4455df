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

#ifndef INDCOMPLEX_CROSS_CYCLES_HPP
#define INDCOMPLEX_CROSS_CYCLES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "indcomplex/graph.hpp"
#include "indcomplex/rank.hpp"

namespace indcomplex {

/// Induced matching (v_i, w_i) together with a transversal that picks one
/// endpoint of every edge. Edge order and endpoint order fix the sign of the
/// cross-cycle.
struct MatchingWithTransversal {
  std::vector<Edge> edges;
  VertexSet transversal;
};

struct PairValidation {
  bool edges_exist = false;       // every pair is an edge of the graph
  bool induced = false;           // disjoint edges, no other edges among them
  bool hits_each_edge = false;    // exactly one endpoint per edge
  bool dominating = false;        // closed neighborhood covers V(G)
  bool ok() const { return edges_exist && induced && hits_each_edge && dominating; }
};

// Throws Error(kInvalidInput) when some pair is not an edge of g.
bool is_induced_matching(const Graph& g, const std::vector<Edge>& edges);
PairValidation validate_pair(const Graph& g, const MatchingWithTransversal& m);

/// Formal rational combination of oriented simplices, each stored as its
/// sorted vertex list (the positive orientation).
// Validated pairs of g, at most `limit`: transversals are maximal independent
// sets in enumeration order, partners chosen depth-first by vertex id. Edges
// are written (transversal vertex, partner). At most `per_transversal` pairs
// share one transversal.
std::vector<MatchingWithTransversal> find_matching_pairs(const Graph& g, std::size_t limit,
                                                         std::uint64_t cap = kDefaultFaceCap,
                                                         std::size_t per_transversal = SIZE_MAX);

struct RationalChain {
  int degree = -1;
  std::map<std::vector<int>, BigRational> terms;
};
using RationalCochain = RationalChain;

// Expansion of ([v_1]-[w_1]) ^ ... ^ ([v_k]-[w_k]) into 2^k signed simplices.
// Throws Error(kInvalidInput) unless the edges form an induced matching of g.
RationalChain cross_cycle_chain(const Graph& g, const std::vector<Edge>& edges);

// Indicator cochain of sigma (sorted orientation). Throws Error(kInvalidInput)
// when sigma is not independent.
RationalCochain transversal_cocycle(const Graph& g, const VertexSet& sigma);

RationalChain chain_boundary(const RationalChain& c);
// Coboundary inside I(g).
RationalCochain coboundary(const Graph& g, const RationalCochain& c);
// Zero when the degrees differ.
BigRational evaluate(const RationalCochain& f, const RationalChain& c);

struct PairingValue {
  int value = 0;
  bool degree_mismatch = false;
};

// Combinatorial evaluation of <sigma^v, alpha_M>.
PairingValue pairing_value(const VertexSet& sigma, const std::vector<Edge>& edges);

/// Rows are matchings, columns are transversals.
struct PairingMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> entries;  // row-major
  bool any_degree_mismatch = false;

  int at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

PairingMatrix pairing_matrix(const std::vector<MatchingWithTransversal>& family);
std::size_t rank_lower_bound(const PairingMatrix& p);

// Coefficients a with <sigma_i, target> = sum_j a_j <sigma_i, M_j> over the
// transversals sigma_i of the basis. Throws Error(kNoUniqueSolution) when the
// basis pairing matrix is singular.
std::vector<BigRational> express_in_basis(
    const MatchingWithTransversal& target,
    const std::vector<MatchingWithTransversal>& basis);

}  // namespace indcomplex

#endif  // INDCOMPLEX_CROSS_CYCLES_HPP
