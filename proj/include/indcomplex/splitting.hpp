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

#ifndef INDCOMPLEX_SPLITTING_HPP
#define INDCOMPLEX_SPLITTING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indcomplex/cross_cycles.hpp"
#include "indcomplex/graph.hpp"

namespace indcomplex {

// G plus one new vertex (id v(G)) adjacent to every vertex outside h.
Graph cofibre_graph(const Graph& g, const VertexSet& h);

// Same vertex set, larger universe.
VertexSet widen(const VertexSet& s, std::size_t universe);

struct StarCheck {
  bool ok = true;
  // First violating pair (i < j, 0-based): sigma_j lies inside V(M_i).
  std::size_t i = 0;
  std::size_t j = 0;
};

StarCheck check_star_condition(const std::vector<MatchingWithTransversal>& family);

struct SplittingStep {
  std::size_t family_index = 0;  // position in the input family
  int sphere_dimension = -1;
  std::size_t vertices_before = 0;
  std::string graph_hash;  // canonical digest of the graph before the step
  std::optional<std::uint64_t> betti_before;
  std::optional<std::uint64_t> betti_after;
  bool ledger_ok = true;  // betti_before == 1 + betti_after when both known
};

struct SplittingTrace {
  StarCheck input_order;           // star check of the order as given
  std::vector<std::size_t> order;  // order actually used
  bool reordered = false;
  bool star_ok = false;
  std::vector<SplittingStep> steps;
  Graph final_graph;
  std::optional<std::uint64_t> final_betti;
  bool ledger_ok = true;
};

struct SplittingOptions {
  std::size_t max_betti_vertices = 22;  // direct homology only up to this size
  std::uint64_t cap_faces = kDefaultFaceCap;
  bool try_reorder = true;              // all k! orders, only for k <= 6
};

// Peels one sphere per pair. Throws Error(kInvalidInput) naming the step
// when a pair fails to validate in the current graph.
SplittingTrace splitting_trace(const Graph& g,
                               const std::vector<MatchingWithTransversal>& family,
                               const SplittingOptions& options = {});

std::string trace_json(const SplittingTrace& t);

}  // namespace indcomplex

#endif  // INDCOMPLEX_SPLITTING_HPP
