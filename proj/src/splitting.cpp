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

#include "indcomplex/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "indcomplex/complex.hpp"
#include "indcomplex/error.hpp"
#include "json.hpp"

namespace indcomplex {
namespace {

VertexSet matched_vertices(const MatchingWithTransversal& m, std::size_t universe) {
  VertexSet s(universe);
  for (auto [v, w] : m.edges) {
    s.insert(v);
    s.insert(w);
  }
  return s;
}

std::string graph_hash(const Graph& g) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << digest64(canonical_code(g));
  return os.str();
}

}  // namespace

Graph cofibre_graph(const Graph& g, const VertexSet& h) {
  const std::size_t n = g.vertex_count();
  if (h.universe() != n) throw Error(ErrorCode::kInvalidInput, "vertex set universe differs from graph");
  auto edges = g.edges();
  for (std::size_t v = 0; v < n; ++v)
    if (!h.contains(static_cast<int>(v))) edges.emplace_back(static_cast<int>(v), static_cast<int>(n));
  return Graph(n + 1, edges);
}

VertexSet widen(const VertexSet& s, std::size_t universe) {
  if (universe < s.universe()) throw Error(ErrorCode::kInvalidInput, "cannot shrink a vertex set");
  VertexSet out(universe);
  for (int v : s.members()) out.insert(v);
  return out;
}

StarCheck check_star_condition(const std::vector<MatchingWithTransversal>& family) {
  StarCheck r;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto vm = matched_vertices(family[i], family[i].transversal.universe());
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const auto sigma = widen(family[j].transversal, std::max(vm.universe(), family[j].transversal.universe()));
      if (sigma.is_subset_of(widen(vm, sigma.universe()))) {
        r.ok = false;
        r.i = i;
        r.j = j;
        return r;
      }
    }
  }
  return r;
}

SplittingTrace splitting_trace(const Graph& g,
                               const std::vector<MatchingWithTransversal>& family,
                               const SplittingOptions& options) {
  SplittingTrace trace;
  trace.input_order = check_star_condition(family);
  trace.order.resize(family.size());
  std::iota(trace.order.begin(), trace.order.end(), std::size_t{0});
  trace.star_ok = trace.input_order.ok;
  if (!trace.star_ok && options.try_reorder && family.size() <= 6) {
    auto order = trace.order;
    while (std::next_permutation(order.begin(), order.end())) {
      std::vector<MatchingWithTransversal> f;
      for (auto i : order) f.push_back(family[i]);
      if (check_star_condition(f).ok) {
        trace.order = order;
        trace.reordered = true;
        trace.star_ok = true;
        break;
      }
    }
  }
  trace.final_graph = g;
  if (!trace.star_ok) return trace;

  auto betti_of = [&](const Graph& h) -> std::optional<std::uint64_t> {
    if (h.vertex_count() > options.max_betti_vertices) return std::nullopt;
    return betti_numbers(independence_complex(h, options.cap_faces)).total();
  };
  Graph cur = g;
  auto before = betti_of(cur);
  for (std::size_t step = 0; step < trace.order.size(); ++step) {
    const auto& pair = family[trace.order[step]];
    MatchingWithTransversal widened{pair.edges, widen(pair.transversal, cur.vertex_count())};
    if (!validate_pair(cur, widened).ok())
      throw Error(ErrorCode::kInvalidInput,
                  "pair " + std::to_string(trace.order[step]) + " fails validation at step " +
                      std::to_string(step + 1));
    SplittingStep s;
    s.family_index = trace.order[step];
    s.sphere_dimension = static_cast<int>(pair.edges.size()) - 1;
    s.vertices_before = cur.vertex_count();
    s.graph_hash = graph_hash(cur);
    Graph next = cofibre_graph(cur, matched_vertices(widened, cur.vertex_count()));
    auto after = betti_of(next);
    s.betti_before = before;
    s.betti_after = after;
    if (before && after) s.ledger_ok = *before == 1 + *after;
    trace.ledger_ok &= s.ledger_ok;
    trace.steps.push_back(std::move(s));
    cur = std::move(next);
    before = after;
  }
  trace.final_betti = before;
  trace.final_graph = std::move(cur);
  return trace;
}

std::string trace_json(const SplittingTrace& t) {
  auto steps = nlohmann::json::array();
  for (const auto& s : t.steps) {
    nlohmann::json j = {{"family_index", s.family_index},
                        {"sphere_dimension", s.sphere_dimension},
                        {"vertices", s.vertices_before},
                        {"graph_hash", s.graph_hash},
                        {"ledger_ok", s.ledger_ok}};
    j["betti_before"] = s.betti_before ? nlohmann::json(*s.betti_before) : nlohmann::json();
    j["betti_after"] = s.betti_after ? nlohmann::json(*s.betti_after) : nlohmann::json();
    steps.push_back(j);
  }
  nlohmann::json out = {{"schema", 1},
                        {"star_condition_input_order", t.input_order.ok},
                        {"order", t.order},
                        {"reordered", t.reordered},
                        {"star_ok", t.star_ok},
                        {"steps", steps},
                        {"ledger_ok", t.ledger_ok}};
  if (!t.input_order.ok) out["input_violation"] = {t.input_order.i, t.input_order.j};
  out["final_betti"] = t.final_betti ? nlohmann::json(*t.final_betti) : nlohmann::json();
  return out.dump(2);
}

}  // namespace indcomplex
