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

#include "indcomplex/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "indcomplex/error.hpp"
#include "json.hpp"

namespace indcomplex {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs fn(i) for i in [0, count) on up to `workers` threads.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(workers, count);
  for (unsigned w = 0; w < n; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

BettiVector residual_betti(const Graph& g, const BoundOptions& options, BettiMemo* memo) {
  HomologyOptions h;
  h.max_columns = options.max_columns;
  return graph_betti(g, options.cap_faces, h, memo);
}

void compute_class_homology(ResidualClassTable& table, const BoundOptions& options) {
  BettiMemo memo;
  parallel_for(table.classes.size(), options.workers, [&](std::size_t i) {
    auto& c = table.classes[i];
    c.betti = residual_betti(c.representative, options, &memo);
    c.total = c.betti.total();
  });
  table.max_total = 0;
  table.argmax_class = 0;
  for (std::size_t i = 0; i < table.classes.size(); ++i)
    if (table.classes[i].total > table.max_total) {
      table.max_total = table.classes[i].total;
      table.argmax_class = i;
    }
}

std::string betti_string(const BettiVector& b) {
  std::ostringstream os;
  bool first = true;
  for (auto [d, v] : b.values()) {
    if (!first) os << ' ';
    first = false;
    os << d << ':' << v;
  }
  return os.str();
}

Graph local_residual(const Graph& tile, std::uint64_t keep) {
  VertexSet s(tile.vertex_count());
  for (std::uint64_t rest = keep; rest; rest &= rest - 1) s.insert(std::countr_zero(rest));
  return induced_subgraph(tile, s).graph;
}

}  // namespace

// ---------------------------------------------------------------------------
// ProductForm

ProductForm::ProductForm(std::vector<Factor> factors) {
  for (auto& f : factors) {
    if (sgn(f.base) < 0) throw Error(ErrorCode::kInvalidInput, "negative base");
    if (f.exponent == 0 || f.base == 1) continue;
    if (sgn(f.base) == 0) {
      factors_ = {Factor{BigInt(0), 1}};
      return;
    }
    auto it = std::find_if(factors_.begin(), factors_.end(),
                           [&](const Factor& g) { return g.base == f.base; });
    if (it == factors_.end())
      factors_.push_back(f);
    else
      it->exponent += f.exponent;
  }
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& x, const Factor& y) { return x.base > y.base; });
}

ProductForm ProductForm::integer(const BigInt& value) {
  if (sgn(value) > 0 && mpz_popcount(value.get_mpz_t()) == 1)
    return ProductForm({Factor{BigInt(2), mpz_scan1(value.get_mpz_t(), 0)}});
  return ProductForm({Factor{value, 1}});
}

BigInt ProductForm::value() const {
  BigInt out(1);
  for (const auto& f : factors_) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), f.base.get_mpz_t(), f.exponent);
    out *= p;
  }
  return out;
}

std::string ProductForm::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += '*';
    s += f.base.get_str();
    if (f.exponent != 1) s += '^' + std::to_string(f.exponent);
  }
  return s;
}

ProductForm ProductForm::operator*(const ProductForm& other) const {
  auto all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return ProductForm(std::move(all));
}

std::string per_vertex_rate(const ProductForm& raw, std::uint64_t v) {
  if (v == 0) throw Error(ErrorCode::kInvalidInput, "vertex count must be positive");
  for (const auto& f : raw.factors())
    if (sgn(f.base) == 0) return "0.000000";
  mpfr_t acc, term, base;
  mpfr_inits2(320, acc, term, base, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(acc, 0, MPFR_RNDN);
  for (const auto& f : raw.factors()) {
    mpfr_set_z(base, f.base.get_mpz_t(), MPFR_RNDN);
    mpfr_log(term, base, MPFR_RNDN);
    mpfr_mul_ui(term, term, f.exponent, MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
  }
  mpfr_div_ui(acc, acc, v, MPFR_RNDN);
  mpfr_exp(acc, acc, MPFR_RNDN);
  mpfr_mul_ui(acc, acc, 1'000'000, MPFR_RNDN);
  mpfr_rint(acc, acc, MPFR_RNDN);  // ties to even
  BigInt scaled;
  mpfr_get_z(scaled.get_mpz_t(), acc, MPFR_RNDN);
  mpfr_clears(acc, term, base, static_cast<mpfr_ptr>(nullptr));
  std::string digits = scaled.get_str();
  if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
  digits.insert(digits.size() - 6, ".");
  return digits;
}

// ---------------------------------------------------------------------------
// Residual tables

ResidualClassTable residual_class_table(const Tiling& t, const BoundOptions& options) {
  const auto start = Clock::now();
  const std::size_t slots = t.slot_count();
  const std::size_t n = t.tile_graph.vertex_count();
  if (n > 64 || slots > 30)
    throw Error(ErrorCode::kResource, "tile too large for per-tile enumeration");
  std::vector<std::uint64_t> removes(slots);
  for (std::size_t j = 0; j < slots; ++j) removes[j] = t.slot_neighbors[j].low_word();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  ResidualClassTable table;
  table.scope = "per-tile";
  table.geometry_digest = geometry_digest(t);
  std::unordered_map<std::uint64_t, std::size_t> by_mask;
  std::unordered_map<CanonicalCode, std::size_t> by_code;
  const std::uint64_t total = std::uint64_t{1} << slots;
  for (std::uint64_t s = 0; s < total; ++s) {
    std::uint64_t removed = 0;
    for (std::uint64_t rest = s; rest; rest &= rest - 1) removed |= removes[std::countr_zero(rest)];
    auto it = by_mask.find(removed);
    std::size_t cls;
    if (it != by_mask.end()) {
      cls = it->second;
    } else {
      Graph r = local_residual(t.tile_graph, all & ~removed);
      auto code = canonical_code(r);
      auto [ct, fresh] = by_code.emplace(code, table.classes.size());
      if (fresh) {
        ResidualClass c;
        c.code = std::move(code);
        c.representative = std::move(r);
        c.first_subset = s;
        table.classes.push_back(std::move(c));
      }
      cls = ct->second;
      by_mask.emplace(removed, cls);
    }
    ++table.classes[cls].multiplicity;
    ++table.enumerated;
    if (options.progress && (s & 255) == 255) options.progress(s + 1, total);
  }
  table.distinct_labeled = by_mask.size();
  compute_class_homology(table, options);
  table.timing_ms = ms_since(start);
  return table;
}

ResidualClassTable residual_class_table(const Graph& g, const VertexSet& u,
                                        const BoundOptions& options) {
  const auto start = Clock::now();
  if (u.universe() != g.vertex_count())
    throw Error(ErrorCode::kInvalidInput, "separator universe differs from graph");
  const auto gu = induced_subgraph(g, u);
  const std::uint64_t total = count_independent_sets(gu.graph, options.cap_faces);
  ResidualClassTable table;
  table.scope = "global";
  std::unordered_map<CanonicalCode, std::size_t> by_code;
  std::uint64_t index = 0;
  for_each_independent_set(gu.graph, [&](const VertexSet& local) {
    VertexSet sigma(g.vertex_count());
    for (int v : local.members()) sigma.insert(gu.parent_ids[static_cast<std::size_t>(v)]);
    Graph r = remove_vertices(g, u | closed_neighborhood(g, sigma)).graph;
    auto code = canonical_code(r);
    auto [it, fresh] = by_code.emplace(code, table.classes.size());
    if (fresh) {
      ResidualClass c;
      c.code = std::move(code);
      c.representative = std::move(r);
      c.first_subset = index;
      table.classes.push_back(std::move(c));
    }
    ++table.classes[it->second].multiplicity;
    ++table.enumerated;
    ++index;
    if (options.progress && (index & 255) == 0) options.progress(index, total);
    return true;
  });
  table.distinct_labeled = table.enumerated;
  compute_class_homology(table, options);
  table.timing_ms = ms_since(start);
  return table;
}

std::string residual_table_csv(const ResidualClassTable& table) {
  std::ostringstream os;
  os << "class,code_digest,vertices,edges,multiplicity,first_subset,betti,total\n";
  for (std::size_t i = 0; i < table.classes.size(); ++i) {
    const auto& c = table.classes[i];
    std::ostringstream hex;
    hex << std::hex;
    hex.width(16);
    hex.fill('0');
    hex << digest64(c.code);
    os << i << ',' << hex.str() << ',' << c.representative.vertex_count() << ','
       << c.representative.edge_count() << ',' << c.multiplicity << ',' << c.first_subset
       << ',' << betti_string(c.betti) << ',' << c.total << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Upper bounds

UpperBoundResult upper_bound(const Graph& g, const VertexSet& u, const BoundOptions& options) {
  const auto start = Clock::now();
  if (u.universe() != g.vertex_count())
    throw Error(ErrorCode::kInvalidInput, "separator universe differs from graph");
  const auto gu = induced_subgraph(g, u);
  const std::uint64_t total = count_independent_sets(gu.graph, options.cap_faces);

  std::unordered_map<CanonicalCode, std::size_t> by_code;
  std::vector<Graph> reps;
  std::vector<std::vector<std::size_t>> parts;  // per sigma, component classes
  std::vector<VertexSet> sigmas;
  for_each_independent_set(gu.graph, [&](const VertexSet& local) {
    VertexSet sigma(g.vertex_count());
    for (int v : local.members()) sigma.insert(gu.parent_ids[static_cast<std::size_t>(v)]);
    const auto residual = remove_vertices(g, u | closed_neighborhood(g, sigma)).graph;
    std::vector<std::size_t> ids;
    for (const auto& comp : connected_components(residual)) {
      auto part = induced_subgraph(residual, comp).graph;
      auto [it, fresh] = by_code.emplace(canonical_code(part), reps.size());
      if (fresh) reps.push_back(std::move(part));
      ids.push_back(it->second);
    }
    parts.push_back(std::move(ids));
    sigmas.push_back(std::move(sigma));
    if (options.progress && (sigmas.size() & 255) == 0) options.progress(sigmas.size(), total);
    return true;
  });

  std::vector<std::uint64_t> totals(reps.size());
  BettiMemo memo;
  parallel_for(reps.size(), options.workers,
               [&](std::size_t i) { totals[i] = residual_betti(reps[i], options, &memo).total(); });

  UpperBoundResult r;
  r.independent_count = total;
  r.component_classes = reps.size();
  BigInt best(-1);
  for (std::size_t s = 0; s < parts.size(); ++s) {
    // Empty residual: the empty complex, total Betti 1.
    BigInt prod(1);
    for (auto id : parts[s]) prod *= BigInt(static_cast<unsigned long>(totals[id]));
    if (prod > best) {
      best = prod;
      r.argmax_sigma = sigmas[s];
    }
  }
  if (!best.fits_ulong_p()) throw Error(ErrorCode::kResource, "residual Betti exceeds 64 bits");
  r.max_betti = best.get_ui();
  r.bound = best * BigInt(static_cast<unsigned long>(total));
  r.timing_ms = ms_since(start);
  return r;
}

UpperBoundResult forest_bound(const Graph& g, const VertexSet& u, const BoundOptions& options) {
  const auto start = Clock::now();
  if (u.universe() != g.vertex_count())
    throw Error(ErrorCode::kInvalidInput, "separator universe differs from graph");
  if (!is_forest(remove_vertices(g, u).graph))
    throw Error(ErrorCode::kNotAForest, "G - U is not a forest");
  UpperBoundResult r;
  r.max_betti = 1;
  r.independent_count = count_independent_sets(induced_subgraph(g, u).graph, options.cap_faces);
  r.bound = BigInt(static_cast<unsigned long>(r.independent_count));
  r.argmax_sigma = VertexSet(g.vertex_count());
  r.timing_ms = ms_since(start);
  return r;
}

LowerBoundResult lower_bound(const Graph& g,
                             const std::vector<MatchingWithTransversal>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto v = validate_pair(g, family[i]);
    if (!v.ok()) {
      std::string why = !v.edges_exist ? "a pair is not an edge"
                        : !v.induced   ? "matching is not induced"
                        : !v.hits_each_edge ? "transversal does not hit each edge once"
                                            : "transversal is not dominating";
      throw Error(ErrorCode::kInvalidInput,
                  "certificate rejected at pair " + std::to_string(i) + ": " + why);
    }
  }
  LowerBoundResult r;
  r.matrix = pairing_matrix(family);
  r.rank = rank_lower_bound(r.matrix);
  if (!family.empty()) {
    r.degree = static_cast<int>(family.front().edges.size()) - 1;
    for (const auto& m : family)
      if (static_cast<int>(m.edges.size()) - 1 != r.degree) r.degree = -1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

nlohmann::json factors_json(const ProductForm& p) {
  auto arr = nlohmann::json::array();
  for (const auto& f : p.factors()) {
    nlohmann::json base = f.base.fits_ulong_p() ? nlohmann::json(f.base.get_ui())
                                                : nlohmann::json(f.base.get_str());
    arr.push_back({{"base", base}, {"exponent", f.exponent}});
  }
  return arr;
}

nlohmann::json report_object(const BoundReport& r) {
  return {{"schema", 1},
          {"kind", r.kind},
          {"descriptor", r.descriptor},
          {"vertices", r.vertices},
          {"raw", r.raw.to_string()},
          {"raw_factors", factors_json(r.raw)},
          {"raw_value", r.raw.value().get_str()},
          {"rate_6dp", r.rate_6dp},
          {"witness", r.witness_json.empty() ? nlohmann::json() : nlohmann::json::parse(r.witness_json)},
          {"timing_ms", r.timing_ms}};
}

nlohmann::json template_json(const TileTemplate& t) {
  auto edges = nlohmann::json::array();
  for (auto [v, w] : t.edges) edges.push_back({v, w});
  return {{"label", std::string(1, t.label)},
          {"edges", edges},
          {"transversal", t.transversal},
          {"responsible_slots", t.responsible}};
}

}  // namespace

std::string report_json(const BoundReport& r) { return report_object(r).dump(2); }

std::string reports_json(const std::vector<BoundReport>& rs) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rs) arr.push_back(report_object(r));
  return nlohmann::json{{"schema", 1}, {"reports", arr}}.dump(2);
}

LatticeBounds lattice_bounds(const LatticeSpec& spec, BoundMode mode, const BoundOptions& options) {
  const auto lat = generate(spec);
  const auto t = tile(lat);
  LatticeBounds out;
  out.spec = spec;
  out.vertices = lat.graph.vertex_count();
  out.tiles = t.tile_count();
  out.geometry_digest = geometry_digest(t);
  const std::string descriptor = std::string(lattice_kind_name(spec.kind)) +
                                 " n=" + std::to_string(spec.n) + " m=" + std::to_string(spec.m);

  if (mode != BoundMode::kUpper) {
    const auto start = Clock::now();
    auto templates = search_tile_templates(t);
    std::vector<MatchingWithTransversal> family;
    for (const auto& w : assignment_words(t.tile_count()))
      family.push_back(family_from_assignment(t, templates, w));
    const auto lb = lower_bound(lat.graph, family);
    bool triangular = true, unit_diagonal = true;
    for (std::size_t r = 0; r < lb.matrix.rows; ++r) {
      unit_diagonal &= std::abs(lb.matrix.at(r, r)) == 1;
      for (std::size_t c = r + 1; c < lb.matrix.cols; ++c) triangular &= lb.matrix.at(r, c) == 0;
    }
    nlohmann::json w = {{"matching_size", templates.stats.matching_size},
                        {"degree", lb.degree},
                        {"families", family.size()},
                        {"rank", lb.rank},
                        {"zero_above_diagonal", triangular},
                        {"unit_diagonal", unit_diagonal},
                        {"template_a", template_json(templates.a)},
                        {"template_b", template_json(templates.b)}};
    if (lb.matrix.rows <= 64) {
      auto rows = nlohmann::json::array();
      for (std::size_t r = 0; r < lb.matrix.rows; ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < lb.matrix.cols; ++c) row.push_back(lb.matrix.at(r, c));
        rows.push_back(row);
      }
      w["pairing_matrix"] = rows;
    }
    BoundReport rep;
    rep.kind = "lower";
    rep.descriptor = descriptor;
    rep.vertices = out.vertices;
    rep.raw = ProductForm::integer(BigInt(static_cast<unsigned long>(lb.rank)));
    rep.rate_6dp = per_vertex_rate(rep.raw, out.vertices);
    rep.witness_json = w.dump();
    rep.timing_ms = ms_since(start);
    out.lower = std::move(rep);
    out.templates = std::move(templates);
  }

  if (mode != BoundMode::kLower) {
    const auto start = Clock::now();
    auto table = residual_class_table(t, options);
    const auto gu = induced_subgraph(lat.graph, t.separator);
    const bool independent = gu.graph.edge_count() == 0;
    const std::uint64_t count =
        independent ? (t.separator.count() < 64 ? std::uint64_t{1} << t.separator.count() : ~std::uint64_t{0})
                    : count_independent_sets(gu.graph, options.cap_faces);
    ProductForm sep = independent
                          ? ProductForm({Factor{BigInt(2), t.separator.count()}})
                          : ProductForm::integer(BigInt(static_cast<unsigned long>(count)));
    BoundReport rep;
    rep.kind = "upper";
    rep.descriptor = descriptor;
    rep.vertices = out.vertices;
    rep.raw = ProductForm({Factor{BigInt(static_cast<unsigned long>(table.max_total)),
                                  t.tile_count()}}) *
              sep;
    rep.rate_6dp = per_vertex_rate(rep.raw, out.vertices);
    nlohmann::json w = {{"scope", table.scope},
                        {"enumerated", table.enumerated},
                        {"distinct_labeled", table.distinct_labeled},
                        {"classes", table.classes.size()},
                        {"max_total_betti", table.max_total},
                        {"separator_size", t.separator.count()},
                        {"separator_independent", independent},
                        {"independent_sets_of_separator", count},
                        {"geometry_digest", table.geometry_digest}};
    if (count <= (std::uint64_t{1} << 16)) {
      auto exact = upper_bound(lat.graph, t.separator, options);
      if (exact.bound > rep.raw.value())
        throw Error(ErrorCode::kInternal, "exact filtration bound exceeds tiled bound");
      w["exact_B"] = exact.max_betti;
      w["exact_bound"] = exact.bound.get_str();
      out.exact_upper = std::move(exact);
    }
    rep.witness_json = w.dump();
    rep.timing_ms = ms_since(start);
    out.upper = std::move(rep);
    out.table = std::move(table);
  }
  return out;
}

std::vector<BoundReport> graph_bounds(const Graph& g, const VertexSet& u, BoundMode mode,
                                      const BoundOptions& options, std::size_t max_pairs) {
  std::vector<BoundReport> out;
  const std::string descriptor = "graph n=" + std::to_string(g.vertex_count()) +
                                 " m=" + std::to_string(g.edge_count());
  const std::uint64_t v = g.vertex_count();
  if (mode != BoundMode::kUpper) {
    const auto start = Clock::now();
    const auto family = find_matching_pairs(g, max_pairs, options.cap_faces);
    const auto lb = lower_bound(g, family);
    BoundReport rep;
    rep.kind = "lower";
    rep.descriptor = descriptor;
    rep.vertices = v;
    rep.raw = ProductForm::integer(BigInt(static_cast<unsigned long>(lb.rank)));
    rep.rate_6dp = v ? per_vertex_rate(rep.raw, v) : "";
    auto pairs = nlohmann::json::array();
    for (const auto& m : family) {
      auto edges = nlohmann::json::array();
      for (auto [a, b] : m.edges) edges.push_back({a, b});
      pairs.push_back(edges);
    }
    rep.witness_json = nlohmann::json{{"pairs", pairs}, {"rank", lb.rank}, {"degree", lb.degree}}.dump();
    rep.timing_ms = ms_since(start);
    out.push_back(std::move(rep));
  }
  if (mode != BoundMode::kLower) {
    const auto start = Clock::now();
    const auto ub = upper_bound(g, u, options);
    BoundReport rep;
    rep.kind = "upper";
    rep.descriptor = descriptor;
    rep.vertices = v;
    rep.raw = ProductForm::integer(ub.bound);
    rep.rate_6dp = v ? per_vertex_rate(rep.raw, v) : "";
    nlohmann::json w = {{"separator", u.members()},
                        {"max_betti", ub.max_betti},
                        {"independent_sets_of_separator", ub.independent_count},
                        {"component_classes", ub.component_classes},
                        {"argmax_sigma", ub.argmax_sigma.members()}};
    if (is_forest(remove_vertices(g, u).graph)) w["forest_bound"] = forest_bound(g, u, options).bound.get_str();
    rep.witness_json = w.dump();
    rep.timing_ms = ms_since(start);
    out.push_back(std::move(rep));
  }
  return out;
}

std::string tiling_json(const PeriodicLattice& lattice, const Tiling& t, const TemplatePair* templates) {
  auto points = [](const std::vector<LatticePoint>& ps) {
    auto arr = nlohmann::json::array();
    for (const auto& p : ps) arr.push_back({p.a, p.b});
    return arr;
  };
  auto tiles = nlohmann::json::array();
  for (std::size_t i = 0; i < t.tile_count(); ++i)
    tiles.push_back({{"vertices", t.tile_vertices[i]}, {"boundary", t.boundary[i]},
                     {"distinct_boundary", t.distinct_boundary(i)}});
  nlohmann::json out = {{"schema", 1},
                        {"lattice", {{"kind", lattice_kind_name(lattice.spec.kind)},
                                     {"n", lattice.spec.n},
                                     {"m", lattice.spec.m},
                                     {"vertices", lattice.graph.vertex_count()},
                                     {"edges", lattice.graph.edge_count()}}},
                        {"tile_size", t.tile_graph.vertex_count()},
                        {"tile_edges", t.tile_graph.edge_count()},
                        {"separator", t.separator.members()},
                        {"tile_points", points(t.tile_points)},
                        {"slot_points", points(t.slot_points)},
                        {"slot_orbit", t.slot_orbit},
                        {"orbit_count", t.orbit_count},
                        {"tiles", tiles},
                        {"geometry_digest", geometry_digest(t)}};
  if (templates) {
    out["template_a"] = template_json(templates->a);
    out["template_b"] = template_json(templates->b);
    out["template_search"] = {{"matching_size", templates->stats.matching_size},
                              {"candidates", templates->stats.candidates},
                              {"pairs_tested", templates->stats.pairs_tested}};
  }
  return out.dump(2);
}

}  // namespace indcomplex
