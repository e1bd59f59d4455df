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

#include "indcomplex/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "indcomplex/error.hpp"

namespace indcomplex {
namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod(int a, int b) { return a - b * floor_div(a, b); }

// Extended gcd: returns g >= 0 with x*a + y*b = g.
int ext_gcd(int a, int b, int& x, int& y) {
  if (b == 0) {
    x = a < 0 ? -1 : 1;
    y = 0;
    return a < 0 ? -a : a;
  }
  int x1, y1;
  const int g = ext_gcd(b, mod(a, b), x1, y1);
  x = y1;
  y = x1 - floor_div(a, b) * y1;
  return g;
}

// 4 * squared Euclidean length of the lattice vector (da, db).
std::int64_t norm4(int da, int db) {
  const std::int64_t x = 2 * std::int64_t{da} + db;
  return x * x + 3 * std::int64_t{db} * db;
}

Rational64 reduced(std::int64_t num, std::int64_t den) {
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace

const char* lattice_kind_name(LatticeKind kind) noexcept {
  switch (kind) {
    case LatticeKind::kKagome: return "kagome";
    case LatticeKind::kTriangular: return "triangular";
    case LatticeKind::kDelta3: return "delta3";
    case LatticeKind::kDelta4: return "delta4";
    case LatticeKind::kCycle: return "cycle";
  }
  return "unknown";
}

LatticeKind parse_lattice_kind(const std::string& name) {
  for (auto k : {LatticeKind::kKagome, LatticeKind::kTriangular, LatticeKind::kDelta3,
                 LatticeKind::kDelta4, LatticeKind::kCycle})
    if (name == lattice_kind_name(k)) return k;
  throw Error(ErrorCode::kInvalidInput, "unknown lattice kind '" + name + "'");
}

// ---------------------------------------------------------------------------
// Lattice2

Lattice2 Lattice2::from_generators(std::array<int, 2> u, std::array<int, 2> v) {
  const std::int64_t det = std::int64_t{u[0]} * v[1] - std::int64_t{u[1]} * v[0];
  if (det == 0) throw Error(ErrorCode::kDegenerateQuotient, "period vectors are dependent");
  int x, y;
  const int r = ext_gcd(u[1], v[1], x, y);
  Lattice2 l;
  if (r == 0) throw Error(ErrorCode::kDegenerateQuotient, "period vectors are dependent");
  const int w0 = x * u[0] + y * v[0];
  const int z0 = (v[1] / r) * u[0] - (u[1] / r) * v[0];
  l.p = z0 < 0 ? -z0 : z0;
  l.r = r;
  l.q = mod(w0, l.p);
  return l;
}

LatticePoint Lattice2::reduce(LatticePoint x) const {
  const int k = floor_div(x.b, r);
  x.a -= k * q;
  x.b -= k * r;
  x.a = mod(x.a, p);
  return x;
}

bool Lattice2::contains(const Lattice2& sub) const {
  return contains(LatticePoint{sub.p, 0}) && contains(LatticePoint{sub.q, sub.r});
}

// ---------------------------------------------------------------------------
// Generators

std::vector<LatticePoint> plane_neighbors(int d, int offset, LatticePoint x) {
  std::vector<LatticePoint> out;
  const bool erase = d >= 2;
  if (!erase || mod(x.b - offset, d) != 0) {
    out.push_back({x.a + 1, x.b});
    out.push_back({x.a - 1, x.b});
  }
  if (!erase || mod(x.a - offset, d) != 0) {
    out.push_back({x.a, x.b + 1});
    out.push_back({x.a, x.b - 1});
  }
  if (!erase || mod(x.a + x.b - 2 * offset, d) != 0) {
    out.push_back({x.a - 1, x.b + 1});
    out.push_back({x.a + 1, x.b - 1});
  }
  return out;
}

bool PeriodicLattice::has_point(LatticePoint x) const {
  if (d < 2) return true;
  return !(mod(x.a - offset, d) == 0 && mod(x.b - offset, d) == 0);
}

int PeriodicLattice::vertex_of(LatticePoint x) const {
  const auto y = periods.reduce(x);
  const int id = index_[static_cast<std::size_t>(y.b) * periods.p + y.a];
  if (id < 0) throw Error(ErrorCode::kInvalidVertex, "point is not a lattice vertex");
  return id;
}

PeriodicLattice build_periodic(LatticeSpec spec, int d, int offset, Lattice2 periods) {
  PeriodicLattice l;
  l.spec = spec;
  l.d = d;
  l.offset = offset;
  l.periods = periods;
  if (d >= 2 && (periods.p % d || periods.q % d || periods.r % d))
    throw Error(ErrorCode::kIncompatibleDims,
                "periods do not preserve the erased lines");
  l.index_.assign(static_cast<std::size_t>(periods.p) * periods.r, -1);
  for (int b = 0; b < periods.r; ++b)
    for (int a = 0; a < periods.p; ++a)
      if (l.has_point({a, b})) {
        l.index_[static_cast<std::size_t>(b) * periods.p + a] =
            static_cast<int>(l.points.size());
        l.points.push_back({a, b});
      }
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < l.points.size(); ++i) {
    const auto x = l.points[i];
    for (auto y : plane_neighbors(d, offset, x)) {
      // Forward directions only; each plane edge is visited once.
      const int da = y.a - x.a, db = y.b - x.b;
      const bool forward = db > 0 || (db == 0 && da > 0);
      if (!forward) continue;
      const int j = l.vertex_of(y);
      if (j == static_cast<int>(i))
        throw Error(ErrorCode::kDegenerateQuotient, "quotient creates a loop");
      Edge e{std::min<int>(i, j), std::max<int>(i, j)};
      if (!seen.insert(e).second)
        throw Error(ErrorCode::kDegenerateQuotient, "quotient creates a multi-edge");
      edges.push_back(e);
    }
  }
  l.graph = Graph(l.points.size(), edges);
  std::vector<Coord> coords;
  coords.reserve(l.points.size());
  // x = a + b/2; y in units of sqrt(3): b/2.
  for (auto pt : l.points)
    coords.push_back({reduced(2 * pt.a + pt.b, 2), reduced(pt.b, 2)});
  l.graph.set_coords(std::move(coords));
  return l;
}

PeriodicLattice gen_kagome(int n, int m) {
  if (n < 2 || m < 2)
    throw Error(ErrorCode::kDegenerateQuotient, "kagome periods must be at least 2");
  if (m % 2 != 0)
    throw Error(ErrorCode::kIncompatibleDims,
                "kagome period m must be even for the quotient to be periodic");
  return build_periodic({LatticeKind::kKagome, n, m}, 2, 1,
                        Lattice2::from_generators({2 * n, 0}, {-m, 2 * m}));
}

PeriodicLattice gen_triangular(int n, int m) {
  if (n < 3 || m < 3)
    throw Error(ErrorCode::kDegenerateQuotient, "triangular periods must be at least 3");
  return build_periodic({LatticeKind::kTriangular, n, m}, 0, 0,
                        Lattice2::from_generators({n, 0}, {0, m}));
}

PeriodicLattice gen_delta(int d, int n, int m) {
  if (d != 3 && d != 4) throw Error(ErrorCode::kInvalidInput, "d must be 3 or 4");
  if (n < 1 || m < 1)
    throw Error(ErrorCode::kDegenerateQuotient, "periods must be positive");
  const auto kind = d == 3 ? LatticeKind::kDelta3 : LatticeKind::kDelta4;
  return build_periodic({kind, n, m}, d, 0,
                        Lattice2::from_generators({d * n, 0}, {0, d * m}));
}

Graph gen_cycle(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidInput, "cycle length must be at least 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph(static_cast<std::size_t>(n), edges);
}

PeriodicLattice generate(const LatticeSpec& spec) {
  switch (spec.kind) {
    case LatticeKind::kKagome: return gen_kagome(spec.n, spec.m);
    case LatticeKind::kTriangular: return gen_triangular(spec.n, spec.m);
    case LatticeKind::kDelta3: return gen_delta(3, spec.n, spec.m);
    case LatticeKind::kDelta4: return gen_delta(4, spec.n, spec.m);
    case LatticeKind::kCycle: break;
  }
  throw Error(ErrorCode::kInvalidInput, "cycles are not periodic lattices");
}

// ---------------------------------------------------------------------------
// Tilings

std::size_t Tiling::distinct_boundary(std::size_t t) const {
  auto b = boundary.at(t);
  std::sort(b.begin(), b.end());
  return static_cast<std::size_t>(std::unique(b.begin(), b.end()) - b.begin());
}

TilingGeometry tiling_geometry(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::kKagome:
      // Centers on hexagonal holes, 12 holes per tile cell.
      return {kind, {1, 1}, Lattice2::from_generators({4, 4}, {12, 0})};
    case LatticeKind::kDelta3:
      return {kind, {0, 0}, Lattice2::from_generators({3, 0}, {0, 3})};
    case LatticeKind::kDelta4:
      return {kind, {0, 0}, Lattice2::from_generators({4, 4}, {8, -4})};
    default:
      break;
  }
  throw Error(ErrorCode::kNotTileable,
              std::string("no tiling for ") + lattice_kind_name(kind));
}

namespace {

struct PlaneRegion {
  std::vector<LatticePoint> tile;   // sorted
  std::vector<LatticePoint> slots;  // sorted
};

// Points strictly closer to the origin center than to any other center, and
// the plane neighbors of that region.
PlaneRegion voronoi_region(const TilingGeometry& geo, int d, int offset) {
  const auto& c = geo.centers;
  const int radius = std::max({c.p, c.r, std::abs(c.q)}) + 2;
  const int window = 4;
  auto present = [&](LatticePoint x) {
    return d < 2 || !(mod(x.a - offset, d) == 0 && mod(x.b - offset, d) == 0);
  };
  auto strictly_inside = [&](LatticePoint x) {
    const auto own = norm4(x.a - geo.origin.a, x.b - geo.origin.b);
    for (int i = -window; i <= window; ++i)
      for (int j = -window; j <= window; ++j) {
        if (i == 0 && j == 0) continue;
        const int ca = geo.origin.a + i * c.p + j * c.q;
        const int cb = geo.origin.b + j * c.r;
        if (norm4(x.a - ca, x.b - cb) <= own) return false;
      }
    return true;
  };
  PlaneRegion region;
  for (int b = geo.origin.b - radius; b <= geo.origin.b + radius; ++b)
    for (int a = geo.origin.a - 2 * radius; a <= geo.origin.a + 2 * radius; ++a) {
      LatticePoint x{a, b};
      if (present(x) && strictly_inside(x)) region.tile.push_back(x);
    }
  std::sort(region.tile.begin(), region.tile.end());
  std::set<LatticePoint> in(region.tile.begin(), region.tile.end());
  std::set<LatticePoint> slots;
  for (auto x : region.tile)
    for (auto y : plane_neighbors(d, offset, x))
      if (!in.count(y)) slots.insert(y);
  region.slots.assign(slots.begin(), slots.end());
  return region;
}

Tiling build_tiling(const PeriodicLattice& lat, const TilingGeometry& geo) {
  const auto& c = geo.centers;
  if (!c.contains(lat.periods))
    throw Error(ErrorCode::kNotTileable,
                "lattice periods are not tile translations");
  const auto region = voronoi_region(geo, lat.d, lat.offset);
  Tiling t;
  t.tile_points = region.tile;
  t.slot_points = region.slots;

  std::map<LatticePoint, int> local;
  for (std::size_t i = 0; i < region.tile.size(); ++i)
    local[region.tile[i]] = static_cast<int>(i);
  std::vector<Edge> tile_edges;
  for (std::size_t i = 0; i < region.tile.size(); ++i)
    for (auto y : plane_neighbors(lat.d, lat.offset, region.tile[i])) {
      auto it = local.find(y);
      if (it != local.end() && static_cast<int>(i) < it->second)
        tile_edges.emplace_back(static_cast<int>(i), it->second);
    }
  t.tile_graph = Graph(region.tile.size(), tile_edges);
  for (auto s : region.slots) {
    VertexSet nb(region.tile.size());
    for (auto y : plane_neighbors(lat.d, lat.offset, s)) {
      auto it = local.find(y);
      if (it != local.end()) nb.insert(it->second);
    }
    t.slot_neighbors.push_back(std::move(nb));
  }
  std::map<LatticePoint, int> orbit_ids;
  for (auto s : region.slots) {
    auto key = c.reduce(s);
    auto [it, fresh] = orbit_ids.emplace(key, static_cast<int>(orbit_ids.size()));
    t.slot_orbit.push_back(it->second);
  }
  t.orbit_count = static_cast<int>(orbit_ids.size());

  // Translations in L / P, row-major by reduced position.
  std::vector<LatticePoint> shifts;
  for (int j = 0; j < lat.periods.r / c.r; ++j)
    for (int i = 0; i < lat.periods.p / c.p; ++i)
      shifts.push_back(lat.periods.reduce({i * c.p + j * c.q, j * c.r}));
  std::sort(shifts.begin(), shifts.end(), [](LatticePoint x, LatticePoint y) {
    return std::pair(x.b, x.a) < std::pair(y.b, y.a);
  });

  const std::size_t n = lat.graph.vertex_count();
  VertexSet covered(n);
  for (auto s : shifts) {
    VertexSet tile_set(n);
    std::vector<int> ids;
    for (auto x : region.tile) {
      const int v = lat.vertex_of({x.a + s.a, x.b + s.b});
      if (covered.contains(v) || tile_set.contains(v))
        throw Error(ErrorCode::kNotTileable, "tiles overlap on this quotient");
      tile_set.insert(v);
      ids.push_back(v);
    }
    covered |= tile_set;
    std::vector<int> bd;
    for (auto x : region.slots) bd.push_back(lat.vertex_of({x.a + s.a, x.b + s.b}));
    t.tiles.push_back(std::move(tile_set));
    t.tile_vertices.push_back(std::move(ids));
    t.boundary.push_back(std::move(bd));
  }
  t.separator = covered.complement();
  for (const auto& bd : t.boundary)
    for (int u : bd)
      if (!t.separator.contains(u))
        throw Error(ErrorCode::kNotTileable, "tiles touch without a separator vertex");
  VertexSet touched(n);
  for (const auto& bd : t.boundary)
    for (int u : bd) touched.insert(u);
  if (touched != t.separator)
    throw Error(ErrorCode::kNotTileable, "separator vertex adjacent to no tile");
  // The quotient must not add edges inside a tile or between tiles.
  std::vector<int> owner(n, -1);
  for (std::size_t k = 0; k < t.tiles.size(); ++k)
    for (int v : t.tile_vertices[k]) owner[static_cast<std::size_t>(v)] = static_cast<int>(k);
  std::size_t inside = 0;
  for (auto [u, v] : lat.graph.edges()) {
    const int ou = owner[static_cast<std::size_t>(u)], ov = owner[static_cast<std::size_t>(v)];
    if (ou >= 0 && ov >= 0) {
      if (ou != ov) throw Error(ErrorCode::kNotTileable, "edge joins two tiles");
      ++inside;
    }
  }
  if (inside != t.tile_graph.edge_count() * t.tiles.size())
    throw Error(ErrorCode::kNotTileable, "quotient wraps a tile onto itself");
  return t;
}

}  // namespace

Tiling hexagon_tiling(const PeriodicLattice& lattice) {
  const auto& s = lattice.spec;
  if (s.kind != LatticeKind::kKagome)
    throw Error(ErrorCode::kNotTileable, "hexagon tiling needs a kagome lattice");
  if (s.n % 6 != 0 || s.m % 4 != 0)
    throw Error(ErrorCode::kNotTileable,
                "hexagon tiling needs 6 | n and 4 | m (got n=" + std::to_string(s.n) +
                    ", m=" + std::to_string(s.m) + ")");
  auto t = build_tiling(lattice, tiling_geometry(LatticeKind::kKagome));
  const std::size_t k = t.tiles.size();
  if (t.tile_graph.vertex_count() != 30 || t.slot_count() != 12 ||
      t.separator.count() != 6 * k || 36 * k != lattice.graph.vertex_count())
    throw Error(ErrorCode::kInternal, "hexagon tiling has unexpected shape");
  return t;
}

Tiling delta_tiling(const PeriodicLattice& lattice) {
  const auto kind = lattice.spec.kind;
  if (kind != LatticeKind::kDelta3 && kind != LatticeKind::kDelta4)
    throw Error(ErrorCode::kNotTileable, "delta tiling needs a delta lattice");
  return build_tiling(lattice, tiling_geometry(kind));
}

Tiling tile(const PeriodicLattice& lattice) {
  if (lattice.spec.kind == LatticeKind::kKagome) return hexagon_tiling(lattice);
  return delta_tiling(lattice);
}

bool is_tileable(const LatticeSpec& spec) {
  try {
    tile(generate(spec));
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotTileable || e.code() == ErrorCode::kDegenerateQuotient ||
        e.code() == ErrorCode::kIncompatibleDims)
      return false;
    throw;
  }
}

LatticeSpec smallest_tileable(LatticeKind kind, int max_period) {
  std::vector<LatticeSpec> specs;
  for (int n = 1; n <= max_period; ++n)
    for (int m = 1; m <= max_period; ++m) specs.push_back({kind, n, m});
  auto size = [](const LatticeSpec& s) { return std::int64_t{s.n} * s.m; };
  std::stable_sort(specs.begin(), specs.end(),
                   [&](const LatticeSpec& x, const LatticeSpec& y) { return size(x) < size(y); });
  for (const auto& s : specs)
    if (is_tileable(s)) return s;
  throw Error(ErrorCode::kNotTileable,
              std::string("no tileable ") + lattice_kind_name(kind) + " quotient found");
}

std::string geometry_digest(const Tiling& t) {
  std::ostringstream os;
  for (auto p : t.tile_points) os << p.a << ',' << p.b << ';';
  os << '|';
  for (std::size_t i = 0; i < t.slot_points.size(); ++i)
    os << t.slot_points[i].a << ',' << t.slot_points[i].b << ':' << t.slot_orbit[i] << ';';
  os << '|';
  for (auto [u, v] : t.tile_graph.edges()) os << u << '-' << v << ';';
  std::ostringstream hex;
  hex << std::hex;
  hex.width(16);
  hex.fill('0');
  hex << digest64(os.str());
  return hex.str();
}

// ---------------------------------------------------------------------------
// Template search

namespace {

struct Candidate {
  std::uint64_t sigma = 0;
  std::vector<int> transversal;
  std::vector<int> partners;
  std::uint64_t dominated_slots = 0;
};

// Independent sets of the tile that dominate it, bucketed by size.
std::vector<std::vector<std::uint64_t>> dominating_independent_sets(const Graph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<std::uint64_t> nb(n), closed(n);
  std::vector<int> last(n);
  for (int v = 0; v < n; ++v) {
    nb[v] = g.neighbors(v).low_word();
    closed[v] = nb[v] | (std::uint64_t{1} << v);
    last[v] = 63 - std::countl_zero(closed[v]);
  }
  // due[i]: vertices whose closed neighborhood ends at i.
  std::vector<std::uint64_t> due(n, 0);
  for (int v = 0; v < n; ++v) due[last[v]] |= std::uint64_t{1} << v;
  std::vector<std::vector<std::uint64_t>> out(n + 1);
  std::vector<std::uint64_t> stack;
  auto rec = [&](auto&& self, int i, std::uint64_t chosen, std::uint64_t blocked,
                 std::uint64_t dom) -> void {
    if (i > 0 && (due[i - 1] & ~dom)) return;
    if (i == n) {
      out[std::popcount(chosen)].push_back(chosen);
      return;
    }
    if (!((blocked >> i) & 1))
      self(self, i + 1, chosen | (std::uint64_t{1} << i), blocked | closed[i], dom | closed[i]);
    self(self, i + 1, chosen, blocked, dom);
  };
  if (n > 0) rec(rec, 0, 0, 0, 0);
  else out[0].push_back(0);
  return out;
}

std::vector<Candidate> candidates_for(const Tiling& t, const std::vector<std::uint64_t>& sigmas) {
  const Graph& g = t.tile_graph;
  const int n = static_cast<int>(g.vertex_count());
  std::vector<std::uint64_t> nb(n);
  for (int v = 0; v < n; ++v) nb[v] = g.neighbors(v).low_word();
  std::vector<Candidate> out;
  for (std::uint64_t sigma : sigmas) {
    std::vector<int> members;
    for (std::uint64_t rest = sigma; rest; rest &= rest - 1) members.push_back(std::countr_zero(rest));
    std::vector<int> partners(members.size());
    std::uint64_t dom_slots = 0;
    for (std::size_t j = 0; j < t.slot_count(); ++j)
      if (t.slot_neighbors[j].low_word() & sigma) dom_slots |= std::uint64_t{1} << j;
    auto rec = [&](auto&& self, std::size_t k, std::uint64_t used) -> void {
      if (k == members.size()) {
        out.push_back({sigma, members, partners, dom_slots});
        return;
      }
      const int v = members[k];
      for (std::uint64_t rest = nb[v] & ~sigma; rest; rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        // w sees only v inside sigma, and no earlier partner.
        if ((nb[w] & sigma) != (std::uint64_t{1} << v)) continue;
        if (((used >> w) & 1) || (nb[w] & used)) continue;
        partners[k] = w;
        self(self, k + 1, used | (std::uint64_t{1} << w));
      }
    };
    rec(rec, 0, 0);
  }
  std::sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.transversal, x.partners) < std::tie(y.transversal, y.partners);
  });
  return out;
}

bool is_transversal_of(std::uint64_t sigma, const Candidate& m) {
  for (std::size_t i = 0; i < m.transversal.size(); ++i) {
    const std::uint64_t e =
        (std::uint64_t{1} << m.transversal[i]) | (std::uint64_t{1} << m.partners[i]);
    if (std::popcount(sigma & e) != 1) return false;
  }
  return true;
}

TileTemplate to_template(char label, const Candidate& c) {
  TileTemplate tt;
  tt.label = label;
  tt.transversal = c.transversal;
  for (std::size_t i = 0; i < c.transversal.size(); ++i)
    tt.edges.emplace_back(c.transversal[i], c.partners[i]);
  return tt;
}

}  // namespace

TemplatePair search_tile_templates(const Tiling& t) {
  if (t.tile_graph.vertex_count() > 64 || t.slot_count() > 64)
    throw Error(ErrorCode::kResource, "tile too large for template search");
  std::vector<std::uint64_t> orbit_mask(static_cast<std::size_t>(t.orbit_count), 0);
  for (std::size_t j = 0; j < t.slot_count(); ++j)
    orbit_mask[static_cast<std::size_t>(t.slot_orbit[j])] |= std::uint64_t{1} << j;

  const auto by_size = dominating_independent_sets(t.tile_graph);
  TemplateSearchStats total;
  for (std::size_t s = by_size.size(); s-- > 1;) {
    if (by_size[s].empty()) continue;
    const auto cands = candidates_for(t, by_size[s]);
    TemplateSearchStats stats;
    stats.matching_size = s;
    stats.candidates = cands.size();
    for (const auto& a : cands)
      for (const auto& b : cands) {
        ++stats.pairs_tested;
        if (is_transversal_of(b.sigma, a)) {
          ++stats.failed_transversal;
          continue;
        }
        const std::uint64_t both = a.dominated_slots & b.dominated_slots;
        bool ok = true;
        for (auto mask : orbit_mask)
          if (!(both & mask)) {
            ok = false;
            break;
          }
        if (!ok) {
          ++stats.failed_domination;
          continue;
        }
        TemplatePair out{to_template('A', a), to_template('B', b), stats};
        for (auto mask : orbit_mask) {
          const int slot = std::countr_zero(both & mask);
          out.a.responsible.push_back(slot);
        }
        std::sort(out.a.responsible.begin(), out.a.responsible.end());
        out.b.responsible = out.a.responsible;
        return out;
      }
    total.pairs_tested += stats.pairs_tested;
    total.failed_transversal += stats.failed_transversal;
    total.failed_domination += stats.failed_domination;
    total.candidates += stats.candidates;
  }
  const char* reason = total.pairs_tested == 0 ? "no induced matching with a dominating transversal"
                       : total.failed_domination >= total.failed_transversal
                           ? "separator domination failed most often"
                           : "B transversal meets every edge of A most often";
  throw Error(ErrorCode::kNoTemplateFound,
              std::string("no tile template pair: ") + reason + " (" +
                  std::to_string(total.pairs_tested) + " pairs tested)");
}

MatchingWithTransversal family_from_assignment(const Tiling& t,
                                               const TemplatePair& templates,
                                               const std::string& word) {
  if (word.size() != t.tile_count())
    throw Error(ErrorCode::kInvalidInput, "assignment length differs from tile count");
  MatchingWithTransversal m;
  m.transversal = VertexSet(t.separator.universe());
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] != 'A' && word[i] != 'B')
      throw Error(ErrorCode::kInvalidInput, "assignment letters must be A or B");
    const auto& tt = word[i] == 'A' ? templates.a : templates.b;
    const auto& ids = t.tile_vertices[i];
    for (auto [v, w] : tt.edges) {
      m.edges.emplace_back(ids[static_cast<std::size_t>(v)], ids[static_cast<std::size_t>(w)]);
      m.transversal.insert(ids[static_cast<std::size_t>(v)]);
    }
  }
  return m;
}

std::vector<std::string> assignment_words(std::size_t k) {
  if (k > 24) throw Error(ErrorCode::kResource, "too many tiles for full assignment list");
  std::vector<std::string> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
    std::string w(k, 'A');
    for (std::size_t i = 0; i < k; ++i)
      if ((x >> (k - 1 - i)) & 1) w[i] = 'B';
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace indcomplex
