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

#include "indcomplex/io.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "indcomplex/error.hpp"
#include "json.hpp"

namespace indcomplex {
namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

// Next non-blank, non-comment line split into tokens; false at end of input.
bool next_tokens(std::istream& in, std::size_t& line_no, std::vector<std::string>& tokens) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    tokens.clear();
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (!tokens.empty()) return true;
  }
  return false;
}

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw Error(ErrorCode::kParse, "bad integer '" + s + "'");
  return v;
}

}  // namespace

Rational64 parse_rational(const std::string& token) {
  const auto slash = token.find('/');
  Rational64 r;
  r.num = parse_int(token.substr(0, slash));
  r.den = slash == std::string::npos ? 1 : parse_int(token.substr(slash + 1));
  if (r.den == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + token + "'");
  if (r.den < 0) {
    r.num = -r.num;
    r.den = -r.den;
  }
  const auto g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string format_rational(const Rational64& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

Graph read_edge_list(std::istream& in) {
  std::size_t line_no = 0;
  std::vector<std::string> tok;
  if (!next_tokens(in, line_no, tok)) parse_fail(line_no, "missing header 'n m'");
  if (tok.size() != 2) parse_fail(line_no, "header must be 'n m'");
  std::int64_t n, m;
  try {
    n = parse_int(tok[0]);
    m = parse_int(tok[1]);
  } catch (const Error& e) {
    parse_fail(line_no, e.what());
  }
  if (n < 0 || m < 0) parse_fail(line_no, "negative count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    if (!next_tokens(in, line_no, tok)) parse_fail(line_no, "expected " + std::to_string(m) + " edges");
    if (tok.size() != 2) parse_fail(line_no, "edge line must be 'u v'");
    std::int64_t u, v;
    try {
      u = parse_int(tok[0]);
      v = parse_int(tok[1]);
    } catch (const Error& e) {
      parse_fail(line_no, e.what());
    }
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::kInvalidVertex, "line " + std::to_string(line_no) + ": vertex out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  Graph g(static_cast<std::size_t>(n), edges);
  if (next_tokens(in, line_no, tok)) {
    if (tok.size() != 1 || tok[0] != "coords") parse_fail(line_no, "unexpected trailing content");
    std::vector<Coord> coords;
    for (std::int64_t i = 0; i < n; ++i) {
      if (!next_tokens(in, line_no, tok) || tok.size() != 2) parse_fail(line_no, "coordinate line must be 'x y'");
      try {
        coords.push_back(Coord{parse_rational(tok[0]), parse_rational(tok[1])});
      } catch (const Error& e) {
        parse_fail(line_no, e.what());
      }
    }
    if (next_tokens(in, line_no, tok)) parse_fail(line_no, "unexpected trailing content");
    g.set_coords(std::move(coords));
  }
  return g;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  if (g.coords()) {
    out << "coords\n";
    for (const auto& c : *g.coords()) out << format_rational(c.x) << ' ' << format_rational(c.y) << '\n';
  }
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  write_edge_list(out, g);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

std::vector<MatchingWithTransversal> parse_family(const std::string& text, std::size_t vertex_count) {
  std::istringstream in(text);
  std::size_t line_no = 0;
  std::vector<std::string> tok;
  std::vector<MatchingWithTransversal> out;
  while (next_tokens(in, line_no, tok)) {
    if (tok.size() % 2 != 0) parse_fail(line_no, "pair line needs an even number of ids");
    MatchingWithTransversal m{{}, VertexSet(vertex_count)};
    for (std::size_t i = 0; i < tok.size(); i += 2) {
      std::int64_t v, w;
      try {
        v = parse_int(tok[i]);
        w = parse_int(tok[i + 1]);
      } catch (const Error& e) {
        parse_fail(line_no, e.what());
      }
      const auto n = static_cast<std::int64_t>(vertex_count);
      if (v < 0 || w < 0 || v >= n || w >= n)
        throw Error(ErrorCode::kInvalidVertex, "line " + std::to_string(line_no) + ": vertex out of range");
      m.edges.emplace_back(static_cast<int>(v), static_cast<int>(w));
      m.transversal.insert(static_cast<int>(v));
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::string format_family(const std::vector<MatchingWithTransversal>& family) {
  std::ostringstream os;
  for (const auto& m : family) {
    bool first = true;
    for (auto [v, w] : m.edges) {
      // Transversal endpoint first.
      if (!m.transversal.contains(v)) std::swap(v, w);
      os << (first ? "" : " ") << v << ' ' << w;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

std::string betti_report_json(const Graph& g, std::uint64_t cap, const HomologyOptions& options) {
  const auto k = independence_complex(g, cap);
  const auto b = betti_numbers(k, options);
  nlohmann::json betti = nlohmann::json::object();
  for (auto [d, v] : b.values()) betti[std::to_string(d)] = v;
  nlohmann::json out = {{"schema", 1},
                        {"graph", {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"has_coords", g.coords().has_value()}}},
                        {"betti", betti},
                        {"total", b.total()},
                        {"witten_index", witten_index(k)},
                        {"f", f_polynomial(k)}};
  if (witten_index(b) != out["witten_index"].get<std::int64_t>())
    throw Error(ErrorCode::kInternal, "Euler characteristic mismatch between faces and Betti numbers");
  return out.dump(2);
}

}  // namespace indcomplex
