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

#ifndef INDCOMPLEX_IO_HPP
#define INDCOMPLEX_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "indcomplex/complex.hpp"
#include "indcomplex/cross_cycles.hpp"
#include "indcomplex/graph.hpp"

namespace indcomplex {

// Edge-list text: "n m", then m lines "u v", then optionally a line "coords"
// followed by n lines "x y" with rationals p/q (or integers). Blank lines and
// '#' comments are ignored. Throws Error(kParse) with a line number.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);  // kIo when unreadable

void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// One pair per line: "v1 w1 v2 w2 ..." with the transversal v1, v2, ...
std::vector<MatchingWithTransversal> parse_family(const std::string& text, std::size_t vertex_count);
std::string format_family(const std::vector<MatchingWithTransversal>& family);

Rational64 parse_rational(const std::string& token);
std::string format_rational(const Rational64& r);

// {"schema":1,"graph":{"n":..,"m":..},"betti":{"1":2},"total":..,
//  "witten_index":..,"f":[..]}
std::string betti_report_json(const Graph& g, std::uint64_t cap = kDefaultFaceCap,
                              const HomologyOptions& options = {});

}  // namespace indcomplex

#endif  // INDCOMPLEX_IO_HPP
