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

#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "indcomplex/error.hpp"
#include "indcomplex/io.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace indcomplex;

TEST_CASE("edge list round trip") {
  const std::string text = "# hexagon\n6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
  const auto g = parse_edge_list(text);
  CHECK(g == oracle::cycle(6));
  CHECK(parse_edge_list(format_edge_list(g)) == g);
}

TEST_CASE("coordinates") {
  const auto g = parse_edge_list("2 1\n0 1\ncoords\n0 0\n1/2 -3/6\n");
  REQUIRE(g.coords());
  CHECK((*g.coords())[1].x == Rational64{1, 2});
  CHECK((*g.coords())[1].y == Rational64{-1, 2});
  const auto again = parse_edge_list(format_edge_list(g));
  CHECK(again.coords() == g.coords());
  CHECK(format_rational({3, 1}) == "3");
  CHECK(format_rational({-7, 2}) == "-7/2");
}

TEST_CASE("parse errors carry line numbers") {
  auto message = [](const std::string& text) {
    try {
      (void)parse_edge_list(text);
    } catch (const Error& e) {
      return std::pair{e.code(), std::string(e.what())};
    }
    return std::pair{ErrorCode::kInternal, std::string()};
  };
  CHECK(message("").first == ErrorCode::kParse);
  CHECK(message("3 2\n0 1\n").second.find("line 2") != std::string::npos);
  CHECK(message("3 1\n0 x\n").first == ErrorCode::kParse);
  CHECK(message("3 1\n0 3\n").first == ErrorCode::kInvalidVertex);
  CHECK(message("2 1\n0 1\ncoords\n0 0\n").first == ErrorCode::kParse);
  CHECK(message("2 1\n0 1\ncoords\n0 0\n1/0 1\n").first == ErrorCode::kParse);
  CHECK(message("2 1\n0 1\nextra\n").first == ErrorCode::kParse);
  CHECK(message("2 1\n1 1\n").first == ErrorCode::kInvalidInput);
}

TEST_CASE("files") {
  const std::string path = "io_roundtrip_test.txt";
  write_edge_list_file(path, oracle::cycle(5));
  CHECK(read_edge_list_file(path) == oracle::cycle(5));
  std::remove(path.c_str());
  try {
    (void)read_edge_list_file("/nonexistent/dir/graph.txt");
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
}

TEST_CASE("family text") {
  const auto fam = parse_family("1 2 4 5\n0 1 3 4\n", 6);
  REQUIRE(fam.size() == 2);
  CHECK(fam[0].edges == std::vector<Edge>{{1, 2}, {4, 5}});
  CHECK(fam[0].transversal == oracle::set_of(6, {1, 4}));
  CHECK(format_family(fam) == "1 2 4 5\n0 1 3 4\n");
  CHECK_THROWS_AS(parse_family("1 2 4\n", 6), Error);
  CHECK_THROWS_AS(parse_family("1 9\n", 6), Error);
}

TEST_CASE("Betti report") {
  const auto j = nlohmann::json::parse(betti_report_json(oracle::cycle(6)));
  CHECK(j["schema"] == 1);
  CHECK(j["graph"]["n"] == 6);
  CHECK(j["betti"]["1"] == 2);
  CHECK(j["total"] == 2);
  CHECK(j["witten_index"] == 2);
  CHECK(j["f"] == nlohmann::json::array({1, 6, 9, 2}));
  const auto e = nlohmann::json::parse(betti_report_json(Graph(0)));
  CHECK(e["betti"]["-1"] == 1);
}
