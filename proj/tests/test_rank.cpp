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

#include "doctest.h"
#include "indcomplex/rank.hpp"
#include "support.hpp"

using namespace indcomplex;

namespace {

SparseIntMatrix sparse(const std::vector<std::vector<std::int64_t>>& dense) {
  SparseIntMatrix m;
  m.rows = dense.size();
  const std::size_t cols = dense.empty() ? 0 : dense[0].size();
  m.columns.resize(cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < m.rows; ++r)
      if (dense[r][c]) m.columns[c].emplace_back(static_cast<std::uint32_t>(r), dense[r][c]);
  return m;
}

std::vector<std::vector<mpq_class>> to_q(const std::vector<std::vector<std::int64_t>>& d) {
  std::vector<std::vector<mpq_class>> q;
  for (const auto& row : d) {
    q.emplace_back();
    for (auto x : row) q.back().push_back(mpq_class(static_cast<long>(x)));
  }
  return q;
}

}  // namespace

TEST_CASE("exact rank against dense rational elimination") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    std::vector<std::vector<std::int64_t>> d(rows, std::vector<std::int64_t>(cols, 0));
    for (auto& row : d)
      for (auto& x : row)
        if (rng() % 3 == 0) x = static_cast<std::int64_t>(rng() % 7) - 3;
    const auto want = oracle::rank_q(to_q(d));
    CHECK(exact_rank(sparse(d)).rank == want);
    CHECK(rational_rank(to_q(d)) == want);
    CHECK(rank_mod_p(sparse(d), 1000000007u).rank == want);
  }
}

TEST_CASE("large entries fall back to big integers") {
  const std::int64_t big = std::int64_t{1} << 40;
  std::vector<std::vector<std::int64_t>> d = {
      {big, big + 1, 3}, {big - 1, big, 5}, {7, big - 3, big}, {big, 2, big + 7}};
  const auto r = exact_rank(sparse(d));
  CHECK(r.rank == oracle::rank_q(to_q(d)));
}

TEST_CASE("solve over the rationals") {
  std::vector<std::vector<BigRational>> a = {{1, 0}, {1, 1}};
  std::vector<BigRational> x;
  REQUIRE(solve_rational(a, {-1, 0}, x));
  CHECK(x[0] == -1);
  CHECK(x[1] == 1);
  std::vector<std::vector<BigRational>> singular = {{1, 2}, {2, 4}};
  CHECK_FALSE(solve_rational(singular, {1, 2}, x));
}
