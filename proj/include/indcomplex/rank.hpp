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

#ifndef INDCOMPLEX_RANK_HPP
#define INDCOMPLEX_RANK_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace indcomplex {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Column-major sparse integer matrix. Each column holds (row, value) pairs
/// sorted by row with no zero values.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;

  std::size_t cols() const noexcept { return columns.size(); }
};

struct RankResult {
  std::size_t rank = 0;
  // Lowest row index of every nonzero reduced column. Feeds the clearing
  // step of the next lower boundary map.
  std::vector<std::uint32_t> pivot_rows;
  // True when 64-bit arithmetic overflowed and the exact pass was rerun with
  // arbitrary-precision integers.
  bool used_bigint = false;
};

/// Exact rank over the rationals by fraction-free column elimination. Columns
/// flagged in `skip` are known to reduce to zero and are not processed.
RankResult exact_rank(const SparseIntMatrix& m,
                      const std::vector<bool>& skip = {});

// Rank over Z/p for a prime p < 2^31.
RankResult rank_mod_p(const SparseIntMatrix& m, std::uint32_t p,
                      const std::vector<bool>& skip = {});

// Dense rational rank (Gaussian elimination over Q).
std::size_t rational_rank(std::vector<std::vector<BigRational>> rows);

// Solves a·x = b over Q for square a. Returns false when a is singular.
bool solve_rational(std::vector<std::vector<BigRational>> a,
                    std::vector<BigRational> b, std::vector<BigRational>& x);

}  // namespace indcomplex

#endif  // INDCOMPLEX_RANK_HPP
