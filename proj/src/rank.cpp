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

#include "indcomplex/rank.hpp"

#include <algorithm>
#include <numeric>

#include "indcomplex/error.hpp"

namespace indcomplex {
namespace {

struct Overflow {};

// Integer coefficients in 64 bits; any overflow aborts the pass.
struct Int64Ring {
  using Value = std::int64_t;
  static constexpr bool kField = false;

  static Value from(std::int64_t v) { return v; }
  static bool is_zero(const Value& v) { return v == 0; }
  static bool is_unit(const Value& v) { return v == 1 || v == -1; }
  static Value mul(const Value& a, const Value& b) {
    Value r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Value add(const Value& a, const Value& b) {
    Value r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Value neg(const Value& a) {
    if (a == INT64_MIN) throw Overflow{};
    return -a;
  }
  static Value gcd(const Value& a, const Value& b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
  }
  static Value div(const Value& a, const Value& b) { return a / b; }
};

struct BigRing {
  using Value = BigInt;
  static constexpr bool kField = false;

  static Value from(std::int64_t v) { return BigInt(static_cast<long>(v)); }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static bool is_unit(const Value& v) { return v == 1 || v == -1; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value neg(const Value& a) { return -a; }
  static Value gcd(const Value& a, const Value& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static Value div(const Value& a, const Value& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

struct ModField {
  using Value = std::uint64_t;
  static constexpr bool kField = true;
  std::uint64_t p;

  bool is_zero(Value v) const { return v == 0; }
  Value from(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p);
    return static_cast<Value>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  Value mul(Value a, Value b) const { return a * b % p; }
  Value add(Value a, Value b) const { return (a + b) % p; }
  Value neg(Value a) const { return a == 0 ? 0 : p - a; }
  Value inv(Value a) const {
    Value result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
};

template <class V>
struct Column {
  std::vector<std::uint32_t> rows;
  std::vector<V> vals;
  bool empty() const { return rows.empty(); }
  std::uint32_t low() const { return rows.back(); }
  const V& low_value() const { return vals.back(); }
};

// out = x*c + y*p, dropping zeros.
template <class Ring, class V>
void combine(const Ring& ring, const Column<V>& c, const V& x,
             const Column<V>& p, const V& y, Column<V>& out) {
  out.rows.clear();
  out.vals.clear();
  std::size_t i = 0, j = 0;
  while (i < c.rows.size() || j < p.rows.size()) {
    if (j == p.rows.size() || (i < c.rows.size() && c.rows[i] < p.rows[j])) {
      out.rows.push_back(c.rows[i]);
      out.vals.push_back(ring.mul(x, c.vals[i]));
      ++i;
    } else if (i == c.rows.size() || p.rows[j] < c.rows[i]) {
      out.rows.push_back(p.rows[j]);
      out.vals.push_back(ring.mul(y, p.vals[j]));
      ++j;
    } else {
      V v = ring.add(ring.mul(x, c.vals[i]), ring.mul(y, p.vals[j]));
      if (!ring.is_zero(v)) {
        out.rows.push_back(c.rows[i]);
        out.vals.push_back(std::move(v));
      }
      ++i;
      ++j;
    }
  }
}

template <class Ring>
void divide_content(const Ring& ring, Column<typename Ring::Value>& c) {
  using V = typename Ring::Value;
  V g = ring.from(0);
  for (const auto& v : c.vals) {
    g = ring.gcd(g, v);
    if (ring.is_unit(g)) return;
  }
  if (ring.is_zero(g)) return;
  for (auto& v : c.vals) v = ring.div(v, g);
}

template <class Ring>
RankResult reduce(const Ring& ring, const SparseIntMatrix& m,
                  const std::vector<bool>& skip) {
  using V = typename Ring::Value;
  RankResult result;
  std::vector<std::int64_t> pivot_of(m.rows, -1);
  std::vector<Column<V>> reduced;
  Column<V> c, scratch;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!skip.empty() && skip[j]) continue;
    c.rows.clear();
    c.vals.clear();
    for (const auto& [row, value] : m.columns[j]) {
      c.rows.push_back(row);
      c.vals.push_back(ring.from(value));
    }
    while (!c.empty()) {
      const auto r = c.low();
      if (pivot_of[r] < 0) break;
      const auto& p = reduced[static_cast<std::size_t>(pivot_of[r])];
      const V& a = c.low_value();
      const V& b = p.low_value();
      if constexpr (Ring::kField) {
        combine(ring, c, ring.from(1), p, ring.neg(ring.mul(a, ring.inv(b))),
                scratch);
        std::swap(c, scratch);
      } else if (ring.is_unit(b)) {
        // b^-1 == b for units.
        combine(ring, c, ring.from(1), p, ring.neg(ring.mul(a, b)), scratch);
        std::swap(c, scratch);
      } else {
        V g = ring.gcd(a, b);
        combine(ring, c, ring.div(b, g), p, ring.neg(ring.div(a, g)), scratch);
        std::swap(c, scratch);
        divide_content(ring, c);
      }
    }
    if (!c.empty()) {
      pivot_of[c.low()] = static_cast<std::int64_t>(reduced.size());
      result.pivot_rows.push_back(c.low());
      reduced.push_back(std::move(c));
      c = Column<V>{};
    }
  }
  result.rank = reduced.size();
  return result;
}

void check_matrix(const SparseIntMatrix& m, const std::vector<bool>& skip) {
  if (!skip.empty() && skip.size() != m.cols())
    throw Error(ErrorCode::kInvalidInput, "skip mask size mismatch");
  for (const auto& col : m.columns)
    for (std::size_t i = 0; i < col.size(); ++i)
      if (col[i].first >= m.rows || col[i].second == 0 ||
          (i > 0 && col[i - 1].first >= col[i].first))
        throw Error(ErrorCode::kInvalidInput, "malformed sparse column");
}

}  // namespace

RankResult exact_rank(const SparseIntMatrix& m, const std::vector<bool>& skip) {
  check_matrix(m, skip);
  try {
    return reduce(Int64Ring{}, m, skip);
  } catch (const Overflow&) {
    auto result = reduce(BigRing{}, m, skip);
    result.used_bigint = true;
    return result;
  }
}

RankResult rank_mod_p(const SparseIntMatrix& m, std::uint32_t p,
                      const std::vector<bool>& skip) {
  check_matrix(m, skip);
  if (p < 2) throw Error(ErrorCode::kInvalidInput, "modulus must be prime");
  return reduce(ModField{p}, m, skip);
}

std::size_t rational_rank(std::vector<std::vector<BigRational>> rows) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][col]) == 0) continue;
      BigRational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < ncols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool solve_rational(std::vector<std::vector<BigRational>> a,
                    std::vector<BigRational> b, std::vector<BigRational>& x) {
  const std::size_t n = a.size();
  if (b.size() != n)
    throw Error(ErrorCode::kInvalidInput, "right-hand side size mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw Error(ErrorCode::kInvalidInput, "matrix is not square");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      BigRational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, BigRational(0));
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

}  // namespace indcomplex
