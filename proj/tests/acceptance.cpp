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

// One line per acceptance criterion. Exit status is 0 when every criterion
// passes, or, with --expect-fail N,M,..., when exactly the listed ones fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "indcomplex/bounds.hpp"
#include "indcomplex/complex.hpp"
#include "indcomplex/cross_cycles.hpp"
#include "indcomplex/lattice.hpp"
#include "indcomplex/splitting.hpp"
#include "support.hpp"

using namespace indcomplex;

namespace {

// Rates: six decimals, one unit in the last place either way.
constexpr double kRateTolerance = 1e-6 + 1e-12;

// Wall-clock budgets in seconds.
constexpr double kBudget[10] = {0, 1, 600, 60, 30, 120, 60, 60, 120, 600};

constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

std::string fmt6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

bool rate_close(const std::string& computed, double oracle) {
  return std::fabs(std::stod(computed) - oracle) <= kRateTolerance;
}

Outcome c6_suite() {
  Outcome o;
  const auto g = oracle::cycle(6);
  const auto b = betti_numbers(independence_complex(g));
  const MatchingWithTransversal m1{{{0, 1}, {3, 4}}, oracle::set_of(6, {0, 3})};
  const MatchingWithTransversal m2{{{1, 2}, {4, 5}}, oracle::set_of(6, {1, 4})};
  const MatchingWithTransversal m3{{{2, 3}, {5, 0}}, oracle::set_of(6, {2, 5})};
  const int p11 = pairing_value(m1.transversal, m1.edges).value;
  const int p22 = pairing_value(m2.transversal, m2.edges).value;
  const int p12 = pairing_value(m1.transversal, m2.edges).value;
  const int p21 = pairing_value(m2.transversal, m1.edges).value;
  const auto x = express_in_basis(m3, {m1, m2});
  o.pass = b.values() == std::map<int, std::uint64_t>{{1, 2}} && oracle::betti(g) == b.values() &&
           p11 == 1 && p22 == 1 && p12 == 0 && p21 == 1 && x.size() == 2 && x[0] == -1 && x[1] == 1;
  std::ostringstream d;
  d << "betti_1=" << b[1] << " pairings " << p11 << "," << p22 << "," << p12 << "," << p21
    << " a_M3=(" << x[0].get_str() << "," << x[1].get_str() << ")";
  o.detail = d.str();
  return o;
}

Outcome kagome_residuals() {
  Outcome o;
  const auto t = tile(gen_kagome(6, 4));
  const auto table = residual_class_table(t);
  const auto& arg = table.classes[table.argmax_class];
  const bool attained = arg.total == 14 && oracle::total(oracle::betti(arg.representative)) == 14;
  o.pass = table.enumerated == 4096 && table.classes.size() == 217 && table.max_total == 14 && attained;
  std::ostringstream d;
  d << "enumerated " << table.enumerated << " (want 4096), classes " << table.classes.size()
    << " (want 217), max " << table.max_total << " (want 14), attained " << (attained ? "yes" : "no")
    << ", geometry digest " << table.geometry_digest;
  o.detail = d.str();
  return o;
}

Outcome kagome_bounds() {
  Outcome o;
  const auto lb = lattice_bounds({LatticeKind::kKagome, 6, 4}, BoundMode::kBoth);
  const double lower_oracle = std::pow(2.0, 72.0 / 36.0 / 72.0);
  const double upper_oracle = std::pow(14.0, 1.0 / 36.0) * std::pow(2.0, 1.0 / 6.0);
  const auto rank = lb.lower->raw.value();
  o.pass = lb.vertices == 72 && rank == 4 && lb.upper->raw.to_string() == "14^2*2^12" &&
           rate_close(lb.lower->rate_6dp, lower_oracle) && rate_close(lb.upper->rate_6dp, upper_oracle) &&
           std::stod(lb.lower->rate_6dp) < std::stod(lb.upper->rate_6dp);
  o.detail = "rank " + rank.get_str() + " (want 4), upper " + lb.upper->raw.to_string() +
             ", rates " + lb.lower->rate_6dp + " / " + lb.upper->rate_6dp + " (oracle " +
             fmt6(lower_oracle) + " / " + fmt6(upper_oracle) + ")";
  return o;
}

Outcome forests() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 4);
  std::size_t within = 0;
  for (int i = 0; i < 200; ++i) {
    const auto f = oracle::random_forest(rng, 1 + rng() % 20);
    if (!is_forest(f)) return {false, "generator produced a cycle"};
    if (betti_numbers(independence_complex(f)).total() <= 1) ++within;
  }
  o.pass = within == 200;
  o.detail = std::to_string(within) + "/200 forests with total Betti <= 1";
  return o;
}

Outcome filtration() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 5);
  std::size_t held = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 14;
    const auto g = oracle::random_graph(rng, n, 0.15 + 0.5 * (rng() % 100) / 100.0);
    const auto u = oracle::random_subset(rng, n, 0.3);
    const BigInt actual(static_cast<unsigned long>(betti_numbers(independence_complex(g)).total()));
    if (actual <= upper_bound(g, u).bound) ++held;
  }
  o.pass = held == 200;
  o.detail = std::to_string(held) + "/200 graphs within B*|I(G[U])|";
  return o;
}

Outcome joins() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 6);
  std::size_t held = 0;
  for (int i = 0; i < 100; ++i) {
    const auto a = oracle::random_graph(rng, rng() % 11, 0.2 + 0.4 * (rng() % 100) / 100.0);
    const auto b = oracle::random_graph(rng, rng() % 11, 0.2 + 0.4 * (rng() % 100) / 100.0);
    const auto direct = betti_numbers(independence_complex(disjoint_union(a, b)));
    const auto joined = join_betti(betti_numbers(independence_complex(a)), betti_numbers(independence_complex(b)));
    if (direct == joined) ++held;
  }
  o.pass = held == 100;
  o.detail = std::to_string(held) + "/100 unions equal the join, degreewise";
  return o;
}

Outcome splitting_ledger() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 7);
  std::size_t tested = 0, held = 0;
  while (tested < 50) {
    const auto g = oracle::random_graph(rng, 2 + rng() % 11, 0.2 + 0.4 * (rng() % 100) / 100.0);
    const auto pairs = find_matching_pairs(g, 1);
    if (pairs.empty()) continue;
    if (!validate_pair(g, pairs[0]).ok()) return {false, "pair search returned an invalid pair"};
    ++tested;
    VertexSet h(g.vertex_count());
    for (auto [a, b] : pairs[0].edges) {
      h.insert(a);
      h.insert(b);
    }
    const auto before = betti_numbers(independence_complex(g)).total();
    const auto after = betti_numbers(independence_complex(cofibre_graph(g, h))).total();
    if (before == 1 + after) ++held;
  }
  const auto c6 = oracle::cycle(6);
  const MatchingWithTransversal m1{{{0, 1}, {3, 4}}, oracle::set_of(6, {0, 3})};
  const MatchingWithTransversal m2{{{1, 2}, {4, 5}}, oracle::set_of(6, {1, 4})};
  SplittingOptions so;
  so.try_reorder = false;
  const auto trace = splitting_trace(c6, {m2, m1}, so);
  const bool c6_ok = trace.steps.size() == 2 && trace.final_betti == 0u && trace.ledger_ok;
  o.pass = held == 50 && c6_ok;
  o.detail = std::to_string(held) + "/50 ledgers exact; hexagon trace peeled " +
             std::to_string(trace.steps.size()) + " spheres, final total " +
             (trace.final_betti ? std::to_string(*trace.final_betti) : "n/a");
  return o;
}

Outcome absolute_bound() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 8);
  std::size_t held = 0;
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 18;
    const auto g = oracle::random_graph(rng, n, 0.15 + 0.5 * (rng() % 100) / 100.0);
    const auto t = betti_numbers(independence_complex(g)).total();
    // t <= 2^(2n/5)  <=>  t^5 <= 2^(2n)
    BigInt t5 = BigInt(static_cast<unsigned long>(t));
    mpz_pow_ui(t5.get_mpz_t(), t5.get_mpz_t(), 5);
    BigInt cap;
    mpz_ui_pow_ui(cap.get_mpz_t(), 2, 2 * n);
    if (t5 <= cap) ++held;
    worst = std::max(worst, static_cast<double>(t) / std::pow(2.0, 0.4 * static_cast<double>(n)));
  }
  o.pass = held == 200;
  o.detail = std::to_string(held) + "/200 graphs within 2^(2v/5); largest ratio " + fmt6(worst);
  return o;
}

Outcome delta_bounds() {
  Outcome o;
  std::ostringstream d;
  for (int dd : {3, 4}) {
    const auto kind = dd == 3 ? LatticeKind::kDelta3 : LatticeKind::kDelta4;
    const auto lb = lattice_bounds(smallest_tileable(kind), BoundMode::kBoth);
    const std::uint64_t v = lb.vertices;
    const std::uint64_t per = dd == 3 ? 8 : 45;
    if (v % per != 0) return {false, "vertex count " + std::to_string(v) + " not divisible"};
    const ProductForm lower({Factor{BigInt(2), v / per}});
    const ProductForm upper = dd == 3 ? ProductForm({Factor{BigInt(2), 3 * v / 8}})
                                      : ProductForm({Factor{BigInt(10), v / 45}, Factor{BigInt(2), v / 5}});
    const double lower_oracle = dd == 3 ? std::pow(2.0, 1.0 / 8) : std::pow(2.0, 1.0 / 45);
    const double upper_oracle =
        dd == 3 ? std::pow(2.0, 3.0 / 8) : std::pow(10.0, 1.0 / 45) * std::pow(2.0, 1.0 / 5);
    const bool ok = lb.lower->raw.to_string() == lower.to_string() &&
                    lb.upper->raw.to_string() == upper.to_string() &&
                    rate_close(lb.lower->rate_6dp, lower_oracle) && rate_close(lb.upper->rate_6dp, upper_oracle);
    o.pass = o.pass && ok;
    d << "delta" << dd << " v=" << v << " lower " << lb.lower->raw.to_string() << " (want " << lower.to_string()
      << ", rate " << lb.lower->rate_6dp << ") upper " << lb.upper->raw.to_string() << " (want "
      << upper.to_string() << ", rate " << lb.upper->rate_6dp << ")" << (dd == 3 ? "; " : "");
  }
  o.detail = d.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string tok; std::getline(ss, tok, ',');) expected_failures.insert(std::stoi(tok));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N,M,...]\n";
      return 2;
    }
  }
  const std::function<Outcome()> criteria[] = {c6_suite,  kagome_residuals, kagome_bounds,
                                              forests,   filtration,       joins,
                                              splitting_ledger, absolute_bound, delta_bounds};
  std::set<int> failed;
  for (int k = 1; k <= 9; ++k) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[k - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs <= kBudget[k];
    const bool pass = o.pass && in_time;
    if (!pass) failed.insert(k);
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, kBudget[k]);
    std::cout << "criterion " << k << ": " << (pass ? "PASS" : "FAIL") << "  " << o.detail << "  ["
              << timing << (in_time ? "" : ", over budget") << "]" << std::endl;
  }
  std::cout << (9 - failed.size()) << "/9 criteria pass" << std::endl;
  if (!expected_failures.empty()) {
    const bool as_expected = failed == expected_failures;
    std::cout << (as_expected ? "failures match the documented list" : "failures differ from the documented list")
              << std::endl;
    return as_expected ? 0 : 1;
  }
  return failed.empty() ? 0 : 1;
}
