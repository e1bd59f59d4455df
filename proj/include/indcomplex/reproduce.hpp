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

#ifndef INDCOMPLEX_REPRODUCE_HPP
#define INDCOMPLEX_REPRODUCE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "indcomplex/graph.hpp"

namespace indcomplex {

inline constexpr std::uint64_t kDefaultSeed = 1;

struct ReproduceOptions {
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  std::uint64_t cap_faces = kDefaultFaceCap;
  std::function<void(const std::string&)> log;  // progress lines, optional
};

struct ReproduceCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct ReproduceResult {
  std::string target;
  std::vector<ReproduceCheck> checks;
  std::vector<std::string> notes;    // computed facts worth printing
  std::vector<std::string> context;  // literature values, never computed
  bool ok() const;
};

const std::vector<std::string>& reproduce_targets();

// Throws Error(kInvalidInput) for an unknown target; check failures are
// recorded, not thrown.
ReproduceResult reproduce(const std::string& target, const ReproduceOptions& options = {});

std::string reproduce_text(const ReproduceResult& r);
std::string reproduce_json(const ReproduceResult& r);

}  // namespace indcomplex

#endif  // INDCOMPLEX_REPRODUCE_HPP
