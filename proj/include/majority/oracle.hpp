// Copyright 2026 The Majority Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

#include "majority/core.hpp"
#include "majority/rational.hpp"

namespace majority {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct OracleResult {
  /// min over L-colourings of max_v f(v)
  Rational opt;
  /// Lexicographically first optimal colouring (vertex 0 most significant,
  /// colours compared numerically).
  Colouring witness;
  /// Complete colourings reached by the search; pruned branches not counted.
  std::uint64_t enumerated = 0;
};

/// Exhaustive depth-first search with pruning on the running max f-value.
/// Throws Error(BudgetExceeded) if the product of list sizes exceeds budget.
OracleResult oracle_min_max_f(const Digraph& g, const ListAssignment& lists,
                              std::uint64_t budget = kDefaultOracleBudget);

/// Product of list sizes, saturating at UINT64_MAX.
std::uint64_t colouring_count(const ListAssignment& lists);

}  // namespace majority
