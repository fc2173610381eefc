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

#include <cstddef>
#include <cstdint>

#include "majority/core.hpp"
#include "majority/rational.hpp"
#include "majority/stationary.hpp"

namespace majority {

/// One member of the random soundness ensemble: n in [1, 60],
/// p in {1/20, 1/5, 1/2}, k in [2, 8], random k-lists from a 2k palette.
struct EnsembleInstance {
  std::size_t index = 0;
  std::size_t n = 0;
  Rational p;
  std::size_t k = 0;
  Digraph graph;
  ListAssignment lists;
};

inline constexpr std::uint64_t kDefaultEnsembleSeed = 20261016;

EnsembleInstance soundness_instance(std::uint64_t base_seed, std::size_t index);

struct BenchSummary {
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::uint64_t max_steps = 0;  // largest per-component step count seen
  double wall_seconds = 0.0;
};

/// Solves and verifies instances 0..count-1 at eta = 2/k. Instances are
/// independent and may be spread over `threads` workers.
BenchSummary run_soundness_suite(std::size_t count, std::uint64_t base_seed, unsigned threads,
                                 Arithmetic arithmetic);

}  // namespace majority
