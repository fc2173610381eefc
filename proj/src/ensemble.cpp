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

#include "majority/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>
#include <vector>

#include "majority/error.hpp"
#include "majority/generators.hpp"
#include "majority/random.hpp"
#include "majority/solver.hpp"
#include "majority/verifier.hpp"

namespace majority {

EnsembleInstance soundness_instance(std::uint64_t base_seed, std::size_t index) {
  static const Rational kDensities[] = {ratio(1, 20), ratio(1, 5), ratio(1, 2)};
  Rng rng(mix_seed(base_seed, index));
  const std::size_t n = rng.between(1, 60);
  const Rational& p = kDensities[rng.below(3)];
  const std::size_t k = rng.between(2, 8);
  const std::uint64_t graph_seed = rng.next();
  const std::uint64_t list_seed = rng.next();
  return {index, n, p, k, gen_random_digraph(n, p, graph_seed),
          gen_lists(n, k, 2 * k, ListMode::random, list_seed)};
}

BenchSummary run_soundness_suite(std::size_t count, std::uint64_t base_seed, unsigned threads,
                                 Arithmetic arithmetic) {
  const auto start = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  BenchSummary summary;
  summary.instances = count;

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const EnsembleInstance inst = soundness_instance(base_seed, i);
      SolvePolicy policy;
      policy.arithmetic = arithmetic;
      bool ok = false;
      std::uint64_t steps = 0;
      try {
        const SolveResult result = solve(inst.graph, inst.lists, policy);
        ok = verify(inst.graph, result.colouring, ratio(2, inst.k), &inst.lists).ok;
        for (auto s : result.report.recolour_steps) steps = std::max(steps, s);
      } catch (const Error&) {
        ok = false;
      }
      std::lock_guard lock(mu);
      summary.passed += ok ? 1 : 0;
      summary.max_steps = std::max(summary.max_steps, steps);
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace majority
