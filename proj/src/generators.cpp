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

#include "majority/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "majority/error.hpp"
#include "majority/random.hpp"

namespace majority {

Digraph gen_regular_tournament(std::size_t n) {
  if (n < 3 || n % 2 == 0) {
    fail(Errc::NNotOdd, "regular tournament needs odd n >= 3, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= (n - 1) / 2; ++j) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + j) % n)});
    }
  }
  return Digraph::build(n, edges);
}

Digraph gen_random_digraph(std::size_t n, const Rational& p, std::uint64_t seed) {
  if (p < 0 || p > 1) fail(Errc::InvalidArgument, "edge probability " + to_pq(p) + " not in [0,1]");
  if (!p.get_den().fits_ulong_p()) {
    fail(Errc::InvalidArgument, "edge probability denominator too large");
  }
  const std::uint64_t num = p.get_num().get_ui();
  const std::uint64_t den = p.get_den().get_ui();
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.bernoulli(num, den)) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return Digraph::build(n, edges);
}

ListAssignment gen_lists(std::size_t n, std::size_t k, std::size_t palette, ListMode mode,
                         std::uint64_t seed) {
  if (k < 2) fail(Errc::KTooSmall, "k=" + std::to_string(k) + ", need k >= 2");
  if (palette < k) {
    fail(Errc::PaletteTooSmall,
         "palette " + std::to_string(palette) + " smaller than k=" + std::to_string(k));
  }
  std::vector<std::vector<Colour>> lists(n);
  if (mode == ListMode::identical) {
    std::vector<Colour> base(k);
    std::iota(base.begin(), base.end(), Colour{1});
    std::fill(lists.begin(), lists.end(), base);
    return ListAssignment(std::move(lists));
  }
  Rng rng(seed);
  std::vector<Colour> pool(palette);
  for (auto& list : lists) {
    std::iota(pool.begin(), pool.end(), Colour{1});
    // partial Fisher-Yates: the first k slots become a uniform k-subset
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + rng.below(palette - i)]);
    }
    list.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(list.begin(), list.end());
  }
  return ListAssignment(std::move(lists));
}

}  // namespace majority
