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

#include "majority/core.hpp"

#include <algorithm>
#include <string>

#include "majority/error.hpp"

namespace majority {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::optional<std::size_t> VertexSet::index_of(Vertex v) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

Digraph Digraph::build(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  for (const Edge& e : sorted) {
    if (e.tail >= n || e.head >= n) {
      fail(Errc::VertexOutOfRange, "edge (" + std::to_string(e.tail) + "," +
                                       std::to_string(e.head) + ") with n=" + std::to_string(n));
    }
    if (e.tail == e.head) fail(Errc::SelfLoop, "self-loop at vertex " + std::to_string(e.tail));
  }
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    fail(Errc::DuplicateEdge,
         "edge (" + std::to_string(dup->tail) + "," + std::to_string(dup->head) + ")");
  }

  Digraph g;
  g.n_ = n;
  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const Edge& e : sorted) {
    ++g.out_offsets_[e.tail + 1];
    ++g.in_offsets_[e.head + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.out_offsets_[v + 1] += g.out_offsets_[v];
    g.in_offsets_[v + 1] += g.in_offsets_[v];
  }
  g.out_targets_.resize(sorted.size());
  g.in_sources_.resize(sorted.size());
  std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  // sorted by (tail, head): out lists come out sorted, and in lists are filled
  // in increasing tail order, so they are sorted too.
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    g.out_targets_[i] = sorted[i].head;
    g.in_sources_[in_fill[sorted[i].head]++] = sorted[i].tail;
  }
  return g;
}

std::size_t Digraph::out_degree_within(Vertex v, const VertexSet& s) const {
  auto nbrs = out(v);
  return static_cast<std::size_t>(
      std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return s.contains(w); }));
}

bool Digraph::has_edge(Vertex tail, Vertex head) const {
  if (tail >= n_) return false;
  auto nbrs = out(tail);
  return std::binary_search(nbrs.begin(), nbrs.end(), head);
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  result.reserve(size());
  for (Vertex v = 0; v < n_; ++v) {
    for (Vertex w : out(v)) result.push_back({v, w});
  }
  return result;
}

ListAssignment::ListAssignment(std::vector<std::vector<Colour>> lists) : lists_(std::move(lists)) {
  if (lists_.empty()) fail(Errc::KTooSmall, "no vertices, k is undefined");
  k_ = SIZE_MAX;
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    auto& list = lists_[v];
    std::vector<Colour> seen;
    std::vector<Colour> kept;
    for (Colour c : list) {
      auto it = std::lower_bound(seen.begin(), seen.end(), c);
      if (it != seen.end() && *it == c) continue;
      seen.insert(it, c);
      kept.push_back(c);
    }
    list = std::move(kept);
    k_ = std::min(k_, list.size());
  }
  if (k_ < 2) fail(Errc::KTooSmall, "k=" + std::to_string(k_) + ", need k >= 2");
}

bool ListAssignment::contains(Vertex v, Colour c) const {
  return std::find(lists_[v].begin(), lists_[v].end(), c) != lists_[v].end();
}

bool Colouring::is_total() const {
  return std::all_of(colour_.begin(), colour_.end(), [](const auto& c) { return c.has_value(); });
}

std::vector<Vertex> Colouring::list_violations(const ListAssignment& lists) const {
  std::vector<Vertex> bad;
  for (Vertex v = 0; v < colour_.size(); ++v) {
    if (!colour_[v]) continue;
    if (v >= lists.order() || !lists.contains(v, *colour_[v])) bad.push_back(v);
  }
  return bad;
}

}  // namespace majority
