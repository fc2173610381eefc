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

#include "majority/scc.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

namespace majority {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

// Iterative Tarjan. Returns the raw component id of every vertex; ids are in
// completion order, which is already a reverse topological order.
std::vector<std::size_t> tarjan(const Digraph& g, std::size_t& count) {
  const std::size_t n = g.order();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<Vertex> stack;
  std::vector<bool> on_stack(n, false);
  // (vertex, position of the next out-edge to explore)
  std::vector<std::pair<Vertex, std::size_t>> call;
  std::size_t next_index = 0;
  count = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      auto& [v, pos] = call.back();
      auto nbrs = g.out(v);
      if (pos < nbrs.size()) {
        const Vertex w = nbrs[pos++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      call.pop_back();
      if (!call.empty()) {
        const Vertex parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return comp;
}

}  // namespace

std::vector<Vertex> SccDecomposition::prefix_union(std::size_t i) const {
  std::vector<Vertex> out;
  for (std::size_t j = 0; j < i && j < components.size(); ++j) {
    out.insert(out.end(), components[j].begin(), components[j].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

SccDecomposition scc_decompose(const Digraph& g) {
  const std::size_t n = g.order();
  std::size_t raw_count = 0;
  const std::vector<std::size_t> raw = tarjan(g, raw_count);

  std::vector<std::vector<Vertex>> members(raw_count);
  for (Vertex v = 0; v < n; ++v) members[raw[v]].push_back(v);  // ascending by construction

  // Canonical sink-first order: Kahn's algorithm on the condensation, taking
  // a component once all of its out-going inter-component edges point into
  // components already placed; ties broken by smallest member.
  std::vector<std::size_t> pending_out(raw_count, 0);
  std::vector<std::vector<std::size_t>> preds(raw_count);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.out(v)) {
      if (raw[v] != raw[w]) {
        ++pending_out[raw[v]];
        preds[raw[w]].push_back(raw[v]);
      }
    }
  }
  using Entry = std::pair<Vertex, std::size_t>;  // (smallest member, raw id)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t c = 0; c < raw_count; ++c) {
    if (pending_out[c] == 0) ready.push({members[c].front(), c});
  }

  SccDecomposition result;
  result.component_of.assign(n, 0);
  result.components.reserve(raw_count);
  while (!ready.empty()) {
    const std::size_t c = ready.top().second;
    ready.pop();
    const std::size_t position = result.components.size();
    for (Vertex v : members[c]) result.component_of[v] = position;
    for (std::size_t p : preds[c]) {
      if (--pending_out[p] == 0) ready.push({members[p].front(), p});
    }
    result.components.push_back(std::move(members[c]));
  }
  return result;
}

}  // namespace majority
