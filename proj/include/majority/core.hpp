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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace majority {

using Vertex = std::uint32_t;
using Colour = std::uint64_t;

struct Edge {
  Vertex tail;
  Vertex head;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertices of some digraph. Membership and
/// position lookups are binary searches, so building one costs O(|S| log |S|)
/// regardless of the size of the host graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  /// Position of v in members(), or nullopt.
  std::optional<std::size_t> index_of(Vertex v) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple digraph on vertices 0..n-1 in compressed adjacency form. Both
/// directions are stored and each neighbourhood is sorted ascending.
class Digraph {
 public:
  Digraph() = default;

  /// Throws Error(VertexOutOfRange | SelfLoop | DuplicateEdge).
  static Digraph build(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t size() const { return out_targets_.size(); }

  std::span<const Vertex> out(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const Vertex> in(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(Vertex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(Vertex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  /// |N+(v) ∩ S|.
  std::size_t out_degree_within(Vertex v, const VertexSet& s) const;

  bool has_edge(Vertex tail, Vertex head) const;

  /// All edges in (tail, head) lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
};

/// Per-vertex colour lists. Duplicates inside a list are dropped (keeping the
/// first occurrence) and k is the smallest resulting list size.
class ListAssignment {
 public:
  /// Throws Error(KTooSmall) when any list ends up with fewer than two colours
  /// or when there are no vertices at all.
  explicit ListAssignment(std::vector<std::vector<Colour>> lists);

  std::size_t order() const { return lists_.size(); }
  std::size_t k() const { return k_; }
  std::span<const Colour> list(Vertex v) const { return lists_[v]; }
  bool contains(Vertex v, Colour c) const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<std::vector<Colour>> lists_;
  std::size_t k_ = 0;
};

/// Total or partial map vertex -> colour.
class Colouring {
 public:
  Colouring() = default;
  explicit Colouring(std::size_t n) : colour_(n) {}

  std::size_t order() const { return colour_.size(); }
  std::optional<Colour> at(Vertex v) const { return colour_[v]; }
  bool is_coloured(Vertex v) const { return colour_[v].has_value(); }
  void assign(Vertex v, Colour c) { colour_[v] = c; }
  void clear(Vertex v) { colour_[v].reset(); }
  bool is_total() const;

  /// Vertices whose colour is missing from their list (uncoloured vertices are
  /// not reported).
  std::vector<Vertex> list_violations(const ListAssignment& lists) const;

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  std::vector<std::optional<Colour>> colour_;
};

}  // namespace majority
