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
#include <vector>

#include "majority/core.hpp"

namespace majority {

/// Strongly connected components in sink-first order: every edge between two
/// components runs from a later component to an earlier one, so the
/// components can be coloured left to right with all out-neighbours of the
/// current component already coloured.
struct SccDecomposition {
  /// Each component lists its vertices ascending.
  std::vector<std::vector<Vertex>> components;
  std::vector<std::size_t> component_of;

  std::size_t count() const { return components.size(); }

  /// Vertices of components 0..i-1 (the already-processed prefix), sorted.
  std::vector<Vertex> prefix_union(std::size_t i) const;
};

/// Among all valid sink-first orders the one chosen is canonical: whenever
/// several components are eligible next, the one with the smallest vertex wins.
SccDecomposition scc_decompose(const Digraph& g);

}  // namespace majority
