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
#include "majority/rational.hpp"

namespace majority {

struct Violation {
  Vertex vertex;
  std::size_t same_count;
  std::size_t out_degree;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
  bool ok = true;
  std::vector<Violation> violations;
  Rational achieved_eta = 0;
  std::vector<Vertex> list_violations;
};

/// Number of out-neighbours of v sharing v's colour. Throws
/// Error(UncolouredNeighbour) if v or one of its out-neighbours is uncoloured.
std::size_t same_count(const Digraph& g, const Colouring& c, Vertex v);

/// Checks that at most eta * d+(v) out-neighbours of every v share its colour,
/// i.e. q * same(v) <= p * d+(v) for eta = p/q, in integer arithmetic.
/// Throws Error(PartialColouring) unless the colouring is total on V(G) and
/// Error(InvalidArgument) unless eta is in [0, 1].
VerifyReport verify(const Digraph& g, const Colouring& c, const Rational& eta,
                    const ListAssignment* lists = nullptr);

}  // namespace majority
