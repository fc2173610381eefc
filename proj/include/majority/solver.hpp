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

// 2/k-majority list colouring.
//
// A strongly connected set S is coloured by local search on the potential
//
//     Phi(C) = sum_{v in S} x_v f_C(v) = sum_{vw in E, v in S, C(v)=C(w)} x_v / d+(v)
//
// where x is the stationary vector of the uniform walk on G[S]. Recolouring v
// from a to b changes Phi by g(b) - g(a), with
//
//     g(i) = sum_{w in N+(v), C(w)=i} x_v / d+(v) + sum_{u in N-(v) ∩ S, C(u)=i} x_u / d+(u).
//
// Stationarity gives sum_{i in L(v)} g(i) <= 2 x_v, while g(C(v)) >= x_v f(v).
// So any v with f(v) > 2/k (a violator) has a colour with strictly smaller g,
// Phi strictly decreases with every move, and the search halts with no
// violators. Components are processed sink-first so that all out-neighbours
// outside the current component are already coloured.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "majority/core.hpp"
#include "majority/rational.hpp"
#include "majority/stationary.hpp"

namespace majority {

enum class InitPolicy { first_entry, seeded_random };

struct SolvePolicy {
  InitPolicy init = InitPolicy::first_entry;
  std::uint64_t seed = 0;
  Arithmetic arithmetic = Arithmetic::rational;
  /// Rational mode: no cap unless set. Float mode: defaults to 10 k |S|^2.
  std::optional<std::uint64_t> max_steps;
  bool trace = false;
};

/// Improvement threshold for float-mode moves.
inline constexpr double kFloatImprovementTolerance = 1e-12;

struct Move {
  Vertex vertex;
  Colour from;
  Colour to;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Full history of one component's local search, enough to replay it.
struct ComponentTrace {
  std::vector<Vertex> vertices;
  std::vector<Colour> initial;  // colour of vertices[i] before the first move
  std::vector<Move> moves;
  /// Potential before the first move and after each move. Float-mode values
  /// are the exact rational value of the computed double.
  std::vector<Rational> potentials;
};

struct ComponentStats {
  std::size_t size = 0;
  std::uint64_t steps = 0;
  std::optional<ComponentTrace> trace;
};

struct SolveReport {
  std::size_t k = 0;
  Rational eta_bound;
  Rational achieved_eta;
  std::vector<Rational> per_vertex_f;
  std::vector<std::uint64_t> recolour_steps;  // per component, sink-first order
  std::vector<std::size_t> component_sizes;
  std::optional<std::vector<ComponentTrace>> potential_trace;
};

struct SolveResult {
  Colouring colouring;
  SolveReport report;
};

/// |{w in N+(v) : C(w) = C(v)}| / d+(v), and 0 when d+(v) = 0.
Rational f_value(const Digraph& g, const Colouring& c, Vertex v);

/// Phi over S. Throws Error(UncolouredNeighbour) if S or N+(S) is not fully
/// coloured.
Rational potential(const Digraph& g, const VertexSet& s, const Colouring& c, const Weights& x);

/// g(i) for v in S, computed from scratch. Throws Error(ColourNotInList) if
/// i is not in L(v).
Rational g_score(const Digraph& g, const VertexSet& s, const Colouring& c,
                 const ListAssignment& lists, const Weights& x, Vertex v, Colour i);

/// Whether v currently violates the 2/k bound: k * same(v) > 2 * d+(v).
bool is_violator(const Digraph& g, const Colouring& c, std::size_t k, Vertex v);

/// Colours the strongly connected set S (|S| >= 2) on top of the partial
/// colouring c, which must already colour every out-neighbour of S outside S.
/// Colours already present on S are overwritten by the initial colouring.
/// Throws Error(StepCapExceeded) only when a step cap applies and is hit.
ComponentStats colour_component(const Digraph& g, const VertexSet& s, Colouring& c,
                                const ListAssignment& lists, const Weights& x,
                                const SolvePolicy& policy);
ComponentStats colour_component(const Digraph& g, const VertexSet& s, Colouring& c,
                                const ListAssignment& lists, const FloatWeights& x,
                                const SolvePolicy& policy);

/// Component without internal edges: take the colour of L(v) that is least
/// frequent among v's (already coloured) out-neighbours, smallest id on ties.
Colour colour_singleton(const Digraph& g, Vertex v, Colouring& c, const ListAssignment& lists);

/// Total L-colouring with every f(v) <= 2/k.
SolveResult solve(const Digraph& g, const ListAssignment& lists, const SolvePolicy& policy = {});

}  // namespace majority
