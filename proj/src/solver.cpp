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

#include "majority/solver.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "majority/error.hpp"
#include "majority/random.hpp"
#include "majority/scc.hpp"
#include "majority/verifier.hpp"

namespace majority {

namespace {

std::optional<std::size_t> slot_of(std::span<const Colour> list, Colour c) {
  auto it = std::find(list.begin(), list.end(), c);
  if (it == list.end()) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

bool violates(std::size_t k, std::size_t same, std::size_t degree) { return k * same > 2 * degree; }

Rational as_rational(const Rational& r) { return r; }
Rational as_rational(double d) { return Rational(d); }

Rational times(const Rational& a, std::size_t n) { return a * static_cast<unsigned long>(n); }
double times(double a, std::size_t n) { return a * static_cast<double>(n); }
Rational over(const Rational& a, std::size_t n) { return a / Rational(static_cast<unsigned long>(n)); }
double over(double a, std::size_t n) { return a / static_cast<double>(n); }

template <typename Scalar>
bool improves(const Scalar& candidate, const Scalar& current) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return candidate < current - kFloatImprovementTolerance;
  } else {
    return candidate < current;
  }
}

template <typename Scalar>
ComponentStats run_component(const Digraph& g, const VertexSet& s, Colouring& c,
                             const ListAssignment& lists, const BasicWeights<Scalar>& x,
                             const SolvePolicy& policy) {
  constexpr bool kExact = !std::is_same_v<Scalar, double>;
  const auto members = s.members();
  const std::size_t size = members.size();
  if (size < 2) fail(Errc::SingletonComponent, "use colour_singleton for one-vertex components");
  if (!std::equal(members.begin(), members.end(), x.vertices.begin(), x.vertices.end())) {
    fail(Errc::InvalidArgument, "weights are indexed by a different vertex set");
  }
  const std::size_t k = lists.k();

  Rng rng(policy.seed);
  for (Vertex v : members) {
    auto list = lists.list(v);
    c.assign(v, policy.init == InitPolicy::first_entry ? list.front() : list[rng.below(list.size())]);
  }

  std::vector<Scalar> weight(size);             // x_v / d+(v)
  std::vector<std::size_t> same(size);
  std::vector<std::vector<std::size_t>> in_s(size);  // in-neighbours inside S, as positions
  std::set<std::size_t> violators;
  Scalar phi = 0;
  for (std::size_t i = 0; i < size; ++i) {
    const Vertex v = members[i];
    weight[i] = over(x.x[i], g.out_degree(v));
    same[i] = same_count(g, c, v);
    for (Vertex u : g.in(v)) {
      if (auto j = s.index_of(u)) in_s[i].push_back(*j);
    }
    if (violates(k, same[i], g.out_degree(v))) violators.insert(i);
    phi += times(weight[i], same[i]);
  }

  ComponentStats stats;
  stats.size = size;
  if (policy.trace) {
    ComponentTrace trace;
    trace.vertices.assign(members.begin(), members.end());
    for (Vertex v : members) trace.initial.push_back(*c.at(v));
    trace.potentials.push_back(as_rational(phi));
    stats.trace = std::move(trace);
  }

  std::optional<std::uint64_t> cap = policy.max_steps;
  if (!kExact && !cap) cap = 10ULL * k * size * size;

  std::vector<std::size_t> count;
  std::vector<Scalar> score;
  while (!violators.empty()) {
    if (cap && stats.steps >= *cap) {
      fail(Errc::StepCapExceeded, "component of " + std::to_string(size) + " vertices still has " +
                                      std::to_string(violators.size()) + " violators after " +
                                      std::to_string(stats.steps) + " steps");
    }
    const std::size_t i = *violators.begin();
    const Vertex v = members[i];
    const auto list = lists.list(v);

    count.assign(list.size(), 0);
    score.assign(list.size(), Scalar(0));
    for (Vertex w : g.out(v)) {
      if (auto slot = slot_of(list, *c.at(w))) ++count[*slot];
    }
    for (std::size_t j : in_s[i]) {
      if (auto slot = slot_of(list, *c.at(members[j]))) score[*slot] += weight[j];
    }
    for (std::size_t t = 0; t < list.size(); ++t) score[t] += times(weight[i], count[t]);

    const Colour old_colour = *c.at(v);
    const std::size_t current = *slot_of(list, old_colour);
    std::size_t best = 0;
    for (std::size_t t = 1; t < list.size(); ++t) {
      if (score[t] < score[best] || (score[t] == score[best] && list[t] < list[best])) best = t;
    }
    if (!improves(score[best], score[current])) {
      if constexpr (kExact) {
        throw std::logic_error("violator " + std::to_string(v) + " has no improving recolouring");
      } else {
        fail(Errc::StepCapExceeded, "violator " + std::to_string(v) +
                                        " has no move improving by more than the float tolerance");
      }
    }

    const Colour new_colour = list[best];
    c.assign(v, new_colour);
    phi += score[best] - score[current];
    same[i] = count[best];
    if (violates(k, same[i], g.out_degree(v))) violators.insert(i); else violators.erase(i);
    for (std::size_t j : in_s[i]) {
      const Colour cj = *c.at(members[j]);
      if (cj == old_colour) {
        --same[j];
      } else if (cj == new_colour) {
        ++same[j];
      } else {
        continue;
      }
      if (violates(k, same[j], g.out_degree(members[j]))) violators.insert(j); else violators.erase(j);
    }
    ++stats.steps;

    if (stats.trace) {
      stats.trace->moves.push_back({v, old_colour, new_colour});
      stats.trace->potentials.push_back(as_rational(phi));
      if constexpr (kExact) {
        if (potential(g, s, c, x) != phi) {
          throw std::logic_error("incremental potential drifted from recomputed value");
        }
      }
    }
  }
  return stats;
}

}  // namespace

Rational f_value(const Digraph& g, const Colouring& c, Vertex v) {
  const std::size_t same = same_count(g, c, v);
  const std::size_t degree = g.out_degree(v);
  if (degree == 0) return 0;
  return ratio(same, degree);
}

Rational potential(const Digraph& g, const VertexSet& s, const Colouring& c, const Weights& x) {
  Rational by_vertex = 0;
  for (Vertex v : s.members()) by_vertex += x.at(v) * f_value(g, c, v);
#ifndef NDEBUG
  Rational by_edge = 0;
  for (Vertex v : s.members()) {
    for (Vertex w : g.out(v)) {
      if (*c.at(w) == *c.at(v)) by_edge += over(x.at(v), g.out_degree(v));
    }
  }
  assert(by_edge == by_vertex);
#endif
  return by_vertex;
}

Rational g_score(const Digraph& g, const VertexSet& s, const Colouring& c,
                 const ListAssignment& lists, const Weights& x, Vertex v, Colour i) {
  if (!lists.contains(v, i)) {
    fail(Errc::ColourNotInList, "colour " + std::to_string(i) + " not in L(" + std::to_string(v) + ")");
  }
  Rational score = 0;
  for (Vertex w : g.out(v)) {
    const auto cw = c.at(w);
    if (!cw) fail(Errc::UncolouredNeighbour, "out-neighbour " + std::to_string(w) + " uncoloured");
    if (*cw == i) score += over(x.at(v), g.out_degree(v));
  }
  for (Vertex u : g.in(v)) {
    if (!s.contains(u)) continue;
    const auto cu = c.at(u);
    if (!cu) fail(Errc::UncolouredNeighbour, "in-neighbour " + std::to_string(u) + " uncoloured");
    if (*cu == i) score += over(x.at(u), g.out_degree(u));
  }
  return score;
}

bool is_violator(const Digraph& g, const Colouring& c, std::size_t k, Vertex v) {
  return violates(k, same_count(g, c, v), g.out_degree(v));
}

ComponentStats colour_component(const Digraph& g, const VertexSet& s, Colouring& c,
                                const ListAssignment& lists, const Weights& x,
                                const SolvePolicy& policy) {
  return run_component(g, s, c, lists, x, policy);
}

ComponentStats colour_component(const Digraph& g, const VertexSet& s, Colouring& c,
                                const ListAssignment& lists, const FloatWeights& x,
                                const SolvePolicy& policy) {
  return run_component(g, s, c, lists, x, policy);
}

Colour colour_singleton(const Digraph& g, Vertex v, Colouring& c, const ListAssignment& lists) {
  const auto list = lists.list(v);
  std::vector<std::size_t> count(list.size(), 0);
  for (Vertex w : g.out(v)) {
    const auto cw = c.at(w);
    if (!cw) fail(Errc::UncolouredNeighbour, "out-neighbour " + std::to_string(w) + " uncoloured");
    if (auto slot = slot_of(list, *cw)) ++count[*slot];
  }
  std::size_t best = 0;
  for (std::size_t t = 1; t < list.size(); ++t) {
    if (count[t] < count[best] || (count[t] == count[best] && list[t] < list[best])) best = t;
  }
  c.assign(v, list[best]);
  return list[best];
}

SolveResult solve(const Digraph& g, const ListAssignment& lists, const SolvePolicy& policy) {
  if (lists.order() != g.order()) {
    fail(Errc::InvalidArgument, "list assignment has " + std::to_string(lists.order()) +
                                    " vertices, graph has " + std::to_string(g.order()));
  }
  const SccDecomposition scc = scc_decompose(g);

  SolveResult result{Colouring(g.order()), {}};
  SolveReport& report = result.report;
  report.k = lists.k();
  report.eta_bound = ratio(2, report.k);
  if (policy.trace) report.potential_trace.emplace();

  for (std::size_t idx = 0; idx < scc.count(); ++idx) {
    const auto& component = scc.components[idx];
    report.component_sizes.push_back(component.size());
    if (component.size() == 1) {
      const Vertex v = component.front();
      const Colour chosen = colour_singleton(g, v, result.colouring, lists);
      report.recolour_steps.push_back(0);
      if (policy.trace) report.potential_trace->push_back({{v}, {chosen}, {}, {}});
      continue;
    }
    const VertexSet s(component);
    const WalkMatrix walk = walk_matrix(g, s);
    SolvePolicy local = policy;
    local.seed = mix_seed(policy.seed, idx);
    ComponentStats stats =
        policy.arithmetic == Arithmetic::rational
            ? colour_component(g, s, result.colouring, lists, stationary_rational(walk), local)
            : colour_component(g, s, result.colouring, lists, stationary_float(walk), local);
    report.recolour_steps.push_back(stats.steps);
    if (policy.trace) report.potential_trace->push_back(std::move(*stats.trace));
  }

  report.achieved_eta = 0;
  report.per_vertex_f.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    report.per_vertex_f.push_back(f_value(g, result.colouring, v));
    if (report.per_vertex_f.back() > report.achieved_eta) report.achieved_eta = report.per_vertex_f.back();
  }
  return result;
}

}  // namespace majority
