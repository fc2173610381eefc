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

#include "majority/stationary.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "majority/error.hpp"

namespace majority {

namespace {

// Number of members of s reachable from s.members()[0] inside G[s], following
// out-edges (forward) or in-edges (backward).
std::size_t reach_within(const Digraph& g, const VertexSet& s, bool forward) {
  std::vector<bool> seen(s.size(), false);
  std::vector<Vertex> todo{s.members().front()};
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const Vertex v = todo.back();
    todo.pop_back();
    for (Vertex w : forward ? g.out(v) : g.in(v)) {
      auto idx = s.index_of(w);
      if (idx && !seen[*idx]) {
        seen[*idx] = true;
        ++reached;
        todo.push_back(w);
      }
    }
  }
  return reached;
}

}  // namespace

WalkMatrix walk_matrix(const Digraph& g, const VertexSet& s) {
  if (s.size() < 2) {
    fail(Errc::SingletonComponent, "walk matrix needs at least two vertices");
  }
  if (s.members().back() >= g.order()) {
    fail(Errc::VertexOutOfRange, "vertex " + std::to_string(s.members().back()) +
                                     " with n=" + std::to_string(g.order()));
  }
  if (reach_within(g, s, true) != s.size() || reach_within(g, s, false) != s.size()) {
    fail(Errc::NotStronglyConnected, "induced subgraph on " + std::to_string(s.size()) +
                                         " vertices is not strongly connected");
  }

  WalkMatrix walk;
  walk.vertices.assign(s.members().begin(), s.members().end());
  walk.degree_within.resize(s.size());
  walk.rows.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Vertex v = walk.vertices[i];
    std::vector<std::size_t> cols;
    for (Vertex w : g.out(v)) {
      if (auto j = s.index_of(w)) cols.push_back(*j);
    }
    walk.degree_within[i] = cols.size();
    const Rational p(1, static_cast<unsigned long>(cols.size()));
    for (std::size_t j : cols) walk.rows[i].push_back({j, p});
  }
  return walk;
}

// With y_u = x_u / d_S(u) the balance equations x_v = sum_{u->v} x_u / d_S(u)
// become the integer system  sum_{u->v} y_u - d_S(v) y_v = 0. The rows of that
// system sum to zero, so the last one is replaced by the normalization
// sum_u d_S(u) y_u = 1, which is exactly sum x = 1.
Weights stationary_rational(const WalkMatrix& walk) {
  const std::size_t n = walk.dimension();
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n + 1, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (const auto& e : walk.rows[u]) m[e.column][u] += 1;
    m[u][u] -= static_cast<unsigned long>(walk.degree_within[u]);
  }
  for (std::size_t u = 0; u < n; ++u) m[n - 1][u] = static_cast<unsigned long>(walk.degree_within[u]);
  m[n - 1][n] = 1;

  // Bareiss elimination: every division below is exact.
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) {
      fail(Errc::NotStronglyConnected, "balance system is singular");
    }
    if (pivot != k) std::swap(m[pivot], m[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }

  std::vector<Rational> y(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * y[j];
    y[i] = acc / Rational(m[i][i]);
  }

  Weights weights;
  weights.vertices = walk.vertices;
  weights.x.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    weights.x[u] = y[u] * static_cast<unsigned long>(walk.degree_within[u]);
    weights.x[u].canonicalize();
  }
  return weights;
}

FloatWeights stationary_float(const WalkMatrix& walk, const PowerIterationOptions& options) {
  const std::size_t n = walk.dimension();
  std::vector<std::vector<std::pair<std::size_t, double>>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : walk.rows[i]) rows[i].push_back({e.column, e.value.get_d()});
  }

  std::vector<double> x(n, 1.0 / static_cast<double>(n)), next(n);
  std::uint64_t iteration = 0;
  for (;; ++iteration) {
    if (iteration >= options.max_iterations) {
      fail(Errc::NoConvergence, "power iteration did not converge in " +
                                    std::to_string(options.max_iterations) + " iterations");
    }
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [j, a] : rows[i]) next[j] += a * x[i];
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = 0.5 * (next[i] + x[i]);
      sum += next[i];
    }
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= sum;
      change = std::max(change, std::abs(next[i] - x[i]));
    }
    x.swap(next);
    if (change <= options.step_tolerance) break;
  }

  FloatWeights weights{walk.vertices, std::move(x)};
  const double residual = residual_inf(walk, weights);
  if (residual > options.residual_tolerance) {
    fail(Errc::NoConvergence, "residual " + std::to_string(residual) + " after " +
                                  std::to_string(iteration) + " iterations");
  }
  return weights;
}

Rational residual_inf(const WalkMatrix& walk, const Weights& weights) {
  const std::size_t n = walk.dimension();
  std::vector<Rational> image(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : walk.rows[i]) image[e.column] += e.value * weights.x[i];
  }
  Rational worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational diff = abs(image[i] - weights.x[i]);
    if (diff > worst) worst = diff;
  }
  return worst;
}

double residual_inf(const WalkMatrix& walk, const FloatWeights& weights) {
  const std::size_t n = walk.dimension();
  std::vector<double> image(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : walk.rows[i]) image[e.column] += e.value.get_d() * weights.x[i];
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(image[i] - weights.x[i]));
  return worst;
}

}  // namespace majority
