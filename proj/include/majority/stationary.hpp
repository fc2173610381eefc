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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "majority/core.hpp"
#include "majority/rational.hpp"

namespace majority {

enum class Arithmetic { rational, floating };

/// Uniform random walk on a strongly connected vertex set S: from v, step to
/// each out-neighbour inside S with probability 1/d+_S(v). Rows are indexed by
/// position in `vertices`.
struct WalkMatrix {
  struct Entry {
    std::size_t column;
    Rational value;
  };

  std::vector<Vertex> vertices;
  std::vector<std::size_t> degree_within;  // d+_S per row
  std::vector<std::vector<Entry>> rows;

  std::size_t dimension() const { return vertices.size(); }
};

/// Positive left eigenvector of the walk matrix for eigenvalue 1, normalized
/// to sum 1, indexed like WalkMatrix::vertices.
template <typename Scalar>
struct BasicWeights {
  std::vector<Vertex> vertices;
  std::vector<Scalar> x;

  const Scalar& at(Vertex v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    return x[static_cast<std::size_t>(it - vertices.begin())];
  }
};

using Weights = BasicWeights<Rational>;
using FloatWeights = BasicWeights<double>;

/// Throws Error(SingletonComponent) for |S| < 2 and
/// Error(NotStronglyConnected) when G[S] is not strongly connected.
WalkMatrix walk_matrix(const Digraph& g, const VertexSet& s);

/// Exact solution of (A^T - I) x = 0, sum(x) = 1 by fraction-free elimination.
Weights stationary_rational(const WalkMatrix& walk);

struct PowerIterationOptions {
  std::uint64_t max_iterations = 1'000'000;
  double step_tolerance = 1e-14;
  double residual_tolerance = 1e-12;
};

/// Power iteration on the lazy walk (A^T + I) / 2, which converges on
/// periodic chains too. Throws Error(NoConvergence).
FloatWeights stationary_float(const WalkMatrix& walk, const PowerIterationOptions& options = {});

/// max_v |(A^T x)_v - x_v|.
Rational residual_inf(const WalkMatrix& walk, const Weights& weights);
double residual_inf(const WalkMatrix& walk, const FloatWeights& weights);

}  // namespace majority
