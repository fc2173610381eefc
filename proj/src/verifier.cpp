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

#include "majority/verifier.hpp"

#include <string>

#include "majority/error.hpp"

namespace majority {

std::size_t same_count(const Digraph& g, const Colouring& c, Vertex v) {
  const auto own = c.at(v);
  if (!own) fail(Errc::UncolouredNeighbour, "vertex " + std::to_string(v) + " is uncoloured");
  std::size_t same = 0;
  for (Vertex w : g.out(v)) {
    const auto other = c.at(w);
    if (!other) {
      fail(Errc::UncolouredNeighbour,
           "out-neighbour " + std::to_string(w) + " of " + std::to_string(v) + " is uncoloured");
    }
    if (*other == *own) ++same;
  }
  return same;
}

VerifyReport verify(const Digraph& g, const Colouring& c, const Rational& eta,
                    const ListAssignment* lists) {
  if (eta < 0 || eta > 1) fail(Errc::InvalidArgument, "eta " + to_pq(eta) + " not in [0,1]");
  if (c.order() != g.order() || !c.is_total()) {
    fail(Errc::PartialColouring, "colouring does not cover all " + std::to_string(g.order()) +
                                     " vertices");
  }
  const Integer& p = eta.get_num();
  const Integer& q = eta.get_den();

  VerifyReport report;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t same = same_count(g, c, v);
    const std::size_t degree = g.out_degree(v);
    if (degree == 0) continue;
    if (q * static_cast<unsigned long>(same) > p * static_cast<unsigned long>(degree)) {
      report.violations.push_back({v, same, degree});
    }
    const Rational f = ratio(same, degree);
    if (f > report.achieved_eta) report.achieved_eta = f;
  }
  if (lists != nullptr) {
    if (lists->order() != g.order()) {
      fail(Errc::InvalidArgument, "list assignment has " + std::to_string(lists->order()) +
                                      " vertices, graph has " + std::to_string(g.order()));
    }
    report.list_violations = c.list_violations(*lists);
  }
  report.ok = report.violations.empty() && report.list_violations.empty();
  return report;
}

}  // namespace majority
