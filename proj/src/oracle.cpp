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

#include "majority/oracle.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "majority/error.hpp"

namespace majority {

namespace {

// same/degree kept as an unreduced fraction; degree > 0 except for the
// initial 0/1.
struct Frac {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
};

class Search {
 public:
  Search(const Digraph& g, const ListAssignment& lists)
      : g_(g), n_(g.order()), colours_(n_), settled_at_(n_), assignment_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      auto list = lists.list(v);
      colours_[v].assign(list.begin(), list.end());
      std::sort(colours_[v].begin(), colours_[v].end());
      Vertex last = v;
      for (Vertex w : g.out(v)) last = std::max(last, w);
      settled_at_[last].push_back(v);
    }
  }

  OracleResult run() {
    if (n_ > 0) descend(0, Frac{});
    OracleResult result;
    result.enumerated = leaves_;
    result.witness = Colouring(n_);
    if (best_) {
      result.opt = ratio(best_->num, best_->den);
      for (Vertex v = 0; v < n_; ++v) result.witness.assign(v, best_witness_[v]);
    } else {
      result.opt = 0;
    }
    return result;
  }

 private:
  bool can_improve(const Frac& current) const { return !best_ || current < *best_; }

  // Returns true once a zero-valued colouring has been found (nothing beats it).
  bool descend(Vertex t, Frac current) {
    for (Colour c : colours_[t]) {
      assignment_[t] = c;
      Frac here = current;
      for (Vertex v : settled_at_[t]) {
        const std::size_t degree = g_.out_degree(v);
        if (degree == 0) continue;
        std::uint64_t same = 0;
        for (Vertex w : g_.out(v)) same += assignment_[w] == assignment_[v] ? 1 : 0;
        const Frac f{same, degree};
        if (here < f) here = f;
      }
      if (t + 1 == n_) ++leaves_;
      if (!can_improve(here)) continue;
      if (t + 1 == n_) {
        best_ = here;
        best_witness_ = assignment_;
        if (here.num == 0) return true;
      } else if (descend(t + 1, here)) {
        return true;
      }
    }
    return false;
  }

  const Digraph& g_;
  std::size_t n_;
  std::vector<std::vector<Colour>> colours_;
  std::vector<std::vector<Vertex>> settled_at_;  // vertices whose f is fixed once t is coloured
  std::vector<Colour> assignment_;
  std::optional<Frac> best_;
  std::vector<Colour> best_witness_;
  std::uint64_t leaves_ = 0;
};

}  // namespace

std::uint64_t colouring_count(const ListAssignment& lists) {
  std::uint64_t product = 1;
  for (Vertex v = 0; v < lists.order(); ++v) {
    const std::uint64_t size = lists.list(v).size();
    if (product > UINT64_MAX / size) return UINT64_MAX;
    product *= size;
  }
  return product;
}

OracleResult oracle_min_max_f(const Digraph& g, const ListAssignment& lists, std::uint64_t budget) {
  if (lists.order() != g.order()) {
    fail(Errc::InvalidArgument, "list assignment has " + std::to_string(lists.order()) +
                                    " vertices, graph has " + std::to_string(g.order()));
  }
  const std::uint64_t product = colouring_count(lists);
  if (product > budget) {
    fail(Errc::BudgetExceeded, std::to_string(product) + " colourings exceed budget " +
                                   std::to_string(budget));
  }
  return Search(g, lists).run();
}

}  // namespace majority
