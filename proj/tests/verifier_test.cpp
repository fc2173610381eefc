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

#include "gtest/gtest.h"
#include "majority/generators.hpp"
#include "majority/oracle.hpp"
#include "majority/random.hpp"
#include "test_support.hpp"

namespace majority {
namespace {

using testing::colouring;
using testing::graph;

TEST(VerifyTest, MonochromaticTriangle) {
  const Digraph g = graph(3, {{0, 1}, {1, 2}, {2, 0}});
  const VerifyReport r = verify(g, colouring({1, 1, 1}), Rational(1, 2));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violations, (std::vector<Violation>{{0, 1, 1}, {1, 1, 1}, {2, 1, 1}}));
  EXPECT_EQ(r.achieved_eta, 1);
}

TEST(VerifyTest, RainbowPassesAtZero) {
  const Digraph g = gen_regular_tournament(7);
  const VerifyReport r = verify(g, colouring({1, 2, 3, 4, 5, 6, 7}), Rational(0));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.achieved_eta, 0);
}

TEST(VerifyTest, TournamentBoundaryIsExact) {
  const Digraph g = gen_regular_tournament(5);
  const ListAssignment lists = testing::same_lists(5, {1, 2, 3, 4});
  const Colouring best = oracle_min_max_f(g, lists).witness;
  EXPECT_TRUE(verify(g, best, Rational(1, 2), &lists).ok);
  EXPECT_FALSE(verify(g, best, Rational(49, 100), &lists).ok);
  EXPECT_EQ(verify(g, best, Rational(49, 100)).achieved_eta, Rational(1, 2));
}

TEST(VerifyTest, ListViolationsAndErrors) {
  const Digraph g = graph(2, {{0, 1}});
  const ListAssignment lists({{1, 2}, {1, 2}});
  const VerifyReport r = verify(g, colouring({1, 5}), Rational(1), &lists);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.list_violations, std::vector<Vertex>{1});

  Colouring partial(2);
  partial.assign(0, 1);
  EXPECT_ERRC(verify(g, partial, Rational(1)), Errc::PartialColouring);
  EXPECT_ERRC(verify(g, Colouring(3), Rational(1)), Errc::PartialColouring);
  EXPECT_ERRC(verify(g, colouring({1, 2}), Rational(3, 2)), Errc::InvalidArgument);
}

TEST(VerifyProperty, AgreesWithNaiveRecountAndIsMonotone) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.between(1, 15);
    const Digraph g = gen_random_digraph(n, ratio(rng.between(1, 4), 5), rng.next());
    std::vector<Colour> colour(n);
    for (auto& c : colour) c = rng.between(1, 3);
    const Rational eta = ratio(rng.between(0, 6), 6);
    const Rational naive = testing::naive_max_f(g, colour);

    const VerifyReport r = verify(g, colouring(colour), eta);
    EXPECT_EQ(r.achieved_eta, naive);
    EXPECT_EQ(r.ok, naive <= eta);
    for (const auto& v : r.violations) {
      EXPECT_GT(testing::naive_f(g, colour, v.vertex), eta);
    }
    if (r.ok) EXPECT_TRUE(verify(g, colouring(colour), (eta + 1) / 2).ok);
  }
}

}  // namespace
}  // namespace majority
