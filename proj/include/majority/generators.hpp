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
#include <cstdint>

#include "majority/core.hpp"
#include "majority/rational.hpp"

namespace majority {

/// Rotational tournament: i -> i+j (mod n) for j = 1..(n-1)/2. Every vertex has
/// in- and out-degree (n-1)/2. Throws Error(NNotOdd) unless n is odd and >= 3.
Digraph gen_regular_tournament(std::size_t n);

/// Each ordered pair (u, v), u != v, is an edge independently with probability
/// p. Pairs are visited in (u, v) lexicographic order, one draw each.
Digraph gen_random_digraph(std::size_t n, const Rational& p, std::uint64_t seed);

enum class ListMode { identical, random };

/// identical: every list is {1..k}. random: each list is a uniform k-subset of
/// {1..palette}, sorted ascending. Throws Error(PaletteTooSmall) if
/// palette < k, Error(KTooSmall) if k < 2.
ListAssignment gen_lists(std::size_t n, std::size_t k, std::size_t palette, ListMode mode,
                         std::uint64_t seed);

}  // namespace majority
