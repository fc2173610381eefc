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

// Plain-text formats. In every format blank lines and lines whose first
// non-blank character is '#' are ignored; integers are unsigned decimal.
//
//   graph:      "n m" followed by exactly m lines "u v"
//   lists:      one line "v: c1 c2 ... ct" per vertex
//   colouring:  one line "v c" per coloured vertex
//
// The serializers emit the canonical form: no comments, vertices ascending,
// edges in (tail, head) order, single spaces, LF line endings.

#pragma once

#include <string>
#include <string_view>

#include "majority/core.hpp"

namespace majority {

Digraph parse_graph(std::string_view text);
ListAssignment parse_lists(std::string_view text, std::size_t n);
Colouring parse_colouring(std::string_view text, std::size_t n);

std::string serialize_graph(const Digraph& g);
std::string serialize_lists(const ListAssignment& lists);
std::string serialize_colouring(const Colouring& colouring);

}  // namespace majority
