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

#include "majority/formats.hpp"

#include <charconv>
#include <limits>
#include <optional>
#include <vector>

#include "majority/error.hpp"

namespace majority {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<Line> data_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    raw = trim(raw);
    if (raw.empty() || raw.front() == '#') continue;
    lines.push_back({number, raw});
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

Vertex to_vertex(std::string_view tok, std::size_t line, std::size_t n) {
  const std::uint64_t v = to_uint(tok, line, "vertex");
  if (v >= n) {
    fail(Errc::VertexOutOfRange, "line " + std::to_string(line) + ": vertex " + std::to_string(v) +
                                     " with n=" + std::to_string(n));
  }
  return static_cast<Vertex>(v);
}

}  // namespace

Digraph parse_graph(std::string_view text) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header line \"n m\"");
  const auto header = tokens(lines[0].text);
  if (header.size() != 2) throw ParseError(lines[0].number, "header must be \"n m\"");
  const std::uint64_t n = to_uint(header[0], lines[0].number, "vertex count");
  const std::uint64_t m = to_uint(header[1], lines[0].number, "edge count");
  if (n > std::numeric_limits<Vertex>::max()) {
    throw ParseError(lines[0].number, "vertex count too large");
  }
  if (lines.size() - 1 != m) {
    const std::size_t where = lines.size() - 1 > m ? lines[m + 1].number : 0;
    throw ParseError(where, "expected " + std::to_string(m) + " edge lines, found " +
                                std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tok = tokens(lines[i].text);
    if (tok.size() != 2) throw ParseError(lines[i].number, "edge line must be \"u v\"");
    edges.push_back({to_vertex(tok[0], lines[i].number, n), to_vertex(tok[1], lines[i].number, n)});
  }
  return Digraph::build(n, edges);
}

ListAssignment parse_lists(std::string_view text, std::size_t n) {
  std::vector<std::optional<std::vector<Colour>>> lists(n);
  for (const Line& line : data_lines(text)) {
    const auto colon = line.text.find(':');
    if (colon == std::string_view::npos) throw ParseError(line.number, "expected \"v: c1 ... ct\"");
    const auto head = tokens(line.text.substr(0, colon));
    if (head.size() != 1) throw ParseError(line.number, "expected a single vertex before ':'");
    const Vertex v = to_vertex(head[0], line.number, n);
    if (lists[v]) throw ParseError(line.number, "vertex " + std::to_string(v) + " listed twice");
    std::vector<Colour> colours;
    for (auto tok : tokens(line.text.substr(colon + 1))) {
      colours.push_back(to_uint(tok, line.number, "colour"));
    }
    lists[v] = std::move(colours);
  }
  std::vector<std::vector<Colour>> result;
  result.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!lists[v]) fail(Errc::MissingVertex, "no list for vertex " + std::to_string(v));
    result.push_back(std::move(*lists[v]));
  }
  return ListAssignment(std::move(result));
}

Colouring parse_colouring(std::string_view text, std::size_t n) {
  Colouring colouring(n);
  for (const Line& line : data_lines(text)) {
    const auto tok = tokens(line.text);
    if (tok.size() != 2) throw ParseError(line.number, "colouring line must be \"v c\"");
    const Vertex v = to_vertex(tok[0], line.number, n);
    if (colouring.is_coloured(v)) {
      throw ParseError(line.number, "vertex " + std::to_string(v) + " coloured twice");
    }
    colouring.assign(v, to_uint(tok[1], line.number, "colour"));
  }
  return colouring;
}

std::string serialize_graph(const Digraph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.tail);
    out += ' ';
    out += std::to_string(e.head);
    out += '\n';
  }
  return out;
}

std::string serialize_lists(const ListAssignment& lists) {
  std::string out;
  for (Vertex v = 0; v < lists.order(); ++v) {
    out += std::to_string(v);
    out += ':';
    for (Colour c : lists.list(v)) {
      out += ' ';
      out += std::to_string(c);
    }
    out += '\n';
  }
  return out;
}

std::string serialize_colouring(const Colouring& colouring) {
  std::string out;
  for (Vertex v = 0; v < colouring.order(); ++v) {
    if (auto c = colouring.at(v)) {
      out += std::to_string(v);
      out += ' ';
      out += std::to_string(*c);
      out += '\n';
    }
  }
  return out;
}

}  // namespace majority
