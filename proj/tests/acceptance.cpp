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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "majority/cli.hpp"
#include "majority/ensemble.hpp"
#include "majority/formats.hpp"
#include "majority/generators.hpp"
#include "majority/oracle.hpp"
#include "majority/random.hpp"
#include "majority/scc.hpp"
#include "majority/solver.hpp"
#include "majority/stationary.hpp"
#include "majority/verifier.hpp"

namespace {

using namespace majority;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kSoundnessInstances = 1000;
constexpr double kSoundnessSeconds = 60.0;
constexpr double kOracleK6Seconds = 5.0;
constexpr std::size_t kStationaryGraphs = 200;
constexpr std::size_t kStationaryMaxN = 40;
constexpr double kFloatResidual = 1e-12;
constexpr double kModeAgreement = 1e-9;
constexpr std::size_t kOracleGraphs = 200;
constexpr std::size_t kOracleMaxN = 5;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void require(bool ok, const std::string& what) {
    if (!ok && failures_++ < 5) detail_ << "\n    " << what;
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : ", ") + text; }

  bool report() const {
    std::cout << (failures_ == 0 ? "PASS" : "FAIL") << "  " << name_;
    if (!notes_.empty()) std::cout << " [" << notes_ << "]";
    if (failures_ > 0) std::cout << " (" << failures_ << " failures)" << detail_.str();
    std::cout << std::endl;
    return failures_ == 0;
  }

 private:
  std::string name_;
  std::string notes_;
  std::size_t failures_ = 0;
  std::ostringstream detail_;
};

ListAssignment identical_lists(std::size_t n, std::size_t k) {
  return gen_lists(n, k, k, ListMode::identical, 0);
}

Rational edge_sum_potential(const Digraph& g, const std::vector<Vertex>& s, const Colouring& state,
                            const Weights& x) {
  Rational phi = 0;
  for (Vertex v : s)
    for (Vertex w : g.out(v))
      if (*state.at(v) == *state.at(w)) phi += x.at(v) / Rational(static_cast<unsigned long>(g.out_degree(v)));
  return phi;
}

// Replays a traced solve from scratch; returns an empty string on success.
std::string replay_trace(const Digraph& g, const ListAssignment& lists, const SolveResult& result) {
  if (!result.report.potential_trace) return "no trace recorded";
  const auto& traces = *result.report.potential_trace;
  const SccDecomposition scc = scc_decompose(g);
  if (traces.size() != scc.count()) return "trace count differs from component count";
  Colouring state(g.order());
  for (std::size_t idx = 0; idx < traces.size(); ++idx) {
    const ComponentTrace& t = traces[idx];
    if (t.vertices != scc.components[idx]) return "trace vertices out of order";
    for (std::size_t i = 0; i < t.vertices.size(); ++i) state.assign(t.vertices[i], t.initial[i]);
    if (t.vertices.size() == 1) {
      if (!t.moves.empty()) return "singleton component recorded moves";
      continue;
    }
    const Weights x = stationary_rational(walk_matrix(g, VertexSet(t.vertices)));
    if (t.potentials.size() != t.moves.size() + 1) return "potential count mismatch";
    if (t.potentials[0] != edge_sum_potential(g, t.vertices, state, x)) return "initial potential mismatch";
    for (std::size_t step = 0; step < t.moves.size(); ++step) {
      const Move& m = t.moves[step];
      if (*state.at(m.vertex) != m.from) return "move source colour mismatch";
      if (!lists.contains(m.vertex, m.to)) return "move leaves the list";
      state.assign(m.vertex, m.to);
      if (t.potentials[step + 1] != edge_sum_potential(g, t.vertices, state, x))
        return "recomputed potential differs at step " + std::to_string(step + 1);
      if (!(t.potentials[step + 1] < t.potentials[step]))
        return "potential not strictly decreasing at step " + std::to_string(step + 1);
    }
  }
  if (!(state == result.colouring)) return "replayed colouring differs from output";
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_violator(g, result.colouring, lists.k(), v)) return "violator remains at " + std::to_string(v);
  return {};
}

struct TracedCase {
  std::string label;
  Digraph graph;
  ListAssignment lists;
};

bool criterion_soundness(std::vector<TracedCase>& traced) {
  Criterion c("1 soundness: 1000 seeded instances verify at 2/k, rational mode under 60 s");
  const auto start = Clock::now();
  std::size_t passed = 0;
  std::vector<EnsembleInstance> instances;
  for (std::size_t i = 0; i < kSoundnessInstances; ++i) {
    EnsembleInstance inst = soundness_instance(kDefaultEnsembleSeed, i);
    try {
      const SolveResult r = solve(inst.graph, inst.lists);
      const bool ok = verify(inst.graph, r.colouring, ratio(2, inst.k), &inst.lists).ok &&
                      r.report.achieved_eta <= ratio(2, inst.k);
      passed += ok ? 1 : 0;
      c.require(ok, "instance " + std::to_string(i) + " fails verify at 2/k");
    } catch (const std::exception& e) {
      c.require(false, "instance " + std::to_string(i) + ": " + e.what());
    }
    instances.push_back(std::move(inst));
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < kSoundnessSeconds, "took " + std::to_string(elapsed) + " s");
  c.note(std::to_string(passed) + "/" + std::to_string(kSoundnessInstances) + " passed");
  c.note(std::to_string(elapsed).substr(0, 5) + " s");
  for (auto& inst : instances)
    traced.push_back({"ensemble #" + std::to_string(inst.index), std::move(inst.graph), std::move(inst.lists)});
  return c.report();
}

bool criterion_even_tightness(std::vector<TracedCase>& traced) {
  Criterion c("2 even tightness: opt = solver eta = 2/k on T(k+1), k in {2,4,6}, k=6 oracle under 5 s");
  for (std::size_t k : {2, 4, 6}) {
    const Digraph g = gen_regular_tournament(k + 1);
    const ListAssignment lists = identical_lists(k + 1, k);
    const auto start = Clock::now();
    const OracleResult oracle = oracle_min_max_f(g, lists);
    const double elapsed = seconds_since(start);
    const SolveResult solved = solve(g, lists);
    const Rational bound = ratio(2, k);
    c.require(oracle.opt == bound, "k=" + std::to_string(k) + " oracle opt " + to_pq(oracle.opt));
    c.require(solved.report.achieved_eta == bound,
              "k=" + std::to_string(k) + " solver eta " + to_pq(solved.report.achieved_eta));
    c.require(verify(g, solved.colouring, bound, &lists).ok, "k=" + std::to_string(k) + " verify");
    if (k == 6) {
      c.require(elapsed < kOracleK6Seconds, "k=6 oracle took " + std::to_string(elapsed) + " s");
      c.note("k=6 oracle " + std::to_string(elapsed).substr(0, 5) + " s, " + std::to_string(oracle.enumerated) +
             " leaves");
    }
    traced.push_back({"T" + std::to_string(k + 1) + " k=" + std::to_string(k), g, lists});
  }
  return c.report();
}

bool criterion_odd_bound(std::vector<TracedCase>& traced) {
  Criterion c("3 odd bound: 2/(k+1) <= opt <= 2/k on T(k+2), k in {3,5}; pinned 1/2 and 1/3");
  const std::pair<std::size_t, Rational> pinned[] = {{3, ratio(1, 2)}, {5, ratio(1, 3)}};
  for (const auto& [k, expected] : pinned) {
    const Digraph g = gen_regular_tournament(k + 2);
    const ListAssignment lists = identical_lists(k + 2, k);
    const OracleResult oracle = oracle_min_max_f(g, lists);
    const std::string tag = "k=" + std::to_string(k) + " opt " + to_pq(oracle.opt);
    c.require(ratio(2, k + 1) <= oracle.opt && oracle.opt <= ratio(2, k), tag + " outside bounds");
    c.require(oracle.opt == expected, tag + " differs from pinned " + to_pq(expected));
    c.require(verify(g, oracle.witness, oracle.opt, &lists).ok, tag + " witness fails verify");
    const SolveResult solved = solve(g, lists);
    c.require(verify(g, solved.colouring, ratio(2, k), &lists).ok, "k=" + std::to_string(k) + " solver");
    c.note(tag);
    traced.push_back({"T" + std::to_string(k + 2) + " k=" + std::to_string(k), g, lists});
  }
  return c.report();
}

Digraph random_strong_digraph(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  const std::uint64_t extra = rng.between(0, 3);
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && v != (u + 1) % n && rng.bernoulli(extra, 10)) edges.push_back({u, v});
  return Digraph::build(n, edges);
}

bool criterion_stationary() {
  Criterion c("4 stationary: exact zero residual, x > 0, sum 1; float residual <= 1e-12; agree to 1e-9");
  Rng rng(mix_seed(kDefaultEnsembleSeed, 4));
  double worst_residual = 0, worst_gap = 0;
  for (std::size_t trial = 0; trial < kStationaryGraphs; ++trial) {
    const std::size_t n = rng.between(2, kStationaryMaxN);
    const Digraph g = random_strong_digraph(n, rng);
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    const std::string tag = "graph " + std::to_string(trial) + " (n=" + std::to_string(n) + ")";
    try {
      const WalkMatrix walk = walk_matrix(g, VertexSet(all));
      const Weights exact = stationary_rational(walk);
      Rational sum = 0;
      bool positive = true;
      for (const auto& xi : exact.x) {
        sum += xi;
        positive = positive && xi > 0;
      }
      c.require(residual_inf(walk, exact) == 0, tag + " nonzero exact residual");
      c.require(positive, tag + " non-positive entry");
      c.require(sum == 1, tag + " sum " + to_pq(sum));

      const FloatWeights approx = stationary_float(walk);
      const double residual = residual_inf(walk, approx);
      worst_residual = std::max(worst_residual, residual);
      c.require(residual <= kFloatResidual, tag + " float residual " + std::to_string(residual));
      for (std::size_t i = 0; i < n; ++i) {
        const double gap = std::abs(approx.x[i] - exact.x[i].get_d());
        worst_gap = std::max(worst_gap, gap);
        c.require(gap <= kModeAgreement, tag + " modes disagree at " + std::to_string(i));
      }
    } catch (const std::exception& e) {
      c.require(false, tag + ": " + e.what());
    }
  }
  std::ostringstream stats;
  stats << "max float residual " << worst_residual << ", max gap " << worst_gap;
  c.note(stats.str());
  return c.report();
}

bool criterion_descent(const std::vector<TracedCase>& traced) {
  Criterion c("5 descent: traced potentials strictly decrease, replay exactly, no violators remain");
  std::size_t moves = 0;
  for (const TracedCase& tc : traced) {
    SolvePolicy policy;
    policy.trace = true;
    try {
      const SolveResult r = solve(tc.graph, tc.lists, policy);
      const std::string problem = replay_trace(tc.graph, tc.lists, r);
      c.require(problem.empty(), tc.label + ": " + problem);
      for (auto s : r.report.recolour_steps) moves += s;
    } catch (const std::exception& e) {
      c.require(false, tc.label + ": " + e.what());
    }
  }
  c.note(std::to_string(traced.size()) + " solves, " + std::to_string(moves) + " moves replayed");
  return c.report();
}

bool criterion_oracle_consistency() {
  Criterion c("6 oracle consistency: opt <= solver eta <= 2/3 on 200 digraphs, n <= 5, lists {1,2,3}");
  static const Rational kDensities[] = {ratio(1, 4), ratio(1, 2), ratio(3, 4)};
  Rng rng(mix_seed(kDefaultEnsembleSeed, 6));
  std::size_t strict = 0;
  for (std::size_t trial = 0; trial < kOracleGraphs; ++trial) {
    const std::size_t n = rng.between(1, kOracleMaxN);
    const Digraph g = gen_random_digraph(n, kDensities[rng.below(3)], rng.next());
    const ListAssignment lists = identical_lists(n, 3);
    const std::string tag = "graph " + std::to_string(trial);
    const OracleResult oracle = oracle_min_max_f(g, lists);
    const SolveResult solved = solve(g, lists);
    const Rational& eta = solved.report.achieved_eta;
    c.require(oracle.opt <= eta, tag + " opt exceeds solver eta");
    c.require(eta <= ratio(2, 3), tag + " solver eta " + to_pq(eta));
    c.require(verify(g, oracle.witness, oracle.opt, &lists).ok, tag + " oracle witness fails verify");
    c.require(verify(g, solved.colouring, eta, &lists).ok, tag + " solver colouring fails verify");
    strict += oracle.opt < eta ? 1 : 0;
  }
  c.note(std::to_string(strict) + " instances with opt < solver eta");
  return c.report();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// One gen -> solve -> verify pipeline through the command-line entry point.
std::vector<std::string> cli_pipeline(const std::filesystem::path& dir, std::string& error) {
  auto file = [&](const char* name) { return (dir / name).string(); };
  const std::vector<std::vector<std::string>> steps = {
      {"gen", "random", "--n", "40", "--p", "1/5", "--seed", "17", "--out", file("g")},
      {"gen", "lists", "--n", "40", "--k", "4", "--palette", "8", "--mode", "random", "--seed", "18", "--out",
       file("l")},
      {"solve", "--graph", file("g"), "--lists", file("l"), "--init", "random", "--seed", "19", "--out", file("c"),
       "--report", file("r"), "--trace"},
      {"verify", "--graph", file("g"), "--colouring", file("c"), "--eta", "1/2", "--lists", file("l")},
      {"oracle", "--graph", file("g"), "--lists", file("l"), "--budget", "1"},
      {"stationary", "--graph", file("g"), "--vertices", "0"},
  };
  std::vector<std::string> outputs;
  for (const auto& args : steps) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    const int expected = args[0] == "oracle" ? 3 : args[0] == "stationary" ? 2 : 0;
    if (status != expected)
      error += args[0] + " exited " + std::to_string(status) + ": " + err.str();
    outputs.push_back(out.str());
    outputs.push_back(err.str());
  }
  for (const char* name : {"g", "l", "c", "r"}) outputs.push_back(slurp(dir / name));
  return outputs;
}

bool criterion_interface() {
  Criterion c("7 interface: CLI pipeline byte-identical across runs; canonical formats round-trip");
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "majority_acceptance";
  fs::remove_all(root);
  std::vector<std::vector<std::string>> runs;
  for (const char* name : {"a", "b"}) {
    fs::create_directories(root / name);
    std::string error;
    runs.push_back(cli_pipeline(root / name, error));
    c.require(error.empty(), std::string("run ") + name + ": " + error);
  }
  c.require(runs[0] == runs[1], "pipeline outputs differ between runs");

  const std::string graph_text = slurp(root / "a" / "g");
  const std::string list_text = slurp(root / "a" / "l");
  const std::string colour_text = slurp(root / "a" / "c");
  const Digraph g = parse_graph(graph_text);
  c.require(serialize_graph(g) == graph_text, "graph round trip");
  c.require(serialize_lists(parse_lists(list_text, g.order())) == list_text, "list round trip");
  c.require(serialize_colouring(parse_colouring(colour_text, g.order())) == colour_text, "colouring round trip");

  Rng rng(mix_seed(kDefaultEnsembleSeed, 7));
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.between(0, 30);
    const Digraph h = gen_random_digraph(n, ratio(rng.between(0, 4), 4), rng.next());
    const std::string text = serialize_graph(h);
    c.require(serialize_graph(parse_graph(text)) == text && parse_graph(text) == h, "random graph round trip");
    if (n == 0) continue;
    const std::size_t k = rng.between(2, 5);
    const ListAssignment lists = gen_lists(n, k, 3 * k, ListMode::random, rng.next());
    const std::string ltext = serialize_lists(lists);
    c.require(serialize_lists(parse_lists(ltext, n)) == ltext, "random list round trip");
    const std::string ctext = serialize_colouring(solve(h, lists).colouring);
    c.require(serialize_colouring(parse_colouring(ctext, n)) == ctext, "random colouring round trip");
  }
  fs::remove_all(root);
  return c.report();
}

}  // namespace

int main() {
  std::vector<TracedCase> traced;
  bool ok = true;
  ok &= criterion_soundness(traced);
  ok &= criterion_even_tightness(traced);
  ok &= criterion_odd_bound(traced);
  ok &= criterion_stationary();
  ok &= criterion_descent(traced);
  ok &= criterion_oracle_consistency();
  ok &= criterion_interface();
  std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return ok ? 0 : 1;
}
