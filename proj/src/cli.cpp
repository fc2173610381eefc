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

#include "majority/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "majority/ensemble.hpp"
#include "majority/error.hpp"
#include "majority/formats.hpp"
#include "majority/generators.hpp"
#include "majority/oracle.hpp"
#include "majority/report_json.hpp"
#include "majority/scc.hpp"
#include "majority/solver.hpp"
#include "majority/stationary.hpp"
#include "majority/verifier.hpp"

namespace majority::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << content)) fail(Errc::InvalidArgument, "cannot write '" + path + "'");
}

// Writes to `path`, or to `out` when path is empty.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_file(path, content);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct SolveArgs {
  std::string graph, lists, mode = "rational", init = "first", out, report;
  std::optional<std::uint64_t> seed, max_steps;
  bool trace = false;
};

struct VerifyArgs {
  std::string graph, colouring, eta, lists;
};

struct OracleArgs {
  std::string graph, lists, witness;
  std::uint64_t budget = kDefaultOracleBudget;
};

struct StationaryArgs {
  std::string graph, mode = "rational";
  std::vector<Vertex> vertices;
};

struct GenArgs {
  std::size_t n = 0, k = 0;
  std::optional<std::size_t> palette;
  std::string p, mode = "identical", out;
  std::optional<std::uint64_t> seed;
};

struct BenchArgs {
  std::string suite = "default", mode = "rational";
  unsigned threads = 1;
  std::uint64_t seed = kDefaultEnsembleSeed;
};

Arithmetic parse_mode(const std::string& mode) {
  return mode == "float" ? Arithmetic::floating : Arithmetic::rational;
}

int do_solve(const SolveArgs& a, std::ostream& out) {
  const Digraph g = parse_graph(read_file(a.graph));
  const ListAssignment lists = parse_lists(read_file(a.lists), g.order());
  SolvePolicy policy;
  policy.arithmetic = parse_mode(a.mode);
  policy.init = a.init == "random" ? InitPolicy::seeded_random : InitPolicy::first_entry;
  if (policy.init == InitPolicy::seeded_random && !a.seed) {
    fail(Errc::InvalidArgument, "--init random requires --seed");
  }
  policy.seed = a.seed.value_or(0);
  policy.max_steps = a.max_steps;
  policy.trace = a.trace;

  const SolveResult result = solve(g, lists, policy);
  Json report = to_json(result.report);
  const std::string colouring = serialize_colouring(result.colouring);
  if (a.out.empty()) {
    report["colouring"] = colouring;
  } else {
    write_file(a.out, colouring);
  }
  emit(a.report, dump(report), out);
  return kOk;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const Rational eta = parse_rational(a.eta);
  const Digraph g = parse_graph(read_file(a.graph));
  const Colouring c = parse_colouring(read_file(a.colouring), g.order());
  std::optional<ListAssignment> lists;
  if (!a.lists.empty()) lists.emplace(parse_lists(read_file(a.lists), g.order()));
  const VerifyReport report = verify(g, c, eta, lists ? &*lists : nullptr);
  out << dump(to_json(report, eta));
  return report.ok ? kOk : kFailed;
}

int do_oracle(const OracleArgs& a, std::ostream& out) {
  const Digraph g = parse_graph(read_file(a.graph));
  const ListAssignment lists = parse_lists(read_file(a.lists), g.order());
  const OracleResult result = oracle_min_max_f(g, lists, a.budget);
  if (!a.witness.empty()) write_file(a.witness, serialize_colouring(result.witness));
  out << dump(to_json(result));
  return kOk;
}

int do_stationary(const StationaryArgs& a, std::ostream& out) {
  const Digraph g = parse_graph(read_file(a.graph));
  std::vector<Vertex> members = a.vertices;
  if (members.empty()) {
    for (Vertex v = 0; v < g.order(); ++v) members.push_back(v);
  }
  const WalkMatrix walk = walk_matrix(g, VertexSet(members));
  std::ostringstream text;
  if (parse_mode(a.mode) == Arithmetic::rational) {
    const Weights w = stationary_rational(walk);
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
      text << w.vertices[i] << ' ' << to_pq(w.x[i]) << '\n';
    }
  } else {
    const FloatWeights w = stationary_float(walk);
    text << std::setprecision(17);
    for (std::size_t i = 0; i < w.vertices.size(); ++i) text << w.vertices[i] << ' ' << w.x[i] << '\n';
  }
  out << text.str();
  return kOk;
}

int do_bench(const BenchArgs& a, std::ostream& out) {
  const std::size_t count = a.suite == "quick" ? 100 : 1000;
  const BenchSummary s = run_soundness_suite(count, a.seed, a.threads, parse_mode(a.mode));
  std::ostringstream table;
  table << std::left << std::setw(12) << "suite" << std::setw(11) << "instances" << std::setw(8)
        << "passed" << std::setw(11) << "max_steps" << "wall_s\n";
  table << std::setw(12) << a.suite << std::setw(11) << s.instances << std::setw(8) << s.passed
        << std::setw(11) << s.max_steps << std::fixed << std::setprecision(3) << s.wall_seconds
        << '\n';
  out << table.str();
  return s.passed == s.instances ? kOk : kFailed;
}

int status_for(const Error& e) {
  switch (e.code()) {
    case Errc::BudgetExceeded: return kBudgetExceeded;
    case Errc::StepCapExceeded: return kFailed;
    default: return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"2/k-majority list colouring of digraphs", "majority"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "colour a digraph from its lists");
  solve_cmd->add_option("--graph", solve_args.graph, "graph file")->required();
  solve_cmd->add_option("--lists", solve_args.lists, "lists file")->required();
  solve_cmd->add_option("--mode", solve_args.mode)->check(CLI::IsMember({"rational", "float"}));
  solve_cmd->add_option("--init", solve_args.init)->check(CLI::IsMember({"first", "random"}));
  solve_cmd->add_option("--seed", solve_args.seed);
  solve_cmd->add_option("--max-steps", solve_args.max_steps);
  solve_cmd->add_option("--out", solve_args.out, "colouring output file");
  solve_cmd->add_option("--report", solve_args.report, "write the JSON report here instead of stdout");
  solve_cmd->add_flag("--trace", solve_args.trace, "include per-component potential traces");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check an eta-majority colouring");
  verify_cmd->add_option("--graph", verify_args.graph)->required();
  verify_cmd->add_option("--colouring", verify_args.colouring)->required();
  verify_cmd->add_option("--eta", verify_args.eta, "exact rational p/q")->required();
  verify_cmd->add_option("--lists", verify_args.lists);

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive min over colourings of max f");
  oracle_cmd->add_option("--graph", oracle_args.graph)->required();
  oracle_cmd->add_option("--lists", oracle_args.lists)->required();
  oracle_cmd->add_option("--budget", oracle_args.budget);
  oracle_cmd->add_option("--witness", oracle_args.witness, "write the optimal colouring here");

  StationaryArgs stationary_args;
  auto* stationary_cmd = app.add_subcommand("stationary", "stationary vector of a strong component");
  stationary_cmd->add_option("--graph", stationary_args.graph)->required();
  stationary_cmd->add_option("--mode", stationary_args.mode)->check(CLI::IsMember({"rational", "float"}));
  stationary_cmd->add_option("--vertices", stationary_args.vertices, "subset S (default: all)")
      ->delimiter(',');

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->require_subcommand(1);
  auto* gen_tournament = gen_cmd->add_subcommand("tournament", "rotational regular tournament");
  gen_tournament->add_option("--n", gen_args.n)->required();
  gen_tournament->add_option("--out", gen_args.out);
  auto* gen_random = gen_cmd->add_subcommand("random", "random digraph G(n, p)");
  gen_random->add_option("--n", gen_args.n)->required();
  gen_random->add_option("--p", gen_args.p, "exact rational p/q")->required();
  gen_random->add_option("--seed", gen_args.seed)->required();
  gen_random->add_option("--out", gen_args.out);
  auto* gen_lists_cmd = gen_cmd->add_subcommand("lists", "list assignment");
  gen_lists_cmd->add_option("--n", gen_args.n)->required();
  gen_lists_cmd->add_option("--k", gen_args.k)->required();
  gen_lists_cmd->add_option("--palette", gen_args.palette, "default: k");
  gen_lists_cmd->add_option("--mode", gen_args.mode)->check(CLI::IsMember({"identical", "random"}));
  gen_lists_cmd->add_option("--seed", gen_args.seed);
  gen_lists_cmd->add_option("--out", gen_args.out);

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "random-ensemble soundness suite");
  bench_cmd->add_option("--suite", bench_args.suite)->check(CLI::IsMember({"default", "quick"}));
  bench_cmd->add_option("--threads", bench_args.threads);
  bench_cmd->add_option("--seed", bench_args.seed);
  bench_cmd->add_option("--mode", bench_args.mode)->check(CLI::IsMember({"rational", "float"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "majority: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*solve_cmd) return do_solve(solve_args, out);
    if (*verify_cmd) return do_verify(verify_args, out);
    if (*oracle_cmd) return do_oracle(oracle_args, out);
    if (*stationary_cmd) return do_stationary(stationary_args, out);
    if (*bench_cmd) return do_bench(bench_args, out);
    if (*gen_tournament) {
      emit(gen_args.out, serialize_graph(gen_regular_tournament(gen_args.n)), out);
    } else if (*gen_random) {
      const Rational p = parse_rational(gen_args.p);
      emit(gen_args.out, serialize_graph(gen_random_digraph(gen_args.n, p, *gen_args.seed)), out);
    } else if (*gen_lists_cmd) {
      const ListMode mode = gen_args.mode == "random" ? ListMode::random : ListMode::identical;
      if (mode == ListMode::random && !gen_args.seed) {
        fail(Errc::InvalidArgument, "--mode random requires --seed");
      }
      const ListAssignment lists = gen_lists(gen_args.n, gen_args.k, gen_args.palette.value_or(gen_args.k),
                                             mode, gen_args.seed.value_or(0));
      emit(gen_args.out, serialize_lists(lists), out);
    }
    return kOk;
  } catch (const Error& e) {
    err << "majority: " << e.what() << '\n';
    return status_for(e);
  }
}

}  // namespace majority::cli
