// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.  Talks to the library only through vafkit.h.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vafkit/vafkit.h"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct FrameworkDeleter {
  void operator()(vafkit_framework* f) const { vafkit_framework_free(f); }
};
struct ResultDeleter {
  void operator()(vafkit_result* r) const { vafkit_result_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { vafkit_string_free(s); }
};
using Framework = std::unique_ptr<vafkit_framework, FrameworkDeleter>;
using Result = std::unique_ptr<vafkit_result, ResultDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Thrown after a failed library call; carries the library's message.
struct Failure {
  std::string message;
};

void check(vafkit_status status) {
  if (status != VAFKIT_OK)
    throw Failure{std::string(vafkit_status_name(status)) + ": " + vafkit_last_error()};
}

Framework load(const std::string& path) {
  vafkit_framework* f = nullptr;
  check(vafkit_load(path.c_str(), &f));
  return Framework(f);
}

void print_owned(char* s) {
  OwnedString owned(s);
  std::fputs(owned.get(), stdout);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"IoError: cannot open " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct SolveOptions {
  std::string problem = "subjective";
  std::string argument;
  std::string solver = "auto";
  bool witness = false;
  std::string file;
};

int run_solve(const SolveOptions& o) {
  vafkit_problem problem;
  vafkit_solver solver;
  check(vafkit_parse_problem(o.problem.c_str(), &problem));
  check(vafkit_parse_solver(o.solver.c_str(), &solver));
  auto f = load(o.file);
  vafkit_result* raw = nullptr;
  check(vafkit_solve(f.get(), problem, o.argument.c_str(), solver, &raw));
  Result r(raw);
  const bool yes = vafkit_result_accepted(r.get()) != 0;
  std::printf("%s\n", yes ? "YES" : "NO");
  if (o.witness) {
    std::printf("solver: %s\n", vafkit_result_solver(r.get()));
    if (const char* path = vafkit_result_path(r.get())) std::printf("certifying_path: %s\n", path);
    if (const char* audience = vafkit_result_audience(r.get()))
      std::printf("%s: %s\n", yes ? "witness_audience" : "counterexample_audience", audience);
    if (const char* attacker = vafkit_result_failing_attacker(r.get()))
      std::printf("failing_attacker: %s\n", attacker);
    if (vafkit_result_fallback(r.get())) std::printf("fallback: certifying-path search\n");
  }
  return yes ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Value-based argumentation framework toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vafkit_version()));

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide subjective or objective acceptance");
  solve_cmd->add_option("--problem", solve.problem, "subjective | objective")->required();
  solve_cmd->add_option("--arg", solve.argument, "Query argument")->required();
  solve_cmd->add_option("--solver", solve.solver, "auto | bruteforce | orientations | formulas | certpath | bipartite");
  solve_cmd->add_flag("--witness", solve.witness, "Print witness or counterexample");
  solve_cmd->add_option("file", solve.file, "Framework file")->required();

  std::string metrics_file;
  auto* metrics_cmd = app.add_subcommand("metrics", "Print structural measures");
  metrics_cmd->add_option("file", metrics_file, "Framework file")->required();

  std::string check_file;
  auto* check_cmd = app.add_subcommand("check", "Validate and print the canonical document");
  check_cmd->add_option("file", check_file, "Framework file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate frameworks");
  gen_cmd->require_subcommand(1);
  std::string cnf_file, variant = "subjective";
  auto* sat_cmd = gen_cmd->add_subcommand("sat", "Reduction gadget from a 3CNF formula");
  sat_cmd->add_option("--cnf", cnf_file, "DIMACS file")->required();
  sat_cmd->add_option("--variant", variant, "subjective | objective | bipartite-vg | bipartite-vg-objective");
  std::size_t n_args = 6, n_values = 3, width = 2;
  std::uint64_t seed = 1;
  auto* random_cmd = gen_cmd->add_subcommand("random", "Random framework satisfying the cycle assumption");
  random_cmd->add_option("--args", n_args, "Number of arguments");
  random_cmd->add_option("--values", n_values, "Number of values");
  random_cmd->add_option("--width", width, "Maximum arguments per value");
  random_cmd->add_option("--seed", seed, "Generator seed");

  std::string graph, query, format = "dot", export_file;
  auto* export_cmd = app.add_subcommand("export", "Export a graphical model");
  export_cmd->add_option("--graph", graph, "structure | value | extended | gaifman | reference | hf | hf-minus:<v>")
      ->required();
  export_cmd->add_option("--arg", query, "Query argument (gaifman, hf, hf-minus)");
  export_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot"}));
  export_cmd->add_option("file", export_file, "Framework file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*metrics_cmd) {
      auto f = load(metrics_file);
      char* out = nullptr;
      check(vafkit_metrics_report(f.get(), &out));
      print_owned(out);
    } else if (*check_cmd) {
      auto f = load(check_file);
      char* out = nullptr;
      check(vafkit_emit(f.get(), &out));
      print_owned(out);
    } else if (*sat_cmd) {
      auto text = slurp(cnf_file);
      vafkit_framework* raw = nullptr;
      char* q = nullptr;
      check(vafkit_generate_sat(text.c_str(), variant.c_str(), &raw, &q));
      Framework f(raw);
      OwnedString query_name(q);
      char* out = nullptr;
      check(vafkit_emit(f.get(), &out));
      std::printf("# query: %s\n", query_name.get());
      print_owned(out);
    } else if (*random_cmd) {
      vafkit_framework* raw = nullptr;
      check(vafkit_generate_random(n_args, n_values, width, seed, &raw));
      Framework f(raw);
      char* out = nullptr;
      check(vafkit_emit(f.get(), &out));
      print_owned(out);
    } else if (*export_cmd) {
      auto f = load(export_file);
      char* out = nullptr;
      check(vafkit_export_dot(f.get(), graph.c_str(), query.empty() ? nullptr : query.c_str(), &out));
      print_owned(out);
    }
  } catch (const Failure& failure) {
    std::fprintf(stderr, "vafkit: %s\n", failure.message.c_str());
    return kError;
  }
  return 0;
}
