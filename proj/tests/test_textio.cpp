// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "fixtures.hpp"
#include "vafkit/solver.hpp"
#include "vafkit/structure.hpp"

using namespace vafkit;

namespace {

std::pair<std::size_t, std::size_t> syntax_position(const std::string& text) {
  try {
    parse_vaf(text);
  } catch (const SyntaxError& e) {
    return {e.line(), e.column()};
  }
  FAIL("expected a syntax error");
  return {0, 0};
}

}  // namespace

TEST_CASE("parse and emit round trip") {
  auto f = fixtures::running();
  auto text = emit_vaf(f);
  CHECK(text.rfind("value E\nvalue S\nvalue T\narg a S\n", 0) == 0);
  CHECK(parse_vaf(text) == f);
  CHECK(emit_vaf(parse_vaf(text)) == text);

  // Comments, blank lines and odd spacing are tolerated.
  auto loose = parse_vaf("  value S # first\n\nvalue T\narg b T\r\narg a   S\natt a b\n");
  CHECK(emit_vaf(loose) == "value S\nvalue T\narg a S\narg b T\natt a b\n");
}

TEST_CASE("syntax errors carry positions") {
  CHECK(syntax_position("value S\natt a b\n") == std::pair<std::size_t, std::size_t>{2, 5});
  CHECK(syntax_position("value S\narg a X\n") == std::pair<std::size_t, std::size_t>{2, 7});
  CHECK(syntax_position("value S\nfoo a\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(syntax_position("value S T\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(syntax_position("value S-1\n") == std::pair<std::size_t, std::size_t>{1, 7});
  CHECK_THROWS_AS(parse_vaf("value S\narg a S\narg b S\natt a b\natt b a\n"), Error);
}

TEST_CASE("empty document") {
  auto f = parse_vaf(read_file(fixtures::data_path("empty.vaf")));
  CHECK(f.size() == 0);
  CHECK(emit_vaf(f).empty());
  CHECK(to_dot(graph_structure(f)) == "graph G {\n}\n");
  CHECK(to_dot(value_graph(f)) == "digraph G {\n}\n");
}

TEST_CASE("DOT output is canonical") {
  auto f = fixtures::running();
  auto dot = to_dot(extended_structure(f));
  CHECK(dot.rfind("graph G {\n  \"a\";\n", 0) == 0);
  CHECK(dot.find("\"e\" -- \"f\";") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 6 + 7 + 1);
  CHECK(to_dot(value_graph(f)).find("\"S\" -> \"E\";") != std::string::npos);
  CHECK(to_dot(extended_structure(fixtures::running())) == dot);
}

TEST_CASE("random generator") {
  RandomParams p;
  p.arguments = 6;
  p.values = 3;
  p.width = 2;
  p.seed = 1;
  CHECK(emit_vaf(random_vaf(p)) == emit_vaf(random_vaf(p)));
  p.seed = 2;
  auto other = random_vaf(p);
  CHECK(other.size() == 6);
  CHECK(other.value_count() == 3);
  CHECK(metrics(other).value_width <= 2);

  p.width = 1;
  p.values = 6;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    p.seed = seed;
    CHECK(metrics(random_vaf(p)).attack_width == 0);
  }

  p = {};
  p.arguments = 30;
  p.values = 4;
  p.width = 10;
  p.density = 0.5;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    p.seed = seed;
    CHECK_NOTHROW(random_vaf(p));  // validation would reject an intra-value cycle
  }

  p.bipartite = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    p.seed = seed;
    CHECK(is_bipartite(graph_structure(random_vaf(p))).bipartite);
  }

  RandomParams bad;
  bad.arguments = 2;
  bad.values = 3;
  CHECK_THROWS_AS(random_vaf(bad), Error);
  bad.arguments = 7;
  bad.width = 2;
  CHECK_THROWS_AS(random_vaf(bad), Error);
}

TEST_CASE("solver dispatch") {
  auto f = fixtures::running();
  CHECK(choose_solver(f) == SolverChoice::Certpath);
  CHECK(choose_solver(fixtures::bipartite()) == SolverChoice::Bipartite);
  auto applicable = applicable_solvers(f);
  CHECK(applicable == std::vector<SolverChoice>{SolverChoice::Bruteforce, SolverChoice::Orientations,
                                                SolverChoice::Formulas, SolverChoice::Certpath});

  // Width 3 with one reference edge: 2 orientations against 3! audiences.
  RawFramework wide{{"S", "T", "U"}, {{"a", "S"}, {"b", "S"}, {"c", "S"}, {"d", "T"}, {"e", "U"}}, {{"d", "a"}}};
  CHECK(choose_solver(ValueBasedFramework::from_raw(wide)) == SolverChoice::Orientations);

  auto report = solve(f, Problem::Subjective, f.index_of("a"));
  CHECK(report.accepted);
  CHECK(report.path == std::vector<std::string>{"a", "b", "d", "c", "f"});
  auto objective = solve(f, Problem::Objective, f.index_of("a"), SolverChoice::Bruteforce);
  CHECK_FALSE(objective.accepted);
  REQUIRE(objective.audience);
  CHECK(objective.audience->to_string(f) == "E < S < T");

  CHECK(parse_solver("formulas") == SolverChoice::Formulas);
  CHECK_FALSE(parse_solver("magic"));
  CHECK(parse_problem("objective") == Problem::Objective);
  CHECK_THROWS_AS(solve(f, Problem::Subjective, 99), Error);
  CHECK_THROWS_AS(solve(f, Problem::Subjective, 0, SolverChoice::Bipartite), Error);
}
