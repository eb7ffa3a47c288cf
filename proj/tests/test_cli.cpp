// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

std::string data(const char* file) { return std::string(VAFKIT_TEST_DATA) + "/" + file; }

Run run(const std::string& args) {
  std::string command = std::string("'") + VAFKIT_CLI + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size())) ++count;
  return count;
}

}  // namespace

TEST_CASE("solve exit codes and witnesses") {
  const auto running = data("running.vaf");
  auto yes = run("solve --problem subjective --arg a --witness " + running);
  CHECK(yes.status == 0);
  CHECK(has_line(yes.out, "YES"));
  CHECK(has_line(yes.out, "certifying_path: a,b,d,c,f"));
  CHECK(yes.out.find("witness_audience: ") != std::string::npos);

  auto no = run("solve --problem objective --arg a --witness " + running);
  CHECK(no.status == 1);
  CHECK(has_line(no.out, "NO"));
  CHECK(no.out.find("counterexample_audience: ") != std::string::npos);

  auto brute = run("solve --problem objective --arg a --solver bruteforce --witness " + running);
  CHECK(brute.status == 1);
  CHECK(has_line(brute.out, "counterexample_audience: E < S < T"));

  CHECK(run("solve --problem objective --arg e " + running).status == 0);
  CHECK(run("solve --problem objective --arg f " + running).status == 0);

  CHECK(run("solve --problem subjective --arg nope " + running).status == 2);
  CHECK(run("solve --problem sideways --arg a " + running).status == 2);
  CHECK(run("solve --problem subjective --arg a --solver bipartite " + running).status == 2);
  CHECK(run("solve --problem subjective --arg a /nonexistent.vaf").status == 2);
  CHECK(run("solve --arg a " + running).status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("exit-code contract for every solver on the golden corpus") {
  const auto running = data("running.vaf");
  const auto bip = data("bipartite.vaf");
  const char* args[] = {"a", "b", "c", "d", "e", "f"};
  for (const char* solver : {"auto", "bruteforce", "orientations", "formulas", "certpath"}) {
    for (const char* x : args) {
      CAPTURE(solver);
      CAPTURE(x);
      const std::string base = std::string(" --arg ") + x + " --solver " + solver + " " + running;
      CHECK(run("solve --problem subjective" + base).status == 0);
      const bool objective = std::string(x) == "e" || std::string(x) == "f";
      CHECK(run("solve --problem objective" + base).status == (objective ? 0 : 1));
    }
  }
  for (const char* x : {"x1", "z1", "x3", "z5"}) {
    std::array<int, 2> reference{-1, -1};
    for (const char* solver : {"bruteforce", "orientations", "certpath", "bipartite", "auto"}) {
      CAPTURE(solver);
      CAPTURE(x);
      int i = 0;
      for (const char* problem : {"subjective", "objective"}) {
        const int status =
            run(std::string("solve --problem ") + problem + " --arg " + x + " --solver " + solver + " " + bip).status;
        CHECK((status == 0 || status == 1));
        if (reference[i] < 0) reference[i] = status;
        CHECK(status == reference[i]);
        ++i;
      }
    }
  }
  CHECK(run("solve --problem subjective --arg x1 " + bip).status == 0);
}

TEST_CASE("metrics") {
  auto f = run("metrics " + data("running.vaf"));
  CHECK(f.status == 0);
  CHECK(has_line(f.out, "value_width: 2"));
  CHECK(has_line(f.out, "attack_width: 2"));
  CHECK(has_line(f.out, "graph_bipartite: false"));
  CHECK(has_line(f.out, "multivalued_cycles_assumption: true"));

  auto b = run("metrics " + data("bipartite.vaf"));
  CHECK(has_line(b.out, "graph_bipartite: true"));

  auto e = run("metrics " + data("empty.vaf"));
  CHECK(e.status == 0);
  CHECK(has_line(e.out, "arguments: 0"));
  CHECK(has_line(e.out, "value_width: 0"));
  CHECK(has_line(e.out, "graph_bipartite: true"));
}

TEST_CASE("DOT export") {
  auto ext = run("export --graph extended --format dot " + data("running.vaf"));
  CHECK(ext.status == 0);
  CHECK(ext.out.rfind("graph G {\n", 0) == 0);
  CHECK(count_of(ext.out, " -- ") == 7);
  CHECK(ext.out.find("\"e\" -- \"f\";") != std::string::npos);
  CHECK(count_of(ext.out, "\";\n") - count_of(ext.out, " -- ") == 6);
  CHECK(run("export --graph extended --format dot " + data("running.vaf")).out == ext.out);

  auto hf = run("export --graph hf --arg x1 " + data("bipartite.vaf"));
  CHECK(hf.status == 0);
  CHECK(hf.out.rfind("digraph G {\n", 0) == 0);
  CHECK(count_of(hf.out, " -> ") == 6);
  CHECK(count_of(hf.out, "\";\n") - count_of(hf.out, " -> ") == 5);

  auto minus = run("export --graph hf-minus:v3 --arg x1 " + data("bipartite.vaf"));
  CHECK(minus.status == 0);
  CHECK(count_of(minus.out, " -> ") == 4);

  CHECK(run("export --graph structure " + data("empty.vaf")).out == "graph G {\n}\n");
  CHECK(run("export --graph hf " + data("bipartite.vaf")).status == 2);
  CHECK(run("export --graph hf-minus:v9 --arg x1 " + data("bipartite.vaf")).status == 2);
  CHECK(run("export --graph structure --format svg " + data("running.vaf")).status == 2);
}

TEST_CASE("generators") {
  auto a = run("gen random --args 6 --values 3 --width 2 --seed 1");
  auto b = run("gen random --args 6 --values 3 --width 2 --seed 1");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(count_of(a.out, "\narg ") + (a.out.rfind("arg ", 0) == 0) == 6);
  CHECK(run("gen random --args 7 --values 3 --width 2 --seed 1").status == 2);

  auto sat = run("gen sat --cnf " + data("hardness.cnf") + " --variant subjective");
  CHECK(sat.status == 0);
  CHECK(sat.out.rfind("# query: x1\n", 0) == 0);
  CHECK(count_of(sat.out, "\narg ") == 25);
  CHECK(count_of(sat.out, "\nvalue ") == 13);

  auto obj = run("gen sat --cnf " + data("hardness.cnf") + " --variant objective");
  CHECK(obj.out.rfind("# query: x0\n", 0) == 0);
  CHECK(count_of(obj.out, "\narg ") == 26);

  CHECK(run("gen sat --cnf " + data("hardness.cnf") + " --variant bipartite-vg").status == 2);
  CHECK(run("gen sat --cnf /nonexistent.cnf").status == 2);

  auto check = run("check " + data("running.vaf"));
  CHECK(check.status == 0);
  CHECK(check.out.rfind("value E\nvalue S\nvalue T\n", 0) == 0);
}
