// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include <cstring>
#include <string>

#include "doctest.h"
#include "vafkit/vafkit.h"

namespace {

std::string path(const char* file) { return std::string(VAFKIT_TEST_DATA) + "/" + file; }

std::string take(char* s) {
  std::string out = s ? s : "";
  vafkit_string_free(s);
  return out;
}

vafkit_framework* load(const char* file) {
  vafkit_framework* f = nullptr;
  REQUIRE(vafkit_load(path(file).c_str(), &f) == VAFKIT_OK);
  return f;
}

}  // namespace

TEST_CASE("load, emit and count") {
  vafkit_framework* f = load("running.vaf");
  CHECK(vafkit_argument_count(f) == 6);
  CHECK(vafkit_value_count(f) == 3);
  char* text = nullptr;
  REQUIRE(vafkit_emit(f, &text) == VAFKIT_OK);
  auto emitted = take(text);
  vafkit_framework* g = nullptr;
  REQUIRE(vafkit_parse(emitted.c_str(), &g) == VAFKIT_OK);
  char* again = nullptr;
  REQUIRE(vafkit_emit(g, &again) == VAFKIT_OK);
  CHECK(take(again) == emitted);
  vafkit_framework_free(g);
  vafkit_framework_free(f);
}

TEST_CASE("errors surface as status codes with messages") {
  vafkit_framework* f = nullptr;
  CHECK(vafkit_parse("value S\natt a b\n", &f) == VAFKIT_SYNTAX_ERROR);
  CHECK(f == nullptr);
  CHECK(std::string(vafkit_last_error()).rfind("2:5:", 0) == 0);
  CHECK(vafkit_parse("value S\narg a S\narg b S\natt a b\natt b a\n", &f) == VAFKIT_MULTIVALUED_CYCLE);
  CHECK(vafkit_load("/nonexistent/file.vaf", &f) == VAFKIT_IO_ERROR);
  CHECK(vafkit_parse(nullptr, &f) == VAFKIT_INVALID_INPUT);
  CHECK(std::strcmp(vafkit_status_name(VAFKIT_NOT_BIPARTITE), "NotBipartite") == 0);
  CHECK(vafkit_parse("value S\narg a S\n", &f) == VAFKIT_OK);
  CHECK(std::string(vafkit_last_error()).empty());
  vafkit_framework_free(f);
}

TEST_CASE("solving through the C interface") {
  vafkit_framework* f = load("running.vaf");
  vafkit_result* r = nullptr;
  REQUIRE(vafkit_solve(f, VAFKIT_SUBJECTIVE, "a", VAFKIT_SOLVER_AUTO, &r) == VAFKIT_OK);
  CHECK(vafkit_result_accepted(r) == 1);
  CHECK(std::string(vafkit_result_solver(r)) == "certpath");
  CHECK(std::string(vafkit_result_path(r)) == "a,b,d,c,f");
  CHECK(vafkit_result_audience(r) != nullptr);
  vafkit_result_free(r);

  REQUIRE(vafkit_solve(f, VAFKIT_OBJECTIVE, "a", VAFKIT_SOLVER_BRUTEFORCE, &r) == VAFKIT_OK);
  CHECK(vafkit_result_accepted(r) == 0);
  CHECK(std::string(vafkit_result_audience(r)) == "E < S < T");
  CHECK(vafkit_result_path(r) == nullptr);
  vafkit_result_free(r);

  for (auto solver : {VAFKIT_SOLVER_BRUTEFORCE, VAFKIT_SOLVER_ORIENTATIONS, VAFKIT_SOLVER_FORMULAS,
                      VAFKIT_SOLVER_CERTPATH}) {
    REQUIRE(vafkit_solve(f, VAFKIT_OBJECTIVE, "e", solver, &r) == VAFKIT_OK);
    CHECK(vafkit_result_accepted(r) == 1);
    vafkit_result_free(r);
  }

  CHECK(vafkit_solve(f, VAFKIT_SUBJECTIVE, "zz", VAFKIT_SOLVER_AUTO, &r) == VAFKIT_UNKNOWN_ARGUMENT);
  CHECK(vafkit_solve(f, VAFKIT_SUBJECTIVE, "a", VAFKIT_SOLVER_BIPARTITE, &r) == VAFKIT_NOT_BIPARTITE);
  CHECK(vafkit_solve(f, VAFKIT_SUBJECTIVE, "a", static_cast<vafkit_solver>(42), &r) == VAFKIT_INVALID_INPUT);

  vafkit_problem p;
  vafkit_solver s;
  CHECK(vafkit_parse_problem("objective", &p) == VAFKIT_OK);
  CHECK(p == VAFKIT_OBJECTIVE);
  CHECK(vafkit_parse_solver("orientations", &s) == VAFKIT_OK);
  CHECK(s == VAFKIT_SOLVER_ORIENTATIONS);
  CHECK(vafkit_parse_solver("nope", &s) == VAFKIT_INVALID_INPUT);
  vafkit_framework_free(f);
}

TEST_CASE("metrics report and DOT export") {
  vafkit_framework* f = load("running.vaf");
  char* out = nullptr;
  REQUIRE(vafkit_metrics_report(f, &out) == VAFKIT_OK);
  auto report = take(out);
  CHECK(report.find("value_width: 2\n") != std::string::npos);
  CHECK(report.find("attack_width: 2\n") != std::string::npos);
  CHECK(report.find("graph_bipartite: false\n") != std::string::npos);

  REQUIRE(vafkit_export_dot(f, "reference", nullptr, &out) == VAFKIT_OK);
  CHECK(take(out) == "digraph G {\n  \"E\";\n  \"S\";\n  \"T\";\n  \"E\" -> \"S\";\n  \"E\" -> \"T\";\n  \"S\" -> \"T\";\n}\n");
  CHECK(vafkit_export_dot(f, "gaifman", nullptr, &out) == VAFKIT_INVALID_INPUT);
  CHECK(vafkit_export_dot(f, "sideways", nullptr, &out) == VAFKIT_INVALID_INPUT);
  vafkit_framework_free(f);

  vafkit_framework* b = load("bipartite.vaf");
  REQUIRE(vafkit_export_dot(b, "hf", "x1", &out) == VAFKIT_OK);
  auto hf = take(out);
  CHECK(hf.find("\"v2\" -> \"v5\";") != std::string::npos);
  REQUIRE(vafkit_export_dot(b, "hf-minus:v4", "x1", &out) == VAFKIT_OK);
  CHECK(take(out).find("\"v2\"") == std::string::npos);
  vafkit_framework_free(b);
}

TEST_CASE("generators") {
  vafkit_framework* f = nullptr;
  char* query = nullptr;
  REQUIRE(vafkit_generate_sat("p cnf 3 1\n1 2 3 0\n", "objective", &f, &query) == VAFKIT_OK);
  CHECK(take(query) == "x0");
  CHECK(vafkit_argument_count(f) == 10);
  vafkit_framework_free(f);
  CHECK(vafkit_generate_sat("p cnf 3 1\n1 2 3 0\n", "bipartite-vg", &f, nullptr) == VAFKIT_NOT_MONOTONE_SPLIT);

  vafkit_framework* a = nullptr;
  vafkit_framework* b = nullptr;
  REQUIRE(vafkit_generate_random(6, 3, 2, 7, &a) == VAFKIT_OK);
  REQUIRE(vafkit_generate_random(6, 3, 2, 7, &b) == VAFKIT_OK);
  char* ta = nullptr;
  char* tb = nullptr;
  vafkit_emit(a, &ta);
  vafkit_emit(b, &tb);
  CHECK(take(ta) == take(tb));
  vafkit_framework_free(a);
  vafkit_framework_free(b);
  CHECK(vafkit_generate_random(2, 3, 2, 1, &a) == VAFKIT_INVALID_INPUT);
}
