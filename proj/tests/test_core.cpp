// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "fixtures.hpp"

using namespace vafkit;
using fixtures::descending;
using fixtures::name_set;

namespace {

ErrorCode code_of(const RawFramework& raw) {
  try {
    ValueBasedFramework::from_raw(raw);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("running example loads with the expected shape") {
  auto f = fixtures::running();
  CHECK(f.size() == 6);
  CHECK(f.value_count() == 3);
  CHECK(f.af().attacks().size() == 6);
  CHECK(metrics(f) == Metrics{2, 2});
  CHECK(f.value_name(f.value_of(f.index_of("c"))) == "E");
  CHECK(f.partner(f.index_of("a")) == f.index_of("b"));
}

TEST_CASE("induced framework for S > E > T drops the two upward attacks") {
  auto f = fixtures::running();
  auto induced = induced_af(f, descending(f, {"S", "E", "T"}));
  CHECK(induced.attacks().size() == 4);
  CHECK_FALSE(induced.attacks(f.index_of("d"), f.index_of("b")));
  CHECK_FALSE(induced.attacks(f.index_of("f"), f.index_of("c")));
  CHECK(induced.attacks(f.index_of("a"), f.index_of("d")));
  CHECK(is_acyclic(induced));
}

TEST_CASE("grounded extensions of all six induced frameworks") {
  auto f = fixtures::running();
  struct Row {
    std::vector<std::string> order;
    std::set<std::string> extension;
  };
  const std::vector<Row> rows = {
      {{"S", "E", "T"}, {"b", "c", "e", "f"}}, {{"E", "S", "T"}, {"b", "c", "e", "f"}},
      {{"E", "T", "S"}, {"b", "c", "e", "f"}}, {{"S", "T", "E"}, {"b", "d", "e", "f"}},
      {{"T", "S", "E"}, {"b", "d", "e", "f"}}, {{"T", "E", "S"}, {"a", "d", "e", "f"}},
  };
  for (const auto& row : rows) {
    CAPTURE(row.order[0] + row.order[1] + row.order[2]);
    auto induced = induced_af(f, descending(f, row.order));
    CHECK(name_set(induced, grounded_extension(induced)) == row.extension);
    CHECK(is_admissible(induced, grounded_extension(induced)));
  }
}

TEST_CASE("grounded labeling rejects cyclic frameworks") {
  auto f = fixtures::running();
  CHECK_FALSE(is_acyclic(f.af()));  // a -> d -> b -> a
  CHECK_THROWS_AS(grounded_labeling(f.af()), Error);
}

TEST_CASE("conflict-freeness and admissibility on the plain framework") {
  auto f = fixtures::running();
  auto set = [&](std::vector<std::string> names) {
    auto s = fixtures::indices(f, names);
    std::sort(s.begin(), s.end());
    return s;
  };
  CHECK(is_admissible(f.af(), set({"f"})));
  CHECK(is_conflict_free(f.af(), set({"a"})));
  CHECK_FALSE(is_admissible(f.af(), set({"a"})));
  CHECK_FALSE(is_conflict_free(f.af(), set({"c", "f"})));
  CHECK(is_admissible(f.af(), {}));
  std::vector<ArgIndex> bogus{42};
  CHECK_THROWS_AS(is_conflict_free(f.af(), bogus), Error);
}

TEST_CASE("subtracting a value drops its arguments and their attacks") {
  auto f = fixtures::running();
  auto reduced = subtract_value(f, f.value_index_of("S"));
  CHECK(reduced.af().names() == std::vector<std::string>{"c", "d", "e", "f"});
  CHECK(reduced.value_names() == std::vector<std::string>{"E", "T"});
  REQUIRE(reduced.af().attacks().size() == 2);
  CHECK(reduced.af().attacks(reduced.index_of("c"), reduced.index_of("d")));
  CHECK(reduced.af().attacks(reduced.index_of("f"), reduced.index_of("c")));
}

TEST_CASE("validation reports every violation class") {
  RawFramework cycle{{"S"}, {{"a", "S"}, {"b", "S"}}, {{"a", "b"}, {"b", "a"}}};
  CHECK(code_of(cycle) == ErrorCode::MultivaluedCycle);
  ValidationReport report;
  CHECK_FALSE(ValueBasedFramework::validate(cycle, report));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].value == "S");
  CHECK(report.violations[0].cycle.size() >= 2);

  RawFramework self{{"S"}, {{"a", "S"}}, {{"a", "a"}}};
  CHECK(code_of(self) == ErrorCode::MultivaluedCycle);

  // A cycle through two values is fine.
  RawFramework mixed{{"S", "T"}, {{"a", "S"}, {"b", "T"}}, {{"a", "b"}, {"b", "a"}}};
  CHECK_NOTHROW(ValueBasedFramework::from_raw(mixed));

  CHECK(code_of({{"S", "T"}, {{"a", "S"}}, {}}) == ErrorCode::UnusedValue);
  CHECK(code_of({{"S"}, {{"a", "S"}, {"a", "S"}}, {}}) == ErrorCode::DuplicateDeclaration);
  CHECK(code_of({{"S", "S"}, {{"a", "S"}}, {}}) == ErrorCode::DuplicateDeclaration);
  CHECK(code_of({{"S"}, {{"a", "X"}}, {}}) == ErrorCode::UnknownValue);
  CHECK(code_of({{"S"}, {{"a", "S"}}, {{"a", "q"}}}) == ErrorCode::UnknownArgument);
}

TEST_CASE("empty framework") {
  auto empty = ValueBasedFramework::from_raw({});
  CHECK(empty.size() == 0);
  CHECK(metrics(empty) == Metrics{0, 0});
  CHECK(grounded_extension(empty.af()).empty());
}

TEST_CASE("specific audiences") {
  auto f = fixtures::running();
  auto aud = descending(f, {"S", "E", "T"});
  CHECK(aud.to_string(f) == "T < E < S");
  CHECK(aud.less(f.value_index_of("T"), f.value_index_of("S")));
  CHECK_THROWS_AS(SpecificAudience({0, 0, 1}), Error);
  CHECK_THROWS_AS(SpecificAudience({0, 3, 1}), Error);
}

TEST_CASE("attack-width counts same-value attacks") {
  RawFramework raw{{"S", "T"}, {{"a", "S"}, {"b", "S"}, {"c", "T"}}, {{"a", "b"}, {"c", "a"}}};
  CHECK(metrics(ValueBasedFramework::from_raw(raw)) == Metrics{2, 1});
}
