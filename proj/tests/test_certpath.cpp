// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "fixtures.hpp"
#include "vafkit/audiences.hpp"
#include "vafkit/certpath.hpp"

using namespace vafkit;
using fixtures::indices;

namespace {

std::optional<PathCondition> violated(const ValueBasedFramework& f, std::vector<std::string> seq) {
  auto v = verify_certifying_path(f, f.index_of(seq.front()), indices(f, seq));
  return v ? std::optional(v->condition) : std::nullopt;
}

bool accepts(const ValueBasedFramework& f, const SpecificAudience& aud, ArgIndex x) {
  auto ge = grounded_extension(induced_af(f, aud));
  return std::binary_search(ge.begin(), ge.end(), x);
}

}  // namespace

TEST_CASE("the dialogue example path certifies a") {
  auto f = fixtures::running();
  CHECK_FALSE(violated(f, {"a", "b", "d", "c", "f"}));
  auto path = find_certifying_path(f, f.index_of("a"));
  REQUIRE(path);
  CHECK(names_of(f.af(), path->arguments) == std::vector<std::string>{"a", "b", "d", "c", "f"});
  CHECK(path->k() == 2);
}

TEST_CASE("single-argument paths") {
  auto f = fixtures::running();
  CHECK_FALSE(violated(f, {"b"}));
  CHECK_FALSE(violated(f, {"c"}));
  CHECK(names_of(f.af(), find_certifying_path(f, f.index_of("b"))->arguments) == std::vector<std::string>{"b"});
  CHECK(violated(f, {"a"}) == PathCondition::C5);  // b attacks a
}

TEST_CASE("each malformed sequence names its first failing condition") {
  auto f = fixtures::running();
  CHECK(violated(f, {"a", "b", "d"}) == PathCondition::C5);  // c attacks d
  CHECK(violated(f, {"a", "c", "d"}) == PathCondition::C1);
  CHECK(violated(f, {"a", "b", "c", "d", "f"}) == PathCondition::C2);
  CHECK(violated(f, {"a", "b", "d", "c"}) == PathCondition::EvenLength);
  CHECK(violated(f, {"a", "b", "a"}) == PathCondition::RepeatedArgument);
  auto wrong = verify_certifying_path(f, f.index_of("a"), indices(f, {"b"}));
  REQUIRE(wrong);
  CHECK(wrong->condition == PathCondition::WrongStart);
  CHECK(verify_certifying_path(f, 0, {})->condition == PathCondition::Empty);
}

TEST_CASE("C3 and C4 violations") {
  RawFramework raw{{"P", "Q", "R"},
                   {{"x", "P"}, {"z", "P"}, {"y", "Q"}, {"w", "Q"}, {"t", "R"}},
                   {{"z", "x"}, {"y", "z"}, {"y", "w"}, {"w", "x"}, {"t", "w"}}};
  auto f = ValueBasedFramework::from_raw(raw);
  CHECK(violated(f, {"x", "z", "t"}) == PathCondition::C4);         // t does not attack z
  CHECK(violated(f, {"x", "z", "y", "w", "t"}) == PathCondition::C3);  // y attacks w
  CHECK(violated(f, {"x", "z", "w", "y", "t"}) == PathCondition::C3);  // w does not attack z
}

TEST_CASE("value-width above two is rejected") {
  RawFramework raw{{"S"}, {{"a", "S"}, {"b", "S"}, {"c", "S"}}, {}};
  auto f = ValueBasedFramework::from_raw(raw);
  CHECK_THROWS_AS(find_certifying_path(f, 0), Error);
  try {
    find_certifying_path(f, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValueWidthExceeded);
  }
}

TEST_CASE("width-2 decisions on the running example") {
  auto f = fixtures::running();
  for (ArgIndex x = 0; x < f.size(); ++x) {
    CAPTURE(f.name(x));
    auto s = subjective_width2(f, x);
    CHECK(s.accepted);
    REQUIRE(s.path);
    CHECK(accepts(f, witness_audience(f, *s.path), x));
    auto o = objective_width2(f, x);
    CHECK(o.accepted == (f.name(x) == "e" || f.name(x) == "f"));
    if (!o.accepted) {
      REQUIRE(o.counterexample);
      CHECK_FALSE(accepts(f, *o.counterexample, x));
    }
  }
}

TEST_CASE("objective counterexamples") {
  auto f = fixtures::running();
  auto a = objective_width2(f, f.index_of("a"));
  CHECK(a.equivalued_attacker);
  CHECK(a.failing_attacker == f.index_of("b"));
  CHECK(a.counterexample->to_string(f) == "E < T < S");

  auto c = objective_width2(f, f.index_of("c"));
  CHECK_FALSE(c.equivalued_attacker);
  CHECK(c.failing_attacker == f.index_of("f"));
  CHECK(c.attacker_path == std::vector<std::string>{"f"});
  CHECK(c.counterexample->to_string(f) == "E < S < T");
}

TEST_CASE("dialogue traces") {
  auto f = fixtures::running();
  auto win = dialogue_trace(f, f.index_of("a"));
  CHECK(win.proponent_wins);
  std::vector<DialogueMove> expected;
  const std::vector<std::string> play{"a", "b", "d", "c", "f"};
  for (std::size_t i = 0; i < play.size(); ++i)
    expected.push_back({i % 2 ? Player::Opponent : Player::Proponent, f.index_of(play[i])});
  CHECK(win.moves == expected);

  RawFramework raw{{"S"}, {{"x", "S"}, {"z", "S"}}, {{"z", "x"}}};
  auto g = ValueBasedFramework::from_raw(raw);
  auto loss = dialogue_trace(g, g.index_of("x"));
  CHECK_FALSE(loss.proponent_wins);
  REQUIRE(loss.moves.size() == 2);
  CHECK(loss.moves[1] == DialogueMove{Player::Opponent, g.index_of("z")});
}

TEST_CASE("certifying paths agree with brute force on random width-2 frameworks") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    RandomParams p;
    p.arguments = 8;
    p.values = 4;
    p.width = 2;
    p.seed = seed;
    auto f = random_vaf(p);
    for (ArgIndex x = 0; x < f.size(); ++x) {
      CAPTURE(seed);
      CAPTURE(f.name(x));
      auto s = subjective_width2(f, x);
      CHECK(s.accepted == subjective_bruteforce(f, x).accepted);
      if (s.path) CHECK_FALSE(verify_certifying_path(f, x, s.path->arguments));
      CHECK(objective_width2(f, x).accepted == objective_bruteforce(f, x).accepted);
    }
  }
}
