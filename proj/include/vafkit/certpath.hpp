// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vafkit/core.hpp"

namespace vafkit {

/// Odd-length sequence (x1, z1, ..., xk, zk, t) of distinct arguments.
/// Positions 0, 2, 4, ... are proponent arguments; odd positions are their
/// equivalued opponents.
struct CertifyingPath {
  std::vector<ArgIndex> arguments;

  std::size_t k() const { return arguments.size() / 2; }
  ArgIndex query() const { return arguments.front(); }
  ArgIndex terminal() const { return arguments.back(); }

  bool operator==(const CertifyingPath&) const = default;
};

enum class PathCondition {
  Empty,
  WrongStart,
  EvenLength,
  RepeatedArgument,
  C1,  // z_i shares x_i's value
  C2,  // z_i attacks some x_j, j <= i
  C3,  // x_i attacks z_{i-1} and none of z_i, x_1..x_{i-1}
  C4,  // t attacks z_k and no x_i
  C5,  // t's partner is attacked by t or attacks none of x_1..x_k, t
};

const char* to_string(PathCondition condition);

struct PathViolation {
  PathCondition condition;
  std::size_t index;  // 1-based i of the offending pair, or the sequence position
  std::string detail;
};

// Throws ValueWidthExceeded when some value holds more than two arguments.
std::optional<PathViolation> verify_certifying_path(const ValueBasedFramework& vaf, ArgIndex x,
                                                    std::span<const ArgIndex> sequence);

// Backtracking over proponent choices in index order; opponent replies are
// forced.  The result always passes verify_certifying_path.
std::optional<CertifyingPath> find_certifying_path(const ValueBasedFramework& vaf, ArgIndex x);

struct SubjectiveResult {
  bool accepted = false;
  std::optional<CertifyingPath> path;
};

struct ObjectiveResult {
  bool accepted = false;
  std::optional<ArgIndex> failing_attacker;        // index in the queried framework
  bool equivalued_attacker = false;
  std::vector<std::string> attacker_path;          // certifying path in F - value(x), by name
  std::optional<SpecificAudience> counterexample;  // audience rejecting x
};

SubjectiveResult subjective_width2(const ValueBasedFramework& vaf, ArgIndex x);
ObjectiveResult objective_width2(const ValueBasedFramework& vaf, ArgIndex x);

// Audience that accepts the path's query: value(x1) < ... < value(xk) <
// value(t), every other value below value(x1) in index order.
SpecificAudience witness_audience(const ValueBasedFramework& vaf, const CertifyingPath& path);

enum class Player { Proponent, Opponent };

struct DialogueMove {
  Player mover;
  ArgIndex argument;

  bool operator==(const DialogueMove&) const = default;
};

struct DialogueTrace {
  std::vector<DialogueMove> moves;
  bool proponent_wins = false;
};

// Winning play along the found certifying path, or the leftmost losing play.
DialogueTrace dialogue_trace(const ValueBasedFramework& vaf, ArgIndex x);

void require_value_width_two(const ValueBasedFramework& vaf);

}  // namespace vafkit
