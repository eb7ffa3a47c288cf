// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vafkit/audiences.hpp"
#include "vafkit/core.hpp"

namespace vafkit {

enum class Problem { Subjective, Objective };

enum class SolverChoice { Auto, Bruteforce, Orientations, Formulas, Certpath, Bipartite };

const char* to_string(Problem problem);
const char* to_string(SolverChoice choice);
std::optional<Problem> parse_problem(std::string_view text);
std::optional<SolverChoice> parse_solver(std::string_view text);

struct SolveReport {
  bool accepted = false;
  SolverChoice solver = SolverChoice::Auto;  // the solver that decided
  // Witness (subjective YES) or counterexample (objective NO), when the
  // solver produces one.
  std::optional<SpecificAudience> audience;
  std::vector<std::string> path;              // certifying path, subjective YES
  std::optional<std::string> failing_attacker;  // objective NO via attackers
  bool fallback = false;                      // bipartite lifting fell back to path search
};

// Concrete solvers that can run on `vaf` within `limits`, in a fixed order.
std::vector<SolverChoice> applicable_solvers(const ValueBasedFramework& vaf, const EnumerationLimits& limits = {});

// Auto: bipartite, then certpath, then the cheaper of audience and
// orientation enumeration.  Throws TooLarge when nothing applies.
SolverChoice choose_solver(const ValueBasedFramework& vaf, const EnumerationLimits& limits = {});

SolveReport solve(const ValueBasedFramework& vaf, Problem problem, ArgIndex x,
                  SolverChoice choice = SolverChoice::Auto, const EnumerationLimits& limits = {});

}  // namespace vafkit
