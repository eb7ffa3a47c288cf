// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vafkit/core.hpp"

namespace vafkit {

// 3CNF formula; a literal is +v or -v for a variable v in 1..variable_count.
struct CnfFormula {
  int variable_count = 0;
  std::vector<std::array<int, 3>> clauses;

  bool operator==(const CnfFormula&) const = default;
};

// Throws MalformedClause on a zero or out-of-range literal.
void validate_formula(const CnfFormula& phi);

struct Reduction {
  ValueBasedFramework vaf;
  ArgIndex query = 0;
};

// Query x1 is subjectively accepted iff the formula is satisfiable.
Reduction reduce_subjective(const CnfFormula& phi);
// Query x0 is objectively accepted iff the formula is unsatisfiable.
Reduction reduce_objective(const CnfFormula& phi);

// Leading clauses all-positive (at least two of them), the rest
// all-negative.  Otherwise throws NotMonotoneSplit.  With `objective` the
// query is x0 as in reduce_objective.
Reduction reduce_bipartite_valuegraph(const CnfFormula& phi, bool objective = false);

// Assignment indexed by variable (entry 0 unused).  Throws
// TooManyVariables above 24 variables.
std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& phi);

// DIMACS CNF.  Clauses must have exactly three literals.
CnfFormula parse_dimacs(std::string_view text);
std::string emit_dimacs(const CnfFormula& phi);

}  // namespace vafkit
