// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vafkit/core.hpp"

namespace vafkit {

// Exceeding a limit raises an error; nothing is silently truncated.
struct EnumerationLimits {
  std::size_t max_values = 8;             // audience enumeration (k!)
  std::size_t max_reference_edges = 20;   // orientation enumeration (2^|E_R|)
  std::size_t max_formula_arguments = 12; // subset enumeration in formula evaluation
};

/// Streams every specific audience once, in lexicographic order of the
/// ascending value sequence.
class AudienceEnumerator {
 public:
  explicit AudienceEnumerator(const ValueBasedFramework& vaf, const EnumerationLimits& limits = {});

  std::optional<SpecificAudience> next();

 private:
  std::vector<ValueIndex> current_;
  bool done_ = false;
};

std::vector<SpecificAudience> enumerate_audiences(const ValueBasedFramework& vaf,
                                                  const EnumerationLimits& limits = {});

// For subjective acceptance `audience` is the witness; for objective
// acceptance it is the counterexample.  Both are the first in enumeration
// order.
struct AudienceDecision {
  bool accepted = false;
  std::optional<SpecificAudience> audience;
};

AudienceDecision subjective_bruteforce(const ValueBasedFramework& vaf, ArgIndex x,
                                       const EnumerationLimits& limits = {});
AudienceDecision objective_bruteforce(const ValueBasedFramework& vaf, ArgIndex x,
                                      const EnumerationLimits& limits = {});

// Reference graph over the values.  The fixed base order is the index order,
// i.e. lexicographic on value identifiers, so every edge has from < to.
struct ReferenceGraph {
  std::size_t value_count = 0;
  std::vector<Edge> edges;  // sorted
};

struct Orientation {
  std::vector<Edge> reversed;  // subset of ReferenceGraph::edges, sorted
};

ReferenceGraph reference_graph(const ValueBasedFramework& vaf);

// R[Q]; throws InvalidOrientation when q is not a subset of r's edges.
DirectedGraph orient(const ValueBasedFramework& vaf, const ReferenceGraph& r, const Orientation& q);

// F[Q]: drops (x, y) when (value(x), value(y)) is an edge of R[Q].
// Throws CyclicOrientation when R[Q] has a cycle.
ArgumentationFramework induced_by_orientation(const ValueBasedFramework& vaf,
                                              const ReferenceGraph& r, const Orientation& q);

// Audience whose induced framework equals F[Q]: a topological order of R[Q]
// with ties broken by smallest value index.
SpecificAudience audience_from_orientation(const ValueBasedFramework& vaf, const ReferenceGraph& r,
                                           const Orientation& q);

struct OrientationDecision {
  bool accepted = false;
  std::optional<Orientation> orientation;  // witness / counterexample
};

OrientationDecision subjective_via_orientations(const ValueBasedFramework& vaf, ArgIndex x,
                                                const EnumerationLimits& limits = {});
OrientationDecision objective_via_orientations(const ValueBasedFramework& vaf, ArgIndex x,
                                               const EnumerationLimits& limits = {});

// Direct evaluation of the acceptance sentences over the relational encoding
// (tail/head relations on reference edges, attack relation, value relation,
// query marker).  Exponential in |E_R| and |X|; throws TooLarge past limits.
bool eval_phi_s(const ValueBasedFramework& vaf, ArgIndex x, const EnumerationLimits& limits = {});
bool eval_phi_o(const ValueBasedFramework& vaf, ArgIndex x, const EnumerationLimits& limits = {});

}  // namespace vafkit
