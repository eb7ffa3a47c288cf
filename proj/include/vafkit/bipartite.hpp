// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vafkit/certpath.hpp"
#include "vafkit/core.hpp"
#include "vafkit/graph.hpp"

namespace vafkit {

// Distance parity to the query.  Distances are measured in the undirected
// graph structure; on a bipartite system this agrees with the parity of any
// directed attack path to the query.
struct ParityPartition {
  ArgumentSet even;
  ArgumentSet odd;
  ArgumentSet unreachable;
  std::vector<int> parity;  // 0, 1, or -1 when unreachable
};

ParityPartition parity_partition(const ValueBasedFramework& vaf, ArgIndex query);

struct ValueDigraph {
  std::vector<bool> present;  // per value index
  std::vector<Edge> edges;    // sorted; both endpoints present

  bool has_vertex(ValueIndex v) const { return v < present.size() && present[v]; }
  bool has_edge(ValueIndex u, ValueIndex v) const;
  bool is_path(std::span<const ValueIndex> path) const;
};

// Both throw NotBipartite / ValueWidthExceeded; build_hf_minus also
// UnknownValue.
ValueDigraph build_hf(const ValueBasedFramework& vaf, ArgIndex query);
ValueDigraph build_hf_minus(const ValueBasedFramework& vaf, ArgIndex query, ValueIndex v);

// Value path (v_k, ..., v_1) ending at the query's value, or nullopt.
std::optional<std::vector<ValueIndex>> detect_certifying_path(const ValueBasedFramework& vaf, ArgIndex query);

// Throws LiftingFailed if some value on the path does not split into one
// even and one odd argument, or the lifted sequence is not certifying.
CertifyingPath lift_value_path(const ValueBasedFramework& vaf, ArgIndex query,
                               std::span<const ValueIndex> value_path);

// Value-level characterisation of certifying paths via H_F^{-v}, applied to
// sequences whose x_i and t are even and whose z_i are odd.
bool satisfies_value_path_conditions(const ValueBasedFramework& vaf, ArgIndex query,
                                     std::span<const ArgIndex> sequence);

void require_bipartite(const ValueBasedFramework& vaf);

struct BipartiteSubjective {
  bool accepted = false;
  std::vector<ValueIndex> value_path;
  std::optional<CertifyingPath> path;
  bool fallback = false;  // lifting failed and certpath search decided
};

struct BipartiteObjective {
  ObjectiveResult result;
  bool fallback = false;
};

BipartiteSubjective subjective_bipartite(const ValueBasedFramework& vaf, ArgIndex query);
BipartiteObjective objective_bipartite(const ValueBasedFramework& vaf, ArgIndex query);

}  // namespace vafkit
