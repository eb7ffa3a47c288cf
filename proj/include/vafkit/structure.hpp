// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vafkit/core.hpp"
#include "vafkit/graph.hpp"

namespace vafkit {

// Graphical models.  Vertex names are argument or value identifiers, except
// in the Gaifman graph where atoms are prefixed by sort: "arg:a", "val:S",
// "ref:(E,S)".
UndirectedGraph graph_structure(const ValueBasedFramework& vaf);
DirectedGraph value_graph(const ValueBasedFramework& vaf);  // no self-loops
UndirectedGraph value_graph_undirected(const ValueBasedFramework& vaf);
UndirectedGraph extended_structure(const ValueBasedFramework& vaf);
UndirectedGraph gaifman_structure(const ValueBasedFramework& vaf, ArgIndex query);

std::string gaifman_argument(const std::string& name);
std::string gaifman_value(const std::string& name);
std::string gaifman_reference_edge(const std::string& tail, const std::string& head);

struct BipartiteCheck {
  bool bipartite = false;
  std::vector<int> color;                 // 0/1 per vertex when bipartite
  std::vector<std::size_t> odd_cycle;     // closed walk v0 ... v_{2m}, v0 implied
};

BipartiteCheck is_bipartite(const UndirectedGraph& g);

struct TreeDecomposition {
  std::vector<std::vector<std::string>> bags;  // each sorted
  std::vector<Edge> tree_edges;                // between bag indices

  // Largest bag size minus one; 0 for decompositions without vertices.
  std::size_t width() const;
};

enum class DecompositionViolation {
  None,
  NotATree,
  UnknownVertex,
  VertexUncovered,
  EdgeUncovered,
  Disconnected,
};

const char* to_string(DecompositionViolation violation);

struct DecompositionCheck {
  DecompositionViolation violation = DecompositionViolation::None;
  std::string detail;
  std::size_t width = 0;

  bool ok() const { return violation == DecompositionViolation::None; }
};

DecompositionCheck validate_tree_decomposition(const UndirectedGraph& g, const TreeDecomposition& td);

// Min-fill elimination; ties go to the lexicographically smallest vertex.
TreeDecomposition heuristic_tree_decomposition(const UndirectedGraph& g);

// Decomposition of the Gaifman graph from one of the extended structure,
// with width at most 2w + 1.  Throws InvalidDecomposition when `td` does not
// decompose extended_structure(vaf).
TreeDecomposition widen_for_gaifman(const ValueBasedFramework& vaf, ArgIndex query, const TreeDecomposition& td);

// Decomposition of the extended structure from one of the undirected value
// graph, with width at most (w + 1) * value_width - 1.
TreeDecomposition decomposition_from_value_graph(const ValueBasedFramework& vaf, const TreeDecomposition& td);

}  // namespace vafkit
