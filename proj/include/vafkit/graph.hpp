// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vafkit {

// Edges are index pairs into a vertex list.  Directed edges read (from, to);
// undirected edges are stored with first < second.
using Edge = std::pair<std::size_t, std::size_t>;

struct UndirectedGraph {
  std::vector<std::string> vertices;  // sorted
  std::vector<Edge> edges;            // normalized, sorted, unique

  std::optional<std::size_t> find(std::string_view name) const;
  bool has_edge(std::size_t u, std::size_t v) const;
  std::vector<std::vector<std::size_t>> adjacency() const;
};

struct DirectedGraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;  // sorted, unique

  bool has_edge(std::size_t u, std::size_t v) const;
};

// Builds an undirected graph from named vertices and arbitrary edges;
// self-loops are dropped and duplicates merged.
UndirectedGraph make_undirected(std::vector<std::string> vertices, std::vector<Edge> edges);

// Topological order (Kahn, smallest index first) or nullopt on a cycle.
std::optional<std::vector<std::size_t>> topological_order(std::size_t vertex_count,
                                                          std::span<const Edge> edges);

bool is_acyclic(std::size_t vertex_count, std::span<const Edge> edges);

// Cycle test through the characterization "some nonempty vertex set C in
// which every member has an out-neighbour in C".  Enumerates all subsets, so
// it throws TooLarge beyond 20 vertices.  Returns true iff such a C exists.
bool has_closed_successor_set(std::size_t vertex_count, std::span<const Edge> edges);

}  // namespace vafkit
