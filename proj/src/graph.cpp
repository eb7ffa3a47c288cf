// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vafkit/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>

#include "vafkit/error.hpp"

namespace vafkit {

std::optional<std::size_t> UndirectedGraph::find(std::string_view name) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), name);
  if (it == vertices.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

bool UndirectedGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

std::vector<std::vector<std::size_t>> UndirectedGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

bool DirectedGraph::has_edge(std::size_t u, std::size_t v) const {
  return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

UndirectedGraph make_undirected(std::vector<std::string> vertices, std::vector<Edge> edges) {
  UndirectedGraph g;
  // Sort vertices and remap edge endpoints.
  std::vector<std::size_t> order(vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return vertices[a] < vertices[b]; });
  std::vector<std::size_t> remap(vertices.size());
  g.vertices.reserve(vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = i;
    g.vertices.push_back(std::move(vertices[order[i]]));
  }
  for (auto [u, v] : edges) {
    std::size_t a = remap.at(u), b = remap.at(v);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    g.edges.emplace_back(a, b);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

std::optional<std::vector<std::size_t>> topological_order(std::size_t vertex_count,
                                                          std::span<const Edge> edges) {
  std::vector<std::vector<std::size_t>> out(vertex_count);
  std::vector<std::size_t> indegree(vertex_count, 0);
  for (auto [u, v] : edges) {
    out.at(u).push_back(v);
    ++indegree.at(v);
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<std::size_t> order;
  order.reserve(vertex_count);
  while (!ready.empty()) {
    std::size_t u = ready.top();
    ready.pop();
    order.push_back(u);
    for (std::size_t v : out[u])
      if (--indegree[v] == 0) ready.push(v);
  }
  if (order.size() != vertex_count) return std::nullopt;
  return order;
}

bool is_acyclic(std::size_t vertex_count, std::span<const Edge> edges) {
  return topological_order(vertex_count, edges).has_value();
}

bool has_closed_successor_set(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count > 20)
    throw Error(ErrorCode::TooLarge, "cycle-set enumeration is limited to 20 vertices");
  std::vector<std::uint32_t> successors(vertex_count, 0);
  for (auto [u, v] : edges) successors.at(u) |= std::uint32_t{1} << v;
  const std::uint32_t limit = std::uint32_t{1} << vertex_count;
  for (std::uint32_t c = 1; c < limit; ++c) {
    bool closed = true;
    for (std::size_t t = 0; t < vertex_count && closed; ++t)
      if ((c >> t) & 1u) closed = (successors[t] & c) != 0;
    if (closed) return true;
  }
  return false;
}

}  // namespace vafkit
