// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vafkit/structure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "vafkit/audiences.hpp"

namespace vafkit {

UndirectedGraph graph_structure(const ValueBasedFramework& vaf) {
  return make_undirected(vaf.af().names(), vaf.af().edges());
}

DirectedGraph value_graph(const ValueBasedFramework& vaf) {
  DirectedGraph g;
  g.vertices = vaf.value_names();
  for (const Attack& a : vaf.af().attacks()) {
    ValueIndex u = vaf.value_of(a.attacker), v = vaf.value_of(a.target);
    if (u != v) g.edges.emplace_back(u, v);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

UndirectedGraph value_graph_undirected(const ValueBasedFramework& vaf) {
  auto directed = value_graph(vaf);
  return make_undirected(std::move(directed.vertices), std::move(directed.edges));
}

UndirectedGraph extended_structure(const ValueBasedFramework& vaf) {
  auto edges = vaf.af().edges();
  for (ValueIndex v = 0; v < vaf.value_count(); ++v) {
    auto group = vaf.members(v);
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j) edges.emplace_back(group[i], group[j]);
  }
  return make_undirected(vaf.af().names(), std::move(edges));
}

std::string gaifman_argument(const std::string& name) { return "arg:" + name; }
std::string gaifman_value(const std::string& name) { return "val:" + name; }
std::string gaifman_reference_edge(const std::string& tail, const std::string& head) {
  return "ref:(" + tail + "," + head + ")";
}

UndirectedGraph gaifman_structure(const ValueBasedFramework& vaf, ArgIndex query) {
  if (query >= vaf.size())
    throw Error(ErrorCode::UnknownArgument, "argument index " + std::to_string(query) + " out of range");
  // The unary query marker contributes no edges.
  std::vector<std::string> vertices;
  const std::size_t n = vaf.size(), k = vaf.value_count();
  for (ArgIndex x = 0; x < n; ++x) vertices.push_back(gaifman_argument(vaf.name(x)));
  for (ValueIndex v = 0; v < k; ++v) vertices.push_back(gaifman_value(vaf.value_name(v)));
  auto r = reference_graph(vaf);
  for (auto [u, v] : r.edges) vertices.push_back(gaifman_reference_edge(vaf.value_name(u), vaf.value_name(v)));

  std::vector<Edge> edges = vaf.af().edges();                                     // B_a
  for (ArgIndex x = 0; x < n; ++x) edges.emplace_back(x, n + vaf.value_of(x));   // B_eta
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    edges.emplace_back(n + r.edges[i].first, n + k + i);   // T
    edges.emplace_back(n + r.edges[i].second, n + k + i);  // H
  }
  return make_undirected(std::move(vertices), std::move(edges));
}

BipartiteCheck is_bipartite(const UndirectedGraph& g) {
  const std::size_t n = g.vertices.size();
  auto adj = g.adjacency();
  BipartiteCheck check;
  std::vector<int> color(n, -1);
  std::vector<std::size_t> parent(n, n);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          parent[v] = u;
          queue.push(v);
        } else if (color[v] == color[u]) {
          // Both endpoints have equal BFS depth parity; join their tree paths.
          std::vector<std::size_t> up_u{u}, up_v{v};
          std::set<std::size_t> ancestors_u{u};
          for (std::size_t w = u; parent[w] != n; w = parent[w]) {
            up_u.push_back(parent[w]);
            ancestors_u.insert(parent[w]);
          }
          std::size_t meet = v;
          while (!ancestors_u.count(meet)) {
            meet = parent[meet];
            up_v.push_back(meet);
          }
          up_v.pop_back();
          auto cut = std::find(up_u.begin(), up_u.end(), meet);
          check.odd_cycle.assign(up_u.begin(), cut + 1);
          check.odd_cycle.insert(check.odd_cycle.end(), up_v.rbegin(), up_v.rend());
          return check;
        }
      }
    }
  }
  check.bipartite = true;
  check.color = std::move(color);
  return check;
}

// ---------------------------------------------------------------------------
// Tree decompositions

std::size_t TreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& bag : bags) largest = std::max(largest, bag.size());
  return largest == 0 ? 0 : largest - 1;
}

const char* to_string(DecompositionViolation violation) {
  switch (violation) {
    case DecompositionViolation::None: return "none";
    case DecompositionViolation::NotATree: return "not-a-tree";
    case DecompositionViolation::UnknownVertex: return "unknown-vertex";
    case DecompositionViolation::VertexUncovered: return "vertex-uncovered";
    case DecompositionViolation::EdgeUncovered: return "edge-uncovered";
    case DecompositionViolation::Disconnected: return "disconnected-occurrences";
  }
  return "unknown";
}

DecompositionCheck validate_tree_decomposition(const UndirectedGraph& g, const TreeDecomposition& td) {
  DecompositionCheck check;
  auto fail = [&](DecompositionViolation v, std::string detail) {
    check.violation = v;
    check.detail = std::move(detail);
    return check;
  };
  const std::size_t nodes = td.bags.size();

  if (nodes == 0) {
    if (!g.vertices.empty()) return fail(DecompositionViolation::VertexUncovered, g.vertices.front());
    return check;
  }
  if (td.tree_edges.size() != nodes - 1)
    return fail(DecompositionViolation::NotATree, std::to_string(td.tree_edges.size()) + " tree edges for " +
                                                      std::to_string(nodes) + " nodes");
  std::vector<std::vector<std::size_t>> tree(nodes);
  for (auto [a, b] : td.tree_edges) {
    if (a >= nodes || b >= nodes || a == b)
      return fail(DecompositionViolation::NotATree, "bad tree edge " + std::to_string(a) + "-" + std::to_string(b));
    tree[a].push_back(b);
    tree[b].push_back(a);
  }
  {
    std::vector<bool> seen(nodes, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b : tree[a])
        if (!seen[b]) {
          seen[b] = true;
          ++reached;
          stack.push_back(b);
        }
    }
    if (reached != nodes) return fail(DecompositionViolation::NotATree, "tree is disconnected");
  }

  std::vector<std::vector<std::size_t>> occurrences(g.vertices.size());
  std::vector<std::vector<bool>> in_bag(nodes, std::vector<bool>(g.vertices.size(), false));
  for (std::size_t t = 0; t < nodes; ++t)
    for (const auto& name : td.bags[t]) {
      auto v = g.find(name);
      if (!v) return fail(DecompositionViolation::UnknownVertex, name);
      if (!in_bag[t][*v]) occurrences[*v].push_back(t);
      in_bag[t][*v] = true;
    }

  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (occurrences[v].empty()) return fail(DecompositionViolation::VertexUncovered, g.vertices[v]);

  for (auto [u, v] : g.edges) {
    bool covered = false;
    for (std::size_t t : occurrences[u])
      if (in_bag[t][v]) {
        covered = true;
        break;
      }
    if (!covered) return fail(DecompositionViolation::EdgeUncovered, g.vertices[u] + "--" + g.vertices[v]);
  }

  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    std::vector<bool> seen(nodes, false);
    std::vector<std::size_t> stack{occurrences[v].front()};
    seen[stack.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b : tree[a])
        if (!seen[b] && in_bag[b][v]) {
          seen[b] = true;
          ++reached;
          stack.push_back(b);
        }
    }
    if (reached != occurrences[v].size()) return fail(DecompositionViolation::Disconnected, g.vertices[v]);
  }

  check.width = td.width();
  return check;
}

TreeDecomposition heuristic_tree_decomposition(const UndirectedGraph& g) {
  const std::size_t n = g.vertices.size();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.emplace_back();
    return td;
  }
  std::vector<std::set<std::size_t>> adj(n);
  for (auto [u, v] : g.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<bool> eliminated(n, false);
  std::vector<std::size_t> position(n, 0);
  std::vector<std::vector<std::size_t>> neighbourhoods(n);  // indexed by step
  std::vector<std::size_t> order;

  auto fill_in = [&](std::size_t v) {
    std::size_t missing = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
      for (auto b = std::next(a); b != adj[v].end(); ++b)
        if (!adj[*a].count(*b)) ++missing;
    return missing;
  };

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n, best_fill = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      std::size_t f = fill_in(v);
      if (best == n || f < best_fill) {
        best = v;
        best_fill = f;
      }
    }
    std::vector<std::size_t> nbrs(adj[best].begin(), adj[best].end());
    for (std::size_t a : nbrs)
      for (std::size_t b : nbrs)
        if (a != b) adj[a].insert(b);
    for (std::size_t a : nbrs) adj[a].erase(best);
    adj[best].clear();
    eliminated[best] = true;
    position[best] = step;
    neighbourhoods[step] = std::move(nbrs);
    order.push_back(best);

    std::vector<std::string> bag{g.vertices[best]};
    for (std::size_t a : neighbourhoods[step]) bag.push_back(g.vertices[a]);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
  }

  // Each bag hangs off the bag of its earliest-eliminated later neighbour;
  // component roots are chained into one tree.
  std::optional<std::size_t> previous_root;
  for (std::size_t step = 0; step < n; ++step) {
    const auto& nbrs = neighbourhoods[step];
    if (nbrs.empty()) {
      if (previous_root) td.tree_edges.emplace_back(*previous_root, step);
      previous_root = step;
      continue;
    }
    std::size_t parent = n;
    for (std::size_t a : nbrs) parent = std::min(parent, position[a]);
    td.tree_edges.emplace_back(step, parent);
  }
  return td;
}

namespace {

void require_valid(const UndirectedGraph& g, const TreeDecomposition& td, const char* what) {
  auto check = validate_tree_decomposition(g, td);
  if (!check.ok())
    throw Error(ErrorCode::InvalidDecomposition, std::string("not a tree decomposition of the ") + what + ": " +
                                                     to_string(check.violation) + " (" + check.detail + ")");
}

}  // namespace

TreeDecomposition widen_for_gaifman(const ValueBasedFramework& vaf, ArgIndex query, const TreeDecomposition& td) {
  require_valid(extended_structure(vaf), td, "extended structure");
  if (query >= vaf.size())
    throw Error(ErrorCode::UnknownArgument, "argument index " + std::to_string(query) + " out of range");
  TreeDecomposition out;
  out.tree_edges = td.tree_edges;
  for (const auto& bag : td.bags) {
    std::set<std::string> widened;
    for (const auto& name : bag) {
      widened.insert(gaifman_argument(name));
      widened.insert(gaifman_value(vaf.value_name(vaf.value_of(vaf.index_of(name)))));
    }
    out.bags.emplace_back(widened.begin(), widened.end());
  }
  const std::size_t base_nodes = out.bags.size();
  for (auto [u, v] : reference_graph(vaf).edges) {
    std::string tail = gaifman_value(vaf.value_name(u)), head = gaifman_value(vaf.value_name(v));
    std::size_t host = base_nodes;
    for (std::size_t t = 0; t < base_nodes && host == base_nodes; ++t) {
      const auto& bag = out.bags[t];
      if (std::binary_search(bag.begin(), bag.end(), tail) && std::binary_search(bag.begin(), bag.end(), head))
        host = t;
    }
    if (host == base_nodes)
      throw Error(ErrorCode::InvalidDecomposition, "no bag holds both endpoints of reference edge");
    std::vector<std::string> leaf{tail, head, gaifman_reference_edge(vaf.value_name(u), vaf.value_name(v))};
    std::sort(leaf.begin(), leaf.end());
    out.tree_edges.emplace_back(host, out.bags.size());
    out.bags.push_back(std::move(leaf));
  }
  return out;
}

TreeDecomposition decomposition_from_value_graph(const ValueBasedFramework& vaf, const TreeDecomposition& td) {
  require_valid(value_graph_undirected(vaf), td, "value graph");
  TreeDecomposition out;
  out.tree_edges = td.tree_edges;
  for (const auto& bag : td.bags) {
    std::vector<std::string> expanded;
    for (const auto& value : bag)
      for (ArgIndex x : vaf.members(vaf.value_index_of(value))) expanded.push_back(vaf.name(x));
    std::sort(expanded.begin(), expanded.end());
    out.bags.push_back(std::move(expanded));
  }
  return out;
}

}  // namespace vafkit
