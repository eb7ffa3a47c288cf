// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vafkit/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "vafkit/structure.hpp"

namespace vafkit {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void require_argument(const ValueBasedFramework& vaf, ArgIndex x) {
  if (x >= vaf.size())
    throw Error(ErrorCode::UnknownArgument, "argument index " + std::to_string(x) + " out of range");
}

void require_preconditions(const ValueBasedFramework& vaf, ArgIndex query) {
  require_argument(vaf, query);
  require_value_width_two(vaf);
  require_bipartite(vaf);
}

ValueDigraph hf_from_parity(const ValueBasedFramework& vaf, const ParityPartition& parity) {
  ValueDigraph h;
  h.present.assign(vaf.value_count(), true);
  for (const Attack& a : vaf.af().attacks()) {
    if (parity.parity[a.attacker] != 0 || parity.parity[a.target] != 1) continue;
    ValueIndex u = vaf.value_of(a.attacker), v = vaf.value_of(a.target);
    if (u != v) h.edges.emplace_back(u, v);
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
  return h;
}

ValueDigraph hf_minus_from_parity(const ValueBasedFramework& vaf, const ParityPartition& parity,
                                  const ValueDigraph& hf, ValueIndex v) {
  ValueDigraph h = hf;
  const auto& af = vaf.af();
  for (ArgIndex z : vaf.members(v)) {
    if (parity.parity[z] != 1) continue;
    bool equivalued_attacker = false;
    for (ArgIndex a : af.attackers(z)) equivalued_attacker = equivalued_attacker || vaf.value_of(a) == v;
    if (equivalued_attacker) continue;
    for (ArgIndex y : af.targets(z))
      if (parity.parity[y] == 0) h.present[vaf.value_of(y)] = false;
  }
  std::erase_if(h.edges, [&](const Edge& e) { return !h.present[e.first] || !h.present[e.second]; });
  return h;
}

// Shortest path from `from` to `to`; among equally short continuations the
// greatest value index is taken at every step.
std::optional<std::vector<ValueIndex>> shortest_value_path(const ValueDigraph& h, ValueIndex from, ValueIndex to) {
  if (!h.has_vertex(from) || !h.has_vertex(to)) return std::nullopt;
  const std::size_t k = h.present.size();
  std::vector<std::vector<ValueIndex>> successors(k), predecessors(k);
  for (auto [u, v] : h.edges) {
    successors[u].push_back(v);
    predecessors[v].push_back(u);
  }
  std::vector<std::size_t> dist(k, kUnreached);
  std::queue<ValueIndex> queue;
  dist[to] = 0;
  queue.push(to);
  while (!queue.empty()) {
    ValueIndex v = queue.front();
    queue.pop();
    for (ValueIndex u : predecessors[v])
      if (dist[u] == kUnreached) {
        dist[u] = dist[v] + 1;
        queue.push(u);
      }
  }
  if (dist[from] == kUnreached) return std::nullopt;
  std::vector<ValueIndex> path{from};
  for (ValueIndex cur = from; cur != to;) {
    ValueIndex next = k;
    for (ValueIndex w : successors[cur])
      if (dist[w] + 1 == dist[cur] && (next == k || w > next)) next = w;
    path.push_back(next);
    cur = next;
  }
  return path;
}

}  // namespace

void require_bipartite(const ValueBasedFramework& vaf) {
  auto check = is_bipartite(graph_structure(vaf));
  if (!check.bipartite) {
    std::string cycle;
    for (std::size_t v : check.odd_cycle) cycle += (cycle.empty() ? "" : " ") + vaf.name(v);
    throw Error(ErrorCode::NotBipartite, "graph structure has an odd cycle: " + cycle);
  }
}

ParityPartition parity_partition(const ValueBasedFramework& vaf, ArgIndex query) {
  require_argument(vaf, query);
  const auto& af = vaf.af();
  ParityPartition out;
  out.parity.assign(vaf.size(), -1);
  out.parity[query] = 0;
  std::queue<ArgIndex> queue;
  queue.push(query);
  while (!queue.empty()) {
    ArgIndex x = queue.front();
    queue.pop();
    auto visit = [&](ArgIndex y) {
      if (out.parity[y] != -1) return;
      out.parity[y] = 1 - out.parity[x];
      queue.push(y);
    };
    for (ArgIndex y : af.attackers(x)) visit(y);
    for (ArgIndex y : af.targets(x)) visit(y);
  }
  for (ArgIndex x = 0; x < vaf.size(); ++x) {
    if (out.parity[x] == 0) out.even.push_back(x);
    else if (out.parity[x] == 1) out.odd.push_back(x);
    else out.unreachable.push_back(x);
  }
  return out;
}

bool ValueDigraph::has_edge(ValueIndex u, ValueIndex v) const {
  return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

bool ValueDigraph::is_path(std::span<const ValueIndex> path) const {
  if (path.empty()) return false;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!has_vertex(path[i])) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (path[j] == path[i]) return false;
    if (i > 0 && !has_edge(path[i - 1], path[i])) return false;
  }
  return true;
}

ValueDigraph build_hf(const ValueBasedFramework& vaf, ArgIndex query) {
  require_preconditions(vaf, query);
  return hf_from_parity(vaf, parity_partition(vaf, query));
}

ValueDigraph build_hf_minus(const ValueBasedFramework& vaf, ArgIndex query, ValueIndex v) {
  require_preconditions(vaf, query);
  if (v >= vaf.value_count())
    throw Error(ErrorCode::UnknownValue, "value index " + std::to_string(v) + " out of range");
  auto parity = parity_partition(vaf, query);
  return hf_minus_from_parity(vaf, parity, hf_from_parity(vaf, parity), v);
}

std::optional<std::vector<ValueIndex>> detect_certifying_path(const ValueBasedFramework& vaf, ArgIndex query) {
  require_preconditions(vaf, query);
  auto parity = parity_partition(vaf, query);
  auto hf = hf_from_parity(vaf, parity);
  std::vector<ValueDigraph> minus;
  for (ValueIndex v = 0; v < vaf.value_count(); ++v) minus.push_back(hf_minus_from_parity(vaf, parity, hf, v));

  const ValueIndex target = vaf.value_of(query);
  for (ValueIndex v = 0; v < vaf.value_count(); ++v) {
    auto path = shortest_value_path(minus[v], v, target);
    if (!path) continue;
    for (std::size_t i = 1; i <= path->size(); ++i) {
      std::span<const ValueIndex> tail(path->data() + path->size() - i, i);
      if (minus[tail.front()].is_path(tail)) return std::vector<ValueIndex>(tail.begin(), tail.end());
    }
  }
  return std::nullopt;
}

CertifyingPath lift_value_path(const ValueBasedFramework& vaf, ArgIndex query, std::span<const ValueIndex> value_path) {
  require_preconditions(vaf, query);
  if (value_path.empty() || value_path.back() != vaf.value_of(query))
    throw Error(ErrorCode::LiftingFailed, "value path does not end at the query's value");
  auto parity = parity_partition(vaf, query);
  auto even_member = [&](ValueIndex v) -> ArgIndex {
    std::optional<ArgIndex> found;
    for (ArgIndex x : vaf.members(v))
      if (parity.parity[x] == 0) {
        if (found) throw Error(ErrorCode::LiftingFailed, "value " + vaf.value_name(v) + " has two even arguments");
        found = x;
      }
    if (!found) throw Error(ErrorCode::LiftingFailed, "value " + vaf.value_name(v) + " has no even argument");
    return *found;
  };

  CertifyingPath path;
  for (std::size_t i = value_path.size(); i-- > 1;) {
    ValueIndex v = value_path[i];
    ArgIndex x = even_member(v);
    auto z = vaf.partner(x);
    if (!z || parity.parity[*z] != 1)
      throw Error(ErrorCode::LiftingFailed, "value " + vaf.value_name(v) + " has no odd argument");
    path.arguments.push_back(x);
    path.arguments.push_back(*z);
  }
  path.arguments.push_back(even_member(value_path.front()));
  if (path.arguments.front() != query)
    throw Error(ErrorCode::LiftingFailed, "lifted path does not start at the query");
  if (auto violation = verify_certifying_path(vaf, query, path.arguments))
    throw Error(ErrorCode::LiftingFailed, std::string("lifted path violates ") + to_string(violation->condition) +
                                              ": " + violation->detail);
  return path;
}

bool satisfies_value_path_conditions(const ValueBasedFramework& vaf, ArgIndex query,
                                     std::span<const ArgIndex> seq) {
  require_preconditions(vaf, query);
  for (ArgIndex y : seq) require_argument(vaf, y);
  if (seq.empty() || seq.front() != query || seq.size() % 2 == 0) return false;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] == seq[j]) return false;

  const std::size_t k = seq.size() / 2;
  for (std::size_t i = 0; i < k; ++i)
    if (vaf.value_of(seq[2 * i]) != vaf.value_of(seq[2 * i + 1])) return false;

  auto parity = parity_partition(vaf, query);
  // The value conditions only pin down arguments through their parity:
  // x_i and t must be even, z_i odd.
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (parity.parity[seq[i]] != static_cast<int>(i % 2)) return false;
  auto hf = hf_from_parity(vaf, parity);
  // values[j] = value of x_{k+1-j}, with t as x_{k+1}; i.e. (eta(t), eta(x_k), ..., eta(x_1)).
  std::vector<ValueIndex> values;
  for (std::size_t i = seq.size(); i-- > 0;)
    if (i % 2 == 0) values.push_back(vaf.value_of(seq[i]));

  if (!hf_minus_from_parity(vaf, parity, hf, values.front()).is_path(values)) return false;
  for (std::size_t i = 1; i <= k; ++i) {
    std::span<const ValueIndex> prefix(values.data() + values.size() - i, i);
    if (hf_minus_from_parity(vaf, parity, hf, prefix.front()).is_path(prefix)) return false;
  }
  return true;
}

BipartiteSubjective subjective_bipartite(const ValueBasedFramework& vaf, ArgIndex query) {
  BipartiteSubjective out;
  auto values = detect_certifying_path(vaf, query);
  if (!values) return out;
  out.accepted = true;
  out.value_path = *values;
  try {
    out.path = lift_value_path(vaf, query, *values);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::LiftingFailed) throw;
    out.fallback = true;
    out.path = find_certifying_path(vaf, query);
    out.accepted = out.path.has_value();
  }
  return out;
}

BipartiteObjective objective_bipartite(const ValueBasedFramework& vaf, ArgIndex query) {
  require_preconditions(vaf, query);
  const ValueIndex own = vaf.value_of(query);
  BipartiteObjective out;
  std::optional<ValueBasedFramework> reduced;
  for (ArgIndex p : vaf.af().attackers(query)) {
    if (vaf.value_of(p) == own) {
      std::vector<ValueIndex> ascending;
      for (ValueIndex v = 0; v < vaf.value_count(); ++v)
        if (v != own) ascending.push_back(v);
      ascending.push_back(own);
      out.result.failing_attacker = p;
      out.result.equivalued_attacker = true;
      out.result.counterexample = SpecificAudience(std::move(ascending));
      return out;
    }
    if (!reduced) reduced = subtract_value(vaf, own);
    auto sub = subjective_bipartite(*reduced, reduced->index_of(vaf.name(p)));
    out.fallback = out.fallback || sub.fallback;
    if (!sub.accepted) continue;
    std::vector<ValueIndex> ascending{own};
    const auto witness = witness_audience(*reduced, *sub.path);
    for (ValueIndex v : witness.ascending())
      ascending.push_back(vaf.value_index_of(reduced->value_name(v)));
    out.result.failing_attacker = p;
    out.result.attacker_path = names_of(reduced->af(), sub.path->arguments);
    out.result.counterexample = SpecificAudience(std::move(ascending));
    return out;
  }
  out.result.accepted = true;
  return out;
}

}  // namespace vafkit
