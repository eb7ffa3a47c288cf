// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vafkit/audiences.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace vafkit {

namespace {

void require_value_cap(const ValueBasedFramework& vaf, const EnumerationLimits& limits) {
  if (vaf.value_count() > limits.max_values)
    throw Error(ErrorCode::TooManyValues, "audience enumeration is capped at " +
                                              std::to_string(limits.max_values) + " values (framework has " +
                                              std::to_string(vaf.value_count()) + ")");
}

void require_argument(const ValueBasedFramework& vaf, ArgIndex x) {
  if (x >= vaf.size())
    throw Error(ErrorCode::UnknownArgument, "argument index " + std::to_string(x) + " out of range");
}

bool contains(const ArgumentSet& s, ArgIndex x) { return std::binary_search(s.begin(), s.end(), x); }

}  // namespace

// ---------------------------------------------------------------------------
// Audience enumeration

AudienceEnumerator::AudienceEnumerator(const ValueBasedFramework& vaf, const EnumerationLimits& limits) {
  require_value_cap(vaf, limits);
  current_.resize(vaf.value_count());
  for (ValueIndex v = 0; v < current_.size(); ++v) current_[v] = v;
}

std::optional<SpecificAudience> AudienceEnumerator::next() {
  if (done_) return std::nullopt;
  SpecificAudience out(current_);
  done_ = !std::next_permutation(current_.begin(), current_.end());
  return out;
}

std::vector<SpecificAudience> enumerate_audiences(const ValueBasedFramework& vaf,
                                                  const EnumerationLimits& limits) {
  AudienceEnumerator it(vaf, limits);
  std::vector<SpecificAudience> out;
  while (auto aud = it.next()) out.push_back(std::move(*aud));
  return out;
}

AudienceDecision subjective_bruteforce(const ValueBasedFramework& vaf, ArgIndex x,
                                       const EnumerationLimits& limits) {
  require_argument(vaf, x);
  AudienceEnumerator it(vaf, limits);
  while (auto aud = it.next()) {
    if (contains(grounded_extension(induced_af(vaf, *aud)), x)) return {true, std::move(aud)};
  }
  return {false, std::nullopt};
}

AudienceDecision objective_bruteforce(const ValueBasedFramework& vaf, ArgIndex x,
                                      const EnumerationLimits& limits) {
  require_argument(vaf, x);
  AudienceEnumerator it(vaf, limits);
  while (auto aud = it.next()) {
    if (!contains(grounded_extension(induced_af(vaf, *aud)), x)) return {false, std::move(aud)};
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Reference graph and orientations

ReferenceGraph reference_graph(const ValueBasedFramework& vaf) {
  ReferenceGraph r;
  r.value_count = vaf.value_count();
  for (const Attack& a : vaf.af().attacks()) {
    ValueIndex u = vaf.value_of(a.attacker), v = vaf.value_of(a.target);
    if (u == v) continue;
    r.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(r.edges.begin(), r.edges.end());
  r.edges.erase(std::unique(r.edges.begin(), r.edges.end()), r.edges.end());
  return r;
}

namespace {

std::vector<Edge> oriented_edges(const ReferenceGraph& r, const Orientation& q) {
  for (const Edge& e : q.reversed)
    if (!std::binary_search(r.edges.begin(), r.edges.end(), e))
      throw Error(ErrorCode::InvalidOrientation, "orientation reverses an edge outside the reference graph");
  std::vector<Edge> out;
  out.reserve(r.edges.size());
  for (const Edge& e : r.edges) {
    bool flip = std::binary_search(q.reversed.begin(), q.reversed.end(), e);
    out.push_back(flip ? Edge{e.second, e.first} : e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Orientation orientation_from_mask(const ReferenceGraph& r, std::uint64_t mask) {
  Orientation q;
  for (std::size_t i = 0; i < r.edges.size(); ++i)
    if ((mask >> i) & 1u) q.reversed.push_back(r.edges[i]);
  return q;
}

ArgumentationFramework filter_attacks(const ValueBasedFramework& vaf, const std::vector<Edge>& oriented) {
  std::vector<Attack> kept;
  for (const Attack& a : vaf.af().attacks()) {
    Edge value_pair{vaf.value_of(a.attacker), vaf.value_of(a.target)};
    if (!std::binary_search(oriented.begin(), oriented.end(), value_pair)) kept.push_back(a);
  }
  return ArgumentationFramework(vaf.af().shared_names(), std::move(kept));
}

void require_edge_cap(const ReferenceGraph& r, const EnumerationLimits& limits) {
  if (r.edges.size() > limits.max_reference_edges || r.edges.size() >= 63)
    throw Error(ErrorCode::TooManyEdges, "orientation enumeration is capped at " +
                                             std::to_string(limits.max_reference_edges) +
                                             " reference edges (framework has " +
                                             std::to_string(r.edges.size()) + ")");
}

// Calls fn(mask, induced framework) for every acyclic orientation until fn
// returns false.
template <typename Fn>
void for_each_acyclic_orientation(const ValueBasedFramework& vaf, const ReferenceGraph& r, Fn&& fn) {
  const std::uint64_t limit = std::uint64_t{1} << r.edges.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    auto oriented = oriented_edges(r, orientation_from_mask(r, mask));
    if (!is_acyclic(r.value_count, oriented)) continue;
    if (!fn(mask, filter_attacks(vaf, oriented))) return;
  }
}

}  // namespace

DirectedGraph orient(const ValueBasedFramework& vaf, const ReferenceGraph& r, const Orientation& q) {
  DirectedGraph g;
  g.vertices = vaf.value_names();
  g.edges = oriented_edges(r, q);
  return g;
}

ArgumentationFramework induced_by_orientation(const ValueBasedFramework& vaf, const ReferenceGraph& r,
                                              const Orientation& q) {
  auto oriented = oriented_edges(r, q);
  if (!is_acyclic(r.value_count, oriented))
    throw Error(ErrorCode::CyclicOrientation, "R[Q] contains a directed cycle");
  return filter_attacks(vaf, oriented);
}

SpecificAudience audience_from_orientation(const ValueBasedFramework& vaf, const ReferenceGraph& r,
                                           const Orientation& q) {
  auto oriented = oriented_edges(r, q);
  auto order = topological_order(vaf.value_count(), oriented);
  if (!order) throw Error(ErrorCode::CyclicOrientation, "R[Q] contains a directed cycle");
  return SpecificAudience(std::move(*order));
}

OrientationDecision subjective_via_orientations(const ValueBasedFramework& vaf, ArgIndex x,
                                                const EnumerationLimits& limits) {
  require_argument(vaf, x);
  auto r = reference_graph(vaf);
  require_edge_cap(r, limits);
  OrientationDecision decision;
  for_each_acyclic_orientation(vaf, r, [&](std::uint64_t mask, const ArgumentationFramework& fq) {
    if (!contains(grounded_extension(fq), x)) return true;
    decision = {true, orientation_from_mask(r, mask)};
    return false;
  });
  return decision;
}

OrientationDecision objective_via_orientations(const ValueBasedFramework& vaf, ArgIndex x,
                                               const EnumerationLimits& limits) {
  require_argument(vaf, x);
  auto r = reference_graph(vaf);
  require_edge_cap(r, limits);
  OrientationDecision decision{true, std::nullopt};
  for_each_acyclic_orientation(vaf, r, [&](std::uint64_t mask, const ArgumentationFramework& fq) {
    if (contains(grounded_extension(fq), x)) return true;
    decision = {false, orientation_from_mask(r, mask)};
    return false;
  });
  return decision;
}

// ---------------------------------------------------------------------------
// Formula evaluation

namespace {

// Relational encoding of (F, R, x1).  Atoms are split by sort: arguments,
// values, and reference edges.
struct RelationalStructure {
  std::size_t arguments = 0;
  std::size_t values = 0;
  std::size_t edge_atoms = 0;
  std::vector<std::vector<bool>> tail;        // T(t, a): [t][a]
  std::vector<std::vector<bool>> head;        // H(h, a): [h][a]
  std::vector<std::vector<bool>> attack;      // B_a(x, y)
  std::vector<std::vector<bool>> valuation;   // B_eta(x, v)
  std::vector<bool> query;                    // U(x)

  RelationalStructure(const ValueBasedFramework& vaf, const ReferenceGraph& r, ArgIndex x1)
      : arguments(vaf.size()), values(vaf.value_count()), edge_atoms(r.edges.size()) {
    tail.assign(values, std::vector<bool>(edge_atoms, false));
    head.assign(values, std::vector<bool>(edge_atoms, false));
    for (std::size_t a = 0; a < edge_atoms; ++a) {
      tail[r.edges[a].first][a] = true;
      head[r.edges[a].second][a] = true;
    }
    attack.assign(arguments, std::vector<bool>(arguments, false));
    for (const Attack& at : vaf.af().attacks()) attack[at.attacker][at.target] = true;
    valuation.assign(arguments, std::vector<bool>(values, false));
    for (ArgIndex x = 0; x < arguments; ++x) valuation[x][vaf.value_of(x)] = true;
    query.assign(arguments, false);
    query[x1] = true;
  }
};

class FormulaEvaluator {
 public:
  FormulaEvaluator(const RelationalStructure& s, std::uint64_t q) : s_(s), q_(q) {
    // E(t, h, Q) := exists a [(!Qa & TH(t,h,a)) | (Qa & TH(h,t,a))]
    edge_.assign(s.values, std::vector<bool>(s.values, false));
    for (std::size_t t = 0; t < s.values; ++t)
      for (std::size_t h = 0; h < s.values; ++h)
        for (std::size_t a = 0; a < s.edge_atoms && !edge_[t][h]; ++a) {
          bool in_q = (q_ >> a) & 1u;
          edge_[t][h] = (!in_q && s.tail[t][a] && s.head[h][a]) || (in_q && s.tail[h][a] && s.head[t][a]);
        }
    // B_a'(t, h, Q) := B_a(t,h) & exists v_h, v_t [B_eta(t,v_t) & B_eta(h,v_h) & !E(v_h, v_t, Q)]
    kept_attackers_.assign(s.arguments, 0);
    for (std::size_t t = 0; t < s.arguments; ++t)
      for (std::size_t h = 0; h < s.arguments; ++h)
        if (s.attack[t][h] && reduced_attack(t, h)) kept_attackers_[h] |= std::uint32_t{1} << t;
  }

  // ACYC(Q) := !exists C (exists x Cx & forall t exists h [Ct -> (Ch & E(t,h,Q))]).
  // The sets C satisfying the body are closed under union, so the
  // existential holds iff the largest such set is nonempty; that set is the
  // greatest fixpoint of "members with an out-neighbour inside".
  bool acyclic() const {
    std::vector<bool> c(s_.values, true);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t t = 0; t < s_.values; ++t) {
        if (!c[t]) continue;
        bool has_successor = false;
        for (std::size_t h = 0; h < s_.values && !has_successor; ++h) has_successor = c[h] && edge_[t][h];
        if (!has_successor) {
          c[t] = false;
          changed = true;
        }
      }
    }
    return std::none_of(c.begin(), c.end(), [](bool b) { return b; });
  }

  // exists S (forall x (U(x) -> Sx) & ADM(S, Q)), subsets by increasing size.
  bool admissible_superset_of_query() const {
    const std::size_t n = s_.arguments;
    std::uint32_t required = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (s_.query[x]) required |= std::uint32_t{1} << x;
    std::vector<std::size_t> free;
    for (std::size_t x = 0; x < n; ++x)
      if (!s_.query[x]) free.push_back(x);
    const std::size_t m = free.size();
    for (std::size_t k = 0; k <= m; ++k) {
      // Gosper's hack over k-subsets of the free arguments.
      std::uint64_t pick = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
      const std::uint64_t end = std::uint64_t{1} << m;
      while (pick < end) {
        std::uint32_t s = required;
        for (std::size_t i = 0; i < m; ++i)
          if ((pick >> i) & 1u) s |= std::uint32_t{1} << free[i];
        if (admissible(s)) return true;
        if (k == 0) break;
        std::uint64_t low = pick & -pick;
        std::uint64_t ripple = pick + low;
        pick = (((ripple ^ pick) >> 2) / low) | ripple;
      }
    }
    return false;
  }

 private:
  bool reduced_attack(std::size_t t, std::size_t h) const {
    for (std::size_t vt = 0; vt < s_.values; ++vt) {
      if (!s_.valuation[t][vt]) continue;
      for (std::size_t vh = 0; vh < s_.values; ++vh)
        if (s_.valuation[h][vh] && !edge_[vh][vt]) return true;
    }
    return false;
  }

  // ADM(S,Q) := forall x forall y [(B_a'(x,y,Q) & Sy) -> (!Sx & exists z (Sz & B_a'(z,x,Q)))]
  bool admissible(std::uint32_t s) const {
    for (std::size_t y = 0; y < s_.arguments; ++y) {
      if (!((s >> y) & 1u)) continue;
      std::uint32_t attackers = kept_attackers_[y];
      if (attackers & s) return false;
      for (std::size_t x = 0; x < s_.arguments; ++x)
        if (((attackers >> x) & 1u) && (kept_attackers_[x] & s) == 0) return false;
    }
    return true;
  }

  const RelationalStructure& s_;
  std::uint64_t q_;
  std::vector<std::vector<bool>> edge_;
  std::vector<std::uint32_t> kept_attackers_;
};

template <typename Fn>
bool evaluate_over_orientations(const ValueBasedFramework& vaf, ArgIndex x, const EnumerationLimits& limits,
                                Fn&& combine) {
  require_argument(vaf, x);
  auto r = reference_graph(vaf);
  if (r.edges.size() > limits.max_reference_edges || r.edges.size() >= 63)
    throw Error(ErrorCode::TooLarge, "formula evaluation is capped at " +
                                         std::to_string(limits.max_reference_edges) + " reference edges");
  if (vaf.size() > limits.max_formula_arguments || vaf.size() > 30)
    throw Error(ErrorCode::TooLarge, "formula evaluation is capped at " +
                                         std::to_string(limits.max_formula_arguments) + " arguments");
  RelationalStructure structure(vaf, r, x);
  return combine(structure, std::uint64_t{1} << r.edges.size());
}

}  // namespace

bool eval_phi_s(const ValueBasedFramework& vaf, ArgIndex x, const EnumerationLimits& limits) {
  // phi_s := exists Q [ACYC(Q) & exists S (...)]
  return evaluate_over_orientations(vaf, x, limits, [](const RelationalStructure& s, std::uint64_t limit) {
    for (std::uint64_t q = 0; q < limit; ++q) {
      FormulaEvaluator eval(s, q);
      if (eval.acyclic() && eval.admissible_superset_of_query()) return true;
    }
    return false;
  });
}

bool eval_phi_o(const ValueBasedFramework& vaf, ArgIndex x, const EnumerationLimits& limits) {
  // phi_o := forall Q [ACYC(Q) -> exists S (...)]
  return evaluate_over_orientations(vaf, x, limits, [](const RelationalStructure& s, std::uint64_t limit) {
    for (std::uint64_t q = 0; q < limit; ++q) {
      FormulaEvaluator eval(s, q);
      if (eval.acyclic() && !eval.admissible_superset_of_query()) return false;
    }
    return true;
  });
}

}  // namespace vafkit
