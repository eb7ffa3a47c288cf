// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vafkit/certpath.hpp"

#include <algorithm>
#include <cassert>

namespace vafkit {

const char* to_string(PathCondition condition) {
  switch (condition) {
    case PathCondition::Empty: return "empty";
    case PathCondition::WrongStart: return "wrong-start";
    case PathCondition::EvenLength: return "even-length";
    case PathCondition::RepeatedArgument: return "repeated-argument";
    case PathCondition::C1: return "C1";
    case PathCondition::C2: return "C2";
    case PathCondition::C3: return "C3";
    case PathCondition::C4: return "C4";
    case PathCondition::C5: return "C5";
  }
  return "unknown";
}

void require_value_width_two(const ValueBasedFramework& vaf) {
  auto width = metrics(vaf).value_width;
  if (width > 2)
    throw Error(ErrorCode::ValueWidthExceeded,
                "value-width " + std::to_string(width) + " exceeds 2");
}

namespace {

void require_argument(const ValueBasedFramework& vaf, ArgIndex x) {
  if (x >= vaf.size())
    throw Error(ErrorCode::UnknownArgument, "argument index " + std::to_string(x) + " out of range");
}

}  // namespace

std::optional<PathViolation> verify_certifying_path(const ValueBasedFramework& vaf, ArgIndex x,
                                                    std::span<const ArgIndex> seq) {
  require_value_width_two(vaf);
  require_argument(vaf, x);
  for (ArgIndex y : seq) require_argument(vaf, y);
  const auto& af = vaf.af();
  auto name = [&](ArgIndex y) { return vaf.name(y); };

  if (seq.empty()) return PathViolation{PathCondition::Empty, 0, "sequence is empty"};
  if (seq.front() != x)
    return PathViolation{PathCondition::WrongStart, 1, "sequence starts at " + name(seq.front()) + ", not " + name(x)};
  if (seq.size() % 2 == 0)
    return PathViolation{PathCondition::EvenLength, seq.size(), "sequence has even length " + std::to_string(seq.size())};
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] == seq[j])
        return PathViolation{PathCondition::RepeatedArgument, j + 1, name(seq[j]) + " occurs twice"};

  const std::size_t k = seq.size() / 2;
  auto xs = [&](std::size_t i) { return seq[2 * (i - 1)]; };      // 1-based
  auto zs = [&](std::size_t i) { return seq[2 * (i - 1) + 1]; };  // 1-based
  const ArgIndex t = seq.back();

  for (std::size_t i = 1; i <= k; ++i)
    if (vaf.value_of(zs(i)) != vaf.value_of(xs(i)))
      return PathViolation{PathCondition::C1, i, name(zs(i)) + " and " + name(xs(i)) + " differ in value"};

  for (std::size_t i = 1; i <= k; ++i) {
    bool hits = false;
    for (std::size_t j = 1; j <= i && !hits; ++j) hits = af.attacks(zs(i), xs(j));
    if (!hits)
      return PathViolation{PathCondition::C2, i, name(zs(i)) + " attacks none of x_1..x_" + std::to_string(i)};
  }

  for (std::size_t i = 2; i <= k; ++i) {
    if (!af.attacks(xs(i), zs(i - 1)))
      return PathViolation{PathCondition::C3, i, name(xs(i)) + " does not attack " + name(zs(i - 1))};
    if (af.attacks(xs(i), zs(i)))
      return PathViolation{PathCondition::C3, i, name(xs(i)) + " attacks " + name(zs(i))};
    for (std::size_t j = 1; j < i; ++j)
      if (af.attacks(xs(i), xs(j)))
        return PathViolation{PathCondition::C3, i, name(xs(i)) + " attacks " + name(xs(j))};
  }

  if (k >= 1) {
    if (!af.attacks(t, zs(k)))
      return PathViolation{PathCondition::C4, k, name(t) + " does not attack " + name(zs(k))};
    for (std::size_t j = 1; j <= k; ++j)
      if (af.attacks(t, xs(j)))
        return PathViolation{PathCondition::C4, j, name(t) + " attacks " + name(xs(j))};
  }

  for (ArgIndex z : vaf.members(vaf.value_of(t))) {
    if (z == t || af.attacks(t, z)) continue;
    bool hits = af.attacks(z, t);
    for (std::size_t j = 1; j <= k && !hits; ++j) hits = af.attacks(z, xs(j));
    if (hits)
      return PathViolation{PathCondition::C5, seq.size(),
                           name(z) + " shares " + name(t) + "'s value and attacks the path"};
  }
  return std::nullopt;
}

namespace {

// Search state: the sequence so far, ending with a proponent argument.
class PathSearch {
 public:
  PathSearch(const ValueBasedFramework& vaf, ArgIndex x) : vaf_(vaf), used_(vaf.size(), false) {
    push(x);
  }

  // The opponent's forced reply to the proponent's last argument, if any:
  // its equivalued partner, when not attacked by it and attacking some
  // proponent argument.
  std::optional<ArgIndex> opponent_reply() const {
    ArgIndex y = seq_.back();
    auto p = vaf_.partner(y);
    if (!p || used_[*p] || vaf_.af().attacks(y, *p)) return std::nullopt;
    for (std::size_t i = 0; i < seq_.size(); i += 2)
      if (vaf_.af().attacks(*p, seq_[i])) return p;
    return std::nullopt;
  }

  // Proponent candidates against opponent argument z, in index order.
  std::vector<ArgIndex> candidates(ArgIndex z) const {
    std::vector<ArgIndex> out;
    for (ArgIndex c : vaf_.af().attackers(z)) {
      if (used_[c]) continue;
      bool hits_proponent = false;
      for (std::size_t i = 0; i < seq_.size() && !hits_proponent; i += 2)
        hits_proponent = vaf_.af().attacks(c, seq_[i]);
      if (!hits_proponent) out.push_back(c);
    }
    return out;
  }

  bool extend() {
    auto z = opponent_reply();
    if (!z) return true;
    push(*z);
    for (ArgIndex c : candidates(*z)) {
      push(c);
      if (extend()) return true;
      pop();
    }
    pop();
    return false;
  }

  void push(ArgIndex y) {
    seq_.push_back(y);
    used_[y] = true;
  }
  void pop() {
    used_[seq_.back()] = false;
    seq_.pop_back();
  }

  const std::vector<ArgIndex>& sequence() const { return seq_; }

 private:
  const ValueBasedFramework& vaf_;
  std::vector<ArgIndex> seq_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<CertifyingPath> find_certifying_path(const ValueBasedFramework& vaf, ArgIndex x) {
  require_value_width_two(vaf);
  require_argument(vaf, x);
  PathSearch search(vaf, x);
  if (!search.extend()) return std::nullopt;
  CertifyingPath path{search.sequence()};
  assert(!verify_certifying_path(vaf, x, path.arguments));
  return path;
}

SubjectiveResult subjective_width2(const ValueBasedFramework& vaf, ArgIndex x) {
  auto path = find_certifying_path(vaf, x);
  return {path.has_value(), std::move(path)};
}

SpecificAudience witness_audience(const ValueBasedFramework& vaf, const CertifyingPath& path) {
  std::vector<bool> on_path(vaf.value_count(), false);
  std::vector<ValueIndex> top;
  for (std::size_t i = 0; i < path.arguments.size(); i += 2) {
    ValueIndex v = vaf.value_of(path.arguments[i]);
    on_path[v] = true;
    top.push_back(v);
  }
  std::vector<ValueIndex> ascending;
  for (ValueIndex v = 0; v < vaf.value_count(); ++v)
    if (!on_path[v]) ascending.push_back(v);
  ascending.insert(ascending.end(), top.begin(), top.end());
  return SpecificAudience(std::move(ascending));
}

ObjectiveResult objective_width2(const ValueBasedFramework& vaf, ArgIndex x) {
  require_value_width_two(vaf);
  require_argument(vaf, x);
  const ValueIndex own = vaf.value_of(x);
  ObjectiveResult result;
  std::optional<ValueBasedFramework> reduced;

  for (ArgIndex p : vaf.af().attackers(x)) {
    if (vaf.value_of(p) == own) {
      // Ranking x's value on top keeps p unattacked.
      std::vector<ValueIndex> ascending;
      for (ValueIndex v = 0; v < vaf.value_count(); ++v)
        if (v != own) ascending.push_back(v);
      ascending.push_back(own);
      result.failing_attacker = p;
      result.equivalued_attacker = true;
      result.counterexample = SpecificAudience(std::move(ascending));
      return result;
    }
    if (!reduced) reduced = subtract_value(vaf, own);
    auto path = find_certifying_path(*reduced, reduced->index_of(vaf.name(p)));
    if (!path) continue;
    // Lift the witness for p in F - v to F, with x's value at the bottom.
    auto sub = witness_audience(*reduced, *path);
    std::vector<ValueIndex> ascending{own};
    for (ValueIndex v : sub.ascending()) ascending.push_back(vaf.value_index_of(reduced->value_name(v)));
    result.failing_attacker = p;
    result.attacker_path = names_of(reduced->af(), path->arguments);
    result.counterexample = SpecificAudience(std::move(ascending));
    return result;
  }
  result.accepted = true;
  return result;
}

DialogueTrace dialogue_trace(const ValueBasedFramework& vaf, ArgIndex x) {
  DialogueTrace trace;
  if (auto path = find_certifying_path(vaf, x)) {
    for (std::size_t i = 0; i < path->arguments.size(); ++i)
      trace.moves.push_back({i % 2 == 0 ? Player::Proponent : Player::Opponent, path->arguments[i]});
    trace.proponent_wins = true;
    return trace;
  }
  // Leftmost branch of the search tree; every branch ends in a loss here.
  PathSearch play(vaf, x);
  trace.moves.push_back({Player::Proponent, x});
  while (true) {
    auto z = play.opponent_reply();
    if (!z) {
      trace.proponent_wins = true;  // unreachable when no certifying path exists
      return trace;
    }
    play.push(*z);
    trace.moves.push_back({Player::Opponent, *z});
    auto options = play.candidates(*z);
    if (options.empty()) return trace;
    play.push(options.front());
    trace.moves.push_back({Player::Proponent, options.front()});
  }
}

}  // namespace vafkit
