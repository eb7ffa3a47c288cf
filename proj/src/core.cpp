// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vafkit/core.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace vafkit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownArgument: return "UnknownArgument";
    case ErrorCode::UnknownValue: return "UnknownValue";
    case ErrorCode::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorCode::MultivaluedCycle: return "MultivaluedCycle";
    case ErrorCode::UnusedValue: return "UnusedValue";
    case ErrorCode::CyclicFramework: return "CyclicFramework";
    case ErrorCode::InvalidAudience: return "InvalidAudience";
    case ErrorCode::TooManyValues: return "TooManyValues";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidOrientation: return "InvalidOrientation";
    case ErrorCode::CyclicOrientation: return "CyclicOrientation";
    case ErrorCode::ValueWidthExceeded: return "ValueWidthExceeded";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::LiftingFailed: return "LiftingFailed";
    case ErrorCode::MalformedClause: return "MalformedClause";
    case ErrorCode::NotMonotoneSplit: return "NotMonotoneSplit";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// ArgumentationFramework

ArgumentationFramework::ArgumentationFramework()
    : names_(std::make_shared<const std::vector<std::string>>()) {}

ArgumentationFramework::ArgumentationFramework(
    std::shared_ptr<const std::vector<std::string>> names, std::vector<Attack> attacks)
    : names_(std::move(names)), attacks_(std::move(attacks)) {
  std::sort(attacks_.begin(), attacks_.end());
  attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());
  attackers_.resize(names_->size());
  targets_.resize(names_->size());
  for (const Attack& a : attacks_) {
    if (a.attacker >= names_->size() || a.target >= names_->size())
      throw Error(ErrorCode::UnknownArgument, "attack endpoint out of range");
    attackers_[a.target].push_back(a.attacker);
    targets_[a.attacker].push_back(a.target);
  }
  for (auto& list : attackers_) std::sort(list.begin(), list.end());
}

ArgumentationFramework ArgumentationFramework::from_names(
    std::vector<std::string> arguments,
    std::span<const std::pair<std::string, std::string>> attacks) {
  std::sort(arguments.begin(), arguments.end());
  auto dup = std::adjacent_find(arguments.begin(), arguments.end());
  if (dup != arguments.end())
    throw Error(ErrorCode::DuplicateDeclaration, "duplicate argument '" + *dup + "'");
  auto names = std::make_shared<const std::vector<std::string>>(std::move(arguments));
  ArgumentationFramework shell(names, {});
  std::vector<Attack> resolved;
  resolved.reserve(attacks.size());
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [from, to] : attacks) {
    if (!seen.insert({from, to}).second)
      throw Error(ErrorCode::DuplicateDeclaration, "duplicate attack " + from + " -> " + to);
    resolved.push_back({shell.index_of(from), shell.index_of(to)});
  }
  return ArgumentationFramework(names, std::move(resolved));
}

std::optional<ArgIndex> ArgumentationFramework::find(std::string_view name) const {
  auto it = std::lower_bound(names_->begin(), names_->end(), name);
  if (it == names_->end() || *it != name) return std::nullopt;
  return static_cast<ArgIndex>(it - names_->begin());
}

ArgIndex ArgumentationFramework::index_of(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw Error(ErrorCode::UnknownArgument, "unknown argument '" + std::string(name) + "'");
}

bool ArgumentationFramework::attacks(ArgIndex x, ArgIndex y) const {
  return std::binary_search(attacks_.begin(), attacks_.end(), Attack{x, y});
}

std::vector<Edge> ArgumentationFramework::edges() const {
  std::vector<Edge> out;
  out.reserve(attacks_.size());
  for (const Attack& a : attacks_) out.emplace_back(a.attacker, a.target);
  return out;
}

bool ArgumentationFramework::operator==(const ArgumentationFramework& other) const {
  return *names_ == *other.names_ && attacks_ == other.attacks_;
}

// ---------------------------------------------------------------------------
// ValueBasedFramework

namespace {

// Finds one directed cycle among `nodes` using only attacks inside `nodes`.
std::vector<ArgIndex> find_cycle(const ArgumentationFramework& af,
                                 std::span<const ArgIndex> nodes) {
  std::map<ArgIndex, int> color;  // 0 white, 1 on stack, 2 done
  for (ArgIndex x : nodes) color[x] = 0;
  std::vector<ArgIndex> stack;
  std::vector<ArgIndex> cycle;

  auto dfs = [&](auto&& self, ArgIndex x) -> bool {
    color[x] = 1;
    stack.push_back(x);
    for (ArgIndex y : af.targets(x)) {
      auto it = color.find(y);
      if (it == color.end()) continue;
      if (it->second == 1) {
        auto start = std::find(stack.begin(), stack.end(), y);
        cycle.assign(start, stack.end());
        return true;
      }
      if (it->second == 0 && self(self, y)) return true;
    }
    stack.pop_back();
    color[x] = 2;
    return false;
  };
  for (ArgIndex x : nodes)
    if (color[x] == 0 && dfs(dfs, x)) return cycle;
  return {};
}

}  // namespace

std::optional<ValueBasedFramework> ValueBasedFramework::validate(const RawFramework& raw,
                                                                 ValidationReport& report) {
  report.violations.clear();
  auto add = [&](ErrorCode code, std::string message) {
    report.violations.push_back({code, std::move(message), {}, {}});
  };

  std::vector<std::string> values = raw.values;
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] == values[i - 1] && (i < 2 || values[i - 2] != values[i]))
      add(ErrorCode::DuplicateDeclaration, "duplicate value '" + values[i] + "'");
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<std::string> args;
  args.reserve(raw.arguments.size());
  for (const auto& entry : raw.arguments) args.push_back(entry.first);
  std::sort(args.begin(), args.end());
  for (std::size_t i = 1; i < args.size(); ++i)
    if (args[i] == args[i - 1] && (i < 2 || args[i - 2] != args[i]))
      add(ErrorCode::DuplicateDeclaration, "duplicate argument '" + args[i] + "'");
  args.erase(std::unique(args.begin(), args.end()), args.end());

  auto names = std::make_shared<const std::vector<std::string>>(args);
  ArgumentationFramework shell(names, {});

  auto value_lookup = [&](const std::string& v) -> std::optional<ValueIndex> {
    auto it = std::lower_bound(values.begin(), values.end(), v);
    if (it == values.end() || *it != v) return std::nullopt;
    return static_cast<ValueIndex>(it - values.begin());
  };

  std::vector<ValueIndex> assignment(args.size(), 0);
  std::vector<bool> assigned(args.size(), false);
  for (const auto& [arg, value] : raw.arguments) {
    ArgIndex x = *shell.find(arg);
    if (assigned[x]) continue;  // duplicate already reported
    auto v = value_lookup(value);
    if (!v) {
      add(ErrorCode::UnknownValue, "argument '" + arg + "' uses undeclared value '" + value + "'");
      continue;
    }
    assignment[x] = *v;
    assigned[x] = true;
  }

  std::vector<Attack> attacks;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [from, to] : raw.attacks) {
    if (!seen.insert({from, to}).second) {
      add(ErrorCode::DuplicateDeclaration, "duplicate attack " + from + " -> " + to);
      continue;
    }
    auto x = shell.find(from);
    auto y = shell.find(to);
    if (!x) add(ErrorCode::UnknownArgument, "attack names undeclared argument '" + from + "'");
    if (!y) add(ErrorCode::UnknownArgument, "attack names undeclared argument '" + to + "'");
    if (x && y) attacks.push_back({*x, *y});
  }

  std::vector<std::vector<ArgIndex>> members(values.size());
  for (ArgIndex x = 0; x < args.size(); ++x)
    if (assigned[x]) members[assignment[x]].push_back(x);
  for (ValueIndex v = 0; v < values.size(); ++v)
    if (members[v].empty())
      add(ErrorCode::UnusedValue, "value '" + values[v] + "' is not assigned to any argument");

  if (!report.ok()) return std::nullopt;

  ArgumentationFramework af(names, std::move(attacks));
  for (ValueIndex v = 0; v < values.size(); ++v) {
    auto cycle = find_cycle(af, members[v]);
    if (cycle.empty()) continue;
    Violation violation{ErrorCode::MultivaluedCycle, {}, values[v], {}};
    std::string text;
    for (ArgIndex x : cycle) {
      violation.cycle.push_back(af.name(x));
      text += af.name(x) + " -> ";
    }
    text += af.name(cycle.front());
    violation.message = "same-value cycle in value '" + values[v] + "': " + text;
    report.violations.push_back(std::move(violation));
  }
  if (!report.ok()) return std::nullopt;

  ValueBasedFramework vaf;
  vaf.af_ = std::move(af);
  vaf.values_ = std::move(values);
  vaf.assignment_ = std::move(assignment);
  vaf.members_ = std::move(members);
  return vaf;
}

ValueBasedFramework ValueBasedFramework::from_raw(const RawFramework& raw) {
  ValidationReport report;
  auto vaf = validate(raw, report);
  if (!vaf) throw Error(report.violations.front().code, report.violations.front().message);
  return std::move(*vaf);
}

std::optional<ValueIndex> ValueBasedFramework::find_value(std::string_view name) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), name);
  if (it == values_.end() || *it != name) return std::nullopt;
  return static_cast<ValueIndex>(it - values_.begin());
}

ValueIndex ValueBasedFramework::value_index_of(std::string_view name) const {
  if (auto v = find_value(name)) return *v;
  throw Error(ErrorCode::UnknownValue, "unknown value '" + std::string(name) + "'");
}

std::optional<ArgIndex> ValueBasedFramework::partner(ArgIndex x) const {
  auto group = members(value_of(x));
  if (group.size() != 2) return std::nullopt;
  return group[0] == x ? group[1] : group[0];
}

RawFramework ValueBasedFramework::to_raw() const {
  RawFramework raw;
  raw.values = values_;
  for (ArgIndex x = 0; x < size(); ++x) raw.arguments.emplace_back(name(x), value_name(value_of(x)));
  for (const Attack& a : af_.attacks()) raw.attacks.emplace_back(name(a.attacker), name(a.target));
  return raw;
}

bool ValueBasedFramework::operator==(const ValueBasedFramework& other) const {
  return af_ == other.af_ && values_ == other.values_ && assignment_ == other.assignment_;
}

// ---------------------------------------------------------------------------
// SpecificAudience

SpecificAudience::SpecificAudience(std::vector<ValueIndex> ascending)
    : ascending_(std::move(ascending)), rank_(ascending_.size(), ascending_.size()) {
  for (std::size_t i = 0; i < ascending_.size(); ++i) {
    ValueIndex v = ascending_[i];
    if (v >= ascending_.size() || rank_[v] != ascending_.size())
      throw Error(ErrorCode::InvalidAudience, "audience is not a permutation of the values");
    rank_[v] = i;
  }
}

SpecificAudience SpecificAudience::from_names(const ValueBasedFramework& vaf,
                                              std::span<const std::string> ascending) {
  if (ascending.size() != vaf.value_count())
    throw Error(ErrorCode::InvalidAudience, "audience must rank every value exactly once");
  std::vector<ValueIndex> order;
  for (const auto& name : ascending) {
    auto v = vaf.find_value(name);
    if (!v) throw Error(ErrorCode::InvalidAudience, "audience names unknown value '" + name + "'");
    order.push_back(*v);
  }
  return SpecificAudience(std::move(order));
}

std::string SpecificAudience::to_string(const ValueBasedFramework& vaf) const {
  std::string out;
  for (std::size_t i = 0; i < ascending_.size(); ++i) {
    if (i) out += " < ";
    out += vaf.value_name(ascending_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Semantics

namespace {

void check_members(const ArgumentationFramework& af, std::span<const ArgIndex> s) {
  for (ArgIndex x : s)
    if (x >= af.size())
      throw Error(ErrorCode::UnknownArgument, "argument index " + std::to_string(x) + " out of range");
}

}  // namespace

bool is_conflict_free(const ArgumentationFramework& af, std::span<const ArgIndex> s) {
  check_members(af, s);
  for (ArgIndex x : s)
    for (ArgIndex y : s)
      if (af.attacks(x, y)) return false;
  return true;
}

bool is_admissible(const ArgumentationFramework& af, std::span<const ArgIndex> s) {
  if (!is_conflict_free(af, s)) return false;
  std::vector<bool> in(af.size(), false);
  for (ArgIndex x : s) in[x] = true;
  for (ArgIndex x : s) {
    for (ArgIndex attacker : af.attackers(x)) {
      bool defended = false;
      for (ArgIndex defender : af.attackers(attacker))
        if (in[defender]) {
          defended = true;
          break;
        }
      if (!defended) return false;
    }
  }
  return true;
}

bool is_acyclic(const ArgumentationFramework& af) {
  auto edges = af.edges();
  return is_acyclic(af.size(), edges);
}

std::vector<Label> grounded_labeling(const ArgumentationFramework& af) {
  auto edges = af.edges();
  auto order = topological_order(af.size(), edges);
  if (!order) throw Error(ErrorCode::CyclicFramework, "grounded extension requires an acyclic framework");
  std::vector<Label> label(af.size(), Label::Out);
  for (ArgIndex x : *order) {
    bool all_out = true;
    for (ArgIndex attacker : af.attackers(x))
      if (label[attacker] == Label::In) {
        all_out = false;
        break;
      }
    label[x] = all_out ? Label::In : Label::Out;
  }
  return label;
}

ArgumentSet grounded_extension(const ArgumentationFramework& af) {
  auto label = grounded_labeling(af);
  ArgumentSet in;
  for (ArgIndex x = 0; x < label.size(); ++x)
    if (label[x] == Label::In) in.push_back(x);
  return in;
}

ArgumentationFramework induced_af(const ValueBasedFramework& vaf, const SpecificAudience& aud) {
  if (aud.size() != vaf.value_count())
    throw Error(ErrorCode::InvalidAudience, "audience does not rank the framework's values");
  std::vector<Attack> kept;
  kept.reserve(vaf.af().attacks().size());
  for (const Attack& a : vaf.af().attacks())
    if (!aud.less(vaf.value_of(a.attacker), vaf.value_of(a.target))) kept.push_back(a);
  ArgumentationFramework induced(vaf.af().shared_names(), std::move(kept));
  assert(is_acyclic(induced));
  return induced;
}

ValueBasedFramework subtract_value(const ValueBasedFramework& vaf, ValueIndex v) {
  if (v >= vaf.value_count())
    throw Error(ErrorCode::UnknownValue, "value index " + std::to_string(v) + " out of range");
  RawFramework raw;
  for (ValueIndex u = 0; u < vaf.value_count(); ++u)
    if (u != v) raw.values.push_back(vaf.value_name(u));
  for (ArgIndex x = 0; x < vaf.size(); ++x)
    if (vaf.value_of(x) != v) raw.arguments.emplace_back(vaf.name(x), vaf.value_name(vaf.value_of(x)));
  for (const Attack& a : vaf.af().attacks())
    if (vaf.value_of(a.attacker) != v && vaf.value_of(a.target) != v)
      raw.attacks.emplace_back(vaf.name(a.attacker), vaf.name(a.target));
  return ValueBasedFramework::from_raw(raw);
}

Metrics metrics(const ValueBasedFramework& vaf) {
  Metrics m;
  for (ValueIndex v = 0; v < vaf.value_count(); ++v)
    m.value_width = std::max(m.value_width, vaf.members(v).size());
  for (const Attack& a : vaf.af().attacks())
    if (vaf.value_of(a.attacker) == vaf.value_of(a.target)) ++m.attack_width;
  return m;
}

std::vector<std::string> names_of(const ArgumentationFramework& af, std::span<const ArgIndex> s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (ArgIndex x : s) out.push_back(af.name(x));
  return out;
}

}  // namespace vafkit
