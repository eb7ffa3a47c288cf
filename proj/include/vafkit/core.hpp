// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vafkit/error.hpp"
#include "vafkit/graph.hpp"

namespace vafkit {

using ArgIndex = std::size_t;
using ValueIndex = std::size_t;

// Sorted list of argument indices.
using ArgumentSet = std::vector<ArgIndex>;

struct Attack {
  ArgIndex attacker;
  ArgIndex target;

  auto operator<=>(const Attack&) const = default;
};

/// Abstract argumentation framework (X, A).
///
/// Arguments are opaque, case-sensitive identifiers held in lexicographic
/// order; an argument's index is its rank in that order.  Frameworks derived
/// from one another (induced frameworks) share the name table.
class ArgumentationFramework {
 public:
  ArgumentationFramework();

  // Throws DuplicateDeclaration or UnknownArgument.
  static ArgumentationFramework from_names(
      std::vector<std::string> arguments,
      std::span<const std::pair<std::string, std::string>> attacks);

  // `names` must be sorted and unique; attacks are sorted and de-duplicated.
  ArgumentationFramework(std::shared_ptr<const std::vector<std::string>> names,
                         std::vector<Attack> attacks);

  std::size_t size() const { return names_->size(); }
  const std::string& name(ArgIndex x) const { return names_->at(x); }
  const std::vector<std::string>& names() const { return *names_; }
  const std::shared_ptr<const std::vector<std::string>>& shared_names() const { return names_; }

  std::optional<ArgIndex> find(std::string_view name) const;
  ArgIndex index_of(std::string_view name) const;  // throws UnknownArgument

  std::span<const Attack> attacks() const { return attacks_; }
  std::span<const ArgIndex> attackers(ArgIndex x) const { return attackers_.at(x); }
  std::span<const ArgIndex> targets(ArgIndex x) const { return targets_.at(x); }
  bool attacks(ArgIndex x, ArgIndex y) const;

  std::vector<Edge> edges() const;

  bool operator==(const ArgumentationFramework& other) const;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<ArgIndex>> attackers_;
  std::vector<std::vector<ArgIndex>> targets_;
};

// Unvalidated framework description, as read from a file or built by hand.
struct RawFramework {
  std::vector<std::string> values;
  std::vector<std::pair<std::string, std::string>> arguments;  // (argument, value)
  std::vector<std::pair<std::string, std::string>> attacks;    // (attacker, target)
};

struct Violation {
  ErrorCode code;
  std::string message;
  std::string value;               // MultivaluedCycle: the offending value
  std::vector<std::string> cycle;  // MultivaluedCycle: x0 -> x1 -> ... -> x0
};

class ValueBasedFramework;

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Value-based framework (X, A, V, eta).
///
/// Invariants established by validation: every value is used, and every
/// same-value sub-framework is acyclic.  Immutable afterwards.
class ValueBasedFramework {
 public:
  ValueBasedFramework() = default;

  // Returns the framework, or fills `report` and returns nullopt.
  static std::optional<ValueBasedFramework> validate(const RawFramework& raw,
                                                     ValidationReport& report);
  // Throws an Error carrying the first violation.
  static ValueBasedFramework from_raw(const RawFramework& raw);

  const ArgumentationFramework& af() const { return af_; }
  std::size_t size() const { return af_.size(); }
  const std::string& name(ArgIndex x) const { return af_.name(x); }
  ArgIndex index_of(std::string_view name) const { return af_.index_of(name); }

  std::size_t value_count() const { return values_.size(); }
  const std::string& value_name(ValueIndex v) const { return values_.at(v); }
  const std::vector<std::string>& value_names() const { return values_; }
  std::optional<ValueIndex> find_value(std::string_view name) const;
  ValueIndex value_index_of(std::string_view name) const;  // throws UnknownValue

  ValueIndex value_of(ArgIndex x) const { return assignment_.at(x); }
  std::span<const ArgIndex> members(ValueIndex v) const { return members_.at(v); }
  // The other argument sharing x's value, if there is exactly one.
  std::optional<ArgIndex> partner(ArgIndex x) const;

  RawFramework to_raw() const;

  bool operator==(const ValueBasedFramework& other) const;

 private:
  ArgumentationFramework af_;
  std::vector<std::string> values_;
  std::vector<ValueIndex> assignment_;
  std::vector<std::vector<ArgIndex>> members_;
};

/// Total order on the values of a framework, stored ascending (least first).
class SpecificAudience {
 public:
  // Throws InvalidAudience unless `ascending` is a permutation of 0..n-1.
  explicit SpecificAudience(std::vector<ValueIndex> ascending);
  static SpecificAudience from_names(const ValueBasedFramework& vaf,
                                     std::span<const std::string> ascending);

  std::span<const ValueIndex> ascending() const { return ascending_; }
  std::size_t size() const { return ascending_.size(); }
  std::size_t rank(ValueIndex v) const { return rank_.at(v); }
  bool less(ValueIndex u, ValueIndex v) const { return rank_.at(u) < rank_.at(v); }

  // "S < E < T"
  std::string to_string(const ValueBasedFramework& vaf) const;

  bool operator==(const SpecificAudience& other) const { return ascending_ == other.ascending_; }

 private:
  std::vector<ValueIndex> ascending_;
  std::vector<std::size_t> rank_;
};

enum class Label { In, Out };

struct Metrics {
  std::size_t value_width = 0;
  std::size_t attack_width = 0;

  bool operator==(const Metrics&) const = default;
};

// Throws UnknownArgument if `s` names an index outside the framework.
bool is_conflict_free(const ArgumentationFramework& af, std::span<const ArgIndex> s);
bool is_admissible(const ArgumentationFramework& af, std::span<const ArgIndex> s);

bool is_acyclic(const ArgumentationFramework& af);

// IN/OUT labeling of an acyclic framework; throws CyclicFramework.
std::vector<Label> grounded_labeling(const ArgumentationFramework& af);
ArgumentSet grounded_extension(const ArgumentationFramework& af);

// Keeps (x, y) unless value(x) < value(y) in the audience.
ArgumentationFramework induced_af(const ValueBasedFramework& vaf, const SpecificAudience& aud);

// F - v: drops the arguments holding `v` and every incident attack.
ValueBasedFramework subtract_value(const ValueBasedFramework& vaf, ValueIndex v);

Metrics metrics(const ValueBasedFramework& vaf);

std::vector<std::string> names_of(const ArgumentationFramework& af, std::span<const ArgIndex> s);

}  // namespace vafkit
