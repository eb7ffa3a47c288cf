// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <vector>

#include "vafkit/core.hpp"
#include "vafkit/reductions.hpp"
#include "vafkit/textio.hpp"

namespace fixtures {

inline std::string data_path(const std::string& file) { return std::string(VAFKIT_TEST_DATA) + "/" + file; }

// Six arguments over values S, E, T.
inline vafkit::ValueBasedFramework running() { return vafkit::parse_vaf(vafkit::read_file(data_path("running.vaf"))); }

// Ten arguments x1..x5, z1..z5 over values v1..v5.
inline vafkit::ValueBasedFramework bipartite() {
  return vafkit::parse_vaf(vafkit::read_file(data_path("bipartite.vaf")));
}

// (x1 | x2 | x3) & (-x1 | x2 | -x3) & (x1 | -x2 | -x3)
inline vafkit::CnfFormula hardness_formula() { return {3, {{1, 2, 3}, {-1, 2, -3}, {1, -2, -3}}}; }

inline std::set<std::string> name_set(const vafkit::ArgumentationFramework& af, const vafkit::ArgumentSet& s) {
  std::set<std::string> out;
  for (auto x : s) out.insert(af.name(x));
  return out;
}

inline std::vector<vafkit::ArgIndex> indices(const vafkit::ValueBasedFramework& vaf,
                                             const std::vector<std::string>& names) {
  std::vector<vafkit::ArgIndex> out;
  for (const auto& n : names) out.push_back(vaf.index_of(n));
  return out;
}

inline std::vector<vafkit::ValueIndex> value_indices(const vafkit::ValueBasedFramework& vaf,
                                                     const std::vector<std::string>& names) {
  std::vector<vafkit::ValueIndex> out;
  for (const auto& n : names) out.push_back(vaf.value_index_of(n));
  return out;
}

// Audience from values listed highest first, e.g. {"S", "E", "T"} for S > E > T.
inline vafkit::SpecificAudience descending(const vafkit::ValueBasedFramework& vaf, std::vector<std::string> names) {
  std::vector<std::string> ascending(names.rbegin(), names.rend());
  return vafkit::SpecificAudience::from_names(vaf, ascending);
}

}  // namespace fixtures
