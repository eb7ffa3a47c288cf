// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "vafkit/core.hpp"
#include "vafkit/graph.hpp"

namespace vafkit {

// Line format:
//   value <id>
//   arg <id> <value-id>
//   att <src> <dst>
// '#' starts a comment; identifiers match [A-Za-z0-9_]+.  References to
// undeclared values or arguments are syntax errors.
RawFramework parse_vaf_raw(std::string_view text);
// parse_vaf_raw followed by ValueBasedFramework::from_raw.
ValueBasedFramework parse_vaf(std::string_view text);
// Canonical document: values, arguments and attacks in sorted order.
std::string emit_vaf(const ValueBasedFramework& vaf);

std::string read_file(const std::string& path);  // throws IoError

// Graphviz output with quoted, sorted vertices and edges.
std::string to_dot(const UndirectedGraph& g);
std::string to_dot(const DirectedGraph& g);

struct RandomParams {
  std::size_t arguments = 6;
  std::size_t values = 3;
  std::size_t width = 2;      // maximum arguments per value
  std::uint64_t seed = 1;
  double density = 0.3;       // probability of each admissible attack
  bool bipartite = false;     // attacks only across a random 2-colouring
};

// Every value is used and intra-value attacks only go from lower to higher
// argument index, so the result always validates.  Throws InvalidInput when
// the parameters admit no such framework.
ValueBasedFramework random_vaf(const RandomParams& params);

}  // namespace vafkit
