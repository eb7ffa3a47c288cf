// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vafkit/textio.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace vafkit {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

bool is_identifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

}  // namespace

RawFramework parse_vaf_raw(std::string_view text) {
  RawFramework raw;
  std::set<std::string, std::less<>> values, arguments;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const Token& keyword = tokens.front();
    auto expect = [&](std::size_t count) {
      if (tokens.size() != count + 1)
        throw SyntaxError(line_no, keyword.column,
                          "'" + std::string(keyword.text) + "' takes " + std::to_string(count) + " operand" +
                              (count == 1 ? "" : "s") + ", got " + std::to_string(tokens.size() - 1));
      for (std::size_t i = 1; i < tokens.size(); ++i)
        if (!is_identifier(tokens[i].text))
          throw SyntaxError(line_no, tokens[i].column, "invalid identifier '" + std::string(tokens[i].text) + "'");
    };
    auto require = [&](const std::set<std::string, std::less<>>& known, const Token& t, const char* what) {
      if (!known.count(t.text))
        throw SyntaxError(line_no, t.column, std::string("undeclared ") + what + " '" + std::string(t.text) + "'");
    };

    if (keyword.text == "value") {
      expect(1);
      values.emplace(tokens[1].text);
      raw.values.emplace_back(tokens[1].text);
    } else if (keyword.text == "arg") {
      expect(2);
      require(values, tokens[2], "value");
      arguments.emplace(tokens[1].text);
      raw.arguments.emplace_back(std::string(tokens[1].text), std::string(tokens[2].text));
    } else if (keyword.text == "att") {
      expect(2);
      require(arguments, tokens[1], "argument");
      require(arguments, tokens[2], "argument");
      raw.attacks.emplace_back(std::string(tokens[1].text), std::string(tokens[2].text));
    } else {
      throw SyntaxError(line_no, keyword.column, "unknown directive '" + std::string(keyword.text) + "'");
    }
  }
  return raw;
}

ValueBasedFramework parse_vaf(std::string_view text) { return ValueBasedFramework::from_raw(parse_vaf_raw(text)); }

std::string emit_vaf(const ValueBasedFramework& vaf) {
  std::ostringstream out;
  for (const auto& v : vaf.value_names()) out << "value " << v << '\n';
  for (ArgIndex x = 0; x < vaf.size(); ++x) out << "arg " << vaf.name(x) << ' ' << vaf.value_name(vaf.value_of(x)) << '\n';
  for (const Attack& a : vaf.af().attacks()) out << "att " << vaf.name(a.attacker) << ' ' << vaf.name(a.target) << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path);
  return buffer.str();
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Vertices of both graph kinds are stored sorted by name, so index order is
// name order.
std::string dot(const char* kind, const char* arrow, const std::vector<std::string>& vertices,
                std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << kind << " G {\n";
  for (const auto& v : vertices) out << "  " << quote(v) << ";\n";
  for (auto [u, v] : edges) out << "  " << quote(vertices[u]) << ' ' << arrow << ' ' << quote(vertices[v]) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const UndirectedGraph& g) { return dot("graph", "--", g.vertices, g.edges); }
std::string to_dot(const DirectedGraph& g) { return dot("digraph", "->", g.vertices, g.edges); }

namespace {

// Fixed mappings from raw 64-bit draws, so output does not depend on the
// standard library's distribution implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do draw = rng();
  while (draw >= limit);
  return draw % bound;
}

bool bernoulli(std::mt19937_64& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

std::string padded(char prefix, std::size_t i, std::size_t count) {
  std::string digits = std::to_string(i);
  std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
  return prefix + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

ValueBasedFramework random_vaf(const RandomParams& p) {
  if (p.values > p.arguments)
    throw Error(ErrorCode::InvalidInput, "more values than arguments leaves some value unused");
  if (p.width * p.values < p.arguments)
    throw Error(ErrorCode::InvalidInput, "width times values is smaller than the argument count");
  if (p.density < 0.0 || p.density > 1.0) throw Error(ErrorCode::InvalidInput, "density must lie in [0, 1]");

  std::mt19937_64 rng(p.seed);
  std::vector<std::size_t> value_of(p.arguments), load(p.values, 0);
  for (std::size_t x = 0; x < p.arguments; ++x) {
    if (x < p.values) {
      value_of[x] = x;
    } else {
      std::vector<std::size_t> open;
      for (std::size_t v = 0; v < p.values; ++v)
        if (load[v] < p.width) open.push_back(v);
      value_of[x] = open[bounded(rng, open.size())];
    }
    ++load[value_of[x]];
  }
  std::vector<int> side(p.arguments, 0);
  if (p.bipartite)
    for (auto& s : side) s = static_cast<int>(rng() >> 63);

  RawFramework raw;
  for (std::size_t v = 0; v < p.values; ++v) raw.values.push_back(padded('v', v, p.values));
  for (std::size_t x = 0; x < p.arguments; ++x)
    raw.arguments.emplace_back(padded('a', x, p.arguments), raw.values[value_of[x]]);
  for (std::size_t a = 0; a < p.arguments; ++a)
    for (std::size_t b = 0; b < p.arguments; ++b) {
      if (a == b || (value_of[a] == value_of[b] && a > b)) continue;
      if (p.bipartite && side[a] == side[b]) continue;
      if (bernoulli(rng, p.density)) raw.attacks.emplace_back(raw.arguments[a].first, raw.arguments[b].first);
    }
  return ValueBasedFramework::from_raw(raw);
}

}  // namespace vafkit
