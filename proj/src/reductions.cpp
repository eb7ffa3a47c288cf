// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vafkit/reductions.hpp"

#include <cassert>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "vafkit/structure.hpp"

namespace vafkit {

void validate_formula(const CnfFormula& phi) {
  if (phi.variable_count < 0) throw Error(ErrorCode::MalformedClause, "negative variable count");
  for (std::size_t j = 0; j < phi.clauses.size(); ++j)
    for (int lit : phi.clauses[j])
      if (lit == 0 || std::abs(lit) > phi.variable_count)
        throw Error(ErrorCode::MalformedClause,
                    "clause " + std::to_string(j + 1) + " has literal " + std::to_string(lit) +
                        " outside 1.." + std::to_string(phi.variable_count));
}

namespace {

std::string layer(const char* prefix, std::size_t j) { return prefix + std::to_string(j); }
std::string literal(const char* prefix, std::size_t j, std::size_t i) {
  return prefix + std::to_string(j) + "_" + std::to_string(i);
}

class GadgetBuilder {
 public:
  void pair(const std::string& x, const std::string& z, const std::string& value) {
    raw_.values.push_back(value);
    raw_.arguments.emplace_back(x, value);
    raw_.arguments.emplace_back(z, value);
  }
  void single(const std::string& x, const std::string& value) {
    raw_.values.push_back(value);
    raw_.arguments.emplace_back(x, value);
  }
  void attack(const std::string& a, const std::string& b) { raw_.attacks.emplace_back(a, b); }
  void drop(const std::string& a, const std::string& b) {
    std::erase(raw_.attacks, std::pair<std::string, std::string>{a, b});
  }
  Reduction finish(const std::string& query) {
    Reduction r;
    r.vaf = ValueBasedFramework::from_raw(raw_);
    r.query = r.vaf.index_of(query);
    return r;
  }

 private:
  RawFramework raw_;
};

GadgetBuilder base_gadget(const CnfFormula& phi) {
  validate_formula(phi);
  const std::size_t m = phi.clauses.size();
  if (m == 0) throw Error(ErrorCode::MalformedClause, "formula has no clauses");
  GadgetBuilder b;
  for (std::size_t j = 1; j <= m; ++j) {
    b.pair(layer("x", j), layer("z", j), layer("v", j));
    for (std::size_t i = 1; i <= 3; ++i) b.pair(literal("x", j, i), literal("z", j, i), literal("v", j, i));
  }
  b.single("t", "vt");

  b.attack("z1", "x1");
  for (std::size_t j = 1; j <= m; ++j)
    for (std::size_t i = 1; i <= 3; ++i) {
      b.attack(literal("x", j, i), layer("z", j));
      b.attack(literal("z", j, i), layer("x", j));
    }
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = 1; i <= 3; ++i) {
      b.attack(layer("x", j + 1), literal("z", j, i));
      b.attack(layer("z", j + 1), literal("x", j, i));
    }
  for (std::size_t i = 1; i <= 3; ++i) b.attack("t", literal("z", m, i));
  for (std::size_t j = 1; j <= m; ++j)
    for (std::size_t jp = 1; jp < j; ++jp)
      for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t ip = 1; ip <= 3; ++ip)
          if (phi.clauses[j - 1][i - 1] == -phi.clauses[jp - 1][ip - 1])
            b.attack(literal("x", j, i), literal("x", jp, ip));
  return b;
}

void add_objective_query(GadgetBuilder& b) {
  b.single("x0", "v0");
  b.attack("x1", "x0");
}

void check_gadget(const Reduction& r) {
  [[maybe_unused]] auto m = metrics(r.vaf);
  assert(m.value_width == 2 && m.attack_width == 1);
  assert(is_acyclic(r.vaf.af()));
}

}  // namespace

Reduction reduce_subjective(const CnfFormula& phi) {
  auto r = base_gadget(phi).finish("x1");
  check_gadget(r);
  return r;
}

Reduction reduce_objective(const CnfFormula& phi) {
  auto b = base_gadget(phi);
  add_objective_query(b);
  auto r = b.finish("x0");
  check_gadget(r);
  return r;
}

Reduction reduce_bipartite_valuegraph(const CnfFormula& phi, bool objective) {
  validate_formula(phi);
  const std::size_t m = phi.clauses.size();
  auto sign = [&](std::size_t j) {
    const auto& c = phi.clauses[j];
    if (c[0] > 0 && c[1] > 0 && c[2] > 0) return 1;
    if (c[0] < 0 && c[1] < 0 && c[2] < 0) return -1;
    return 0;
  };
  std::size_t k = 0;
  while (k < m && sign(k) == 1) ++k;
  for (std::size_t j = k; j < m; ++j)
    if (sign(j) != -1)
      throw Error(ErrorCode::NotMonotoneSplit, "clause " + std::to_string(j + 1) + " is neither negative nor preceded "
                                                                                   "only by positive clauses");
  if (k < 2)
    throw Error(ErrorCode::NotMonotoneSplit,
                "need at least two leading positive clauses, found " + std::to_string(k));

  auto b = base_gadget(phi);
  b.pair("xB", "zB", "vB");
  if (k < m) {
    for (std::size_t i = 1; i <= 3; ++i) {
      b.drop(layer("x", k + 1), literal("z", k, i));
      b.drop(layer("z", k + 1), literal("x", k, i));
      b.attack("xB", literal("z", k, i));
      b.attack("zB", literal("x", k, i));
    }
    b.attack(layer("x", k + 1), "zB");
    b.attack(layer("z", k + 1), "xB");
  } else {
    // All clauses positive: the buffer sits between the last layer and t.
    for (std::size_t i = 1; i <= 3; ++i) {
      b.drop("t", literal("z", m, i));
      b.attack("xB", literal("z", m, i));
      b.attack("zB", literal("x", m, i));
    }
    b.attack("t", "zB");
  }
  if (objective) add_objective_query(b);
  auto r = b.finish(objective ? "x0" : "x1");
  check_gadget(r);
  assert(is_bipartite(value_graph_undirected(r.vaf)).bipartite);
  return r;
}

std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& phi) {
  validate_formula(phi);
  const int n = phi.variable_count;
  if (n > 24) throw Error(ErrorCode::TooManyVariables, std::to_string(n) + " variables exceed the limit of 24");
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    auto holds = [&](int lit) {
      bool value = (bits >> (std::abs(lit) - 1)) & 1u;
      return lit > 0 ? value : !value;
    };
    bool all = true;
    for (const auto& c : phi.clauses)
      if (!holds(c[0]) && !holds(c[1]) && !holds(c[2])) {
        all = false;
        break;
      }
    if (!all) continue;
    std::vector<bool> assignment(n + 1, false);
    for (int v = 1; v <= n; ++v) assignment[v] = (bits >> (v - 1)) & 1u;
    return assignment;
  }
  return std::nullopt;
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula phi;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<int> pending;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == 'c') continue;
    if (line[first] == '%') break;  // SATLIB trailer
    if (line[first] == 'p') {
      if (header) throw SyntaxError(line_no, first + 1, "duplicate problem line");
      std::istringstream in{std::string(line.substr(first + 1))};
      std::string format;
      long long n = -1, m = -1;
      if (!(in >> format >> n >> m) || format != "cnf" || n < 0 || m < 0)
        throw SyntaxError(line_no, first + 1, "expected 'p cnf <variables> <clauses>'");
      std::string extra;
      if (in >> extra) throw SyntaxError(line_no, first + 1, "trailing text after problem line");
      phi.variable_count = static_cast<int>(n);
      declared_clauses = static_cast<std::size_t>(m);
      header = true;
      continue;
    }
    if (!header) throw SyntaxError(line_no, first + 1, "clause before problem line");
    std::size_t i = first;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = line.find_first_of(" \t", i);
      if (j == std::string_view::npos) j = line.size();
      int lit = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, lit);
      if (ec != std::errc() || ptr != line.data() + j)
        throw SyntaxError(line_no, i + 1, "expected an integer literal, got '" + std::string(line.substr(i, j - i)) + "'");
      if (lit == 0) {
        if (pending.size() != 3)
          throw Error(ErrorCode::MalformedClause, "line " + std::to_string(line_no) + ": clause has " +
                                                      std::to_string(pending.size()) + " literals, expected 3");
        phi.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(lit);
      }
      i = j;
    }
  }
  if (!header) throw SyntaxError(line_no, 1, "missing problem line");
  if (!pending.empty()) throw SyntaxError(line_no, 1, "last clause is not terminated by 0");
  if (phi.clauses.size() != declared_clauses)
    throw SyntaxError(line_no, 1, "problem line declares " + std::to_string(declared_clauses) + " clauses, found " +
                                      std::to_string(phi.clauses.size()));
  validate_formula(phi);
  return phi;
}

std::string emit_dimacs(const CnfFormula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.variable_count << ' ' << phi.clauses.size() << '\n';
  for (const auto& c : phi.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

}  // namespace vafkit
