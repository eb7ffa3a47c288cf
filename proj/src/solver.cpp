// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vafkit/solver.hpp"

#include <cmath>

#include "vafkit/bipartite.hpp"
#include "vafkit/certpath.hpp"
#include "vafkit/structure.hpp"

namespace vafkit {

const char* to_string(Problem problem) {
  return problem == Problem::Subjective ? "subjective" : "objective";
}

const char* to_string(SolverChoice choice) {
  switch (choice) {
    case SolverChoice::Auto: return "auto";
    case SolverChoice::Bruteforce: return "bruteforce";
    case SolverChoice::Orientations: return "orientations";
    case SolverChoice::Formulas: return "formulas";
    case SolverChoice::Certpath: return "certpath";
    case SolverChoice::Bipartite: return "bipartite";
  }
  return "unknown";
}

std::optional<Problem> parse_problem(std::string_view text) {
  if (text == "subjective") return Problem::Subjective;
  if (text == "objective") return Problem::Objective;
  return std::nullopt;
}

std::optional<SolverChoice> parse_solver(std::string_view text) {
  for (auto c : {SolverChoice::Auto, SolverChoice::Bruteforce, SolverChoice::Orientations, SolverChoice::Formulas,
                 SolverChoice::Certpath, SolverChoice::Bipartite})
    if (text == to_string(c)) return c;
  return std::nullopt;
}

namespace {

struct Costs {
  bool width_two = false;
  bool bipartite = false;
  std::size_t values = 0;
  std::size_t reference_edges = 0;
  std::size_t arguments = 0;
};

Costs costs_of(const ValueBasedFramework& vaf) {
  Costs c;
  c.width_two = metrics(vaf).value_width <= 2;
  c.bipartite = is_bipartite(graph_structure(vaf)).bipartite;
  c.values = vaf.value_count();
  c.reference_edges = reference_graph(vaf).edges.size();
  c.arguments = vaf.size();
  return c;
}

}  // namespace

std::vector<SolverChoice> applicable_solvers(const ValueBasedFramework& vaf, const EnumerationLimits& limits) {
  auto c = costs_of(vaf);
  std::vector<SolverChoice> out;
  if (c.values <= limits.max_values) out.push_back(SolverChoice::Bruteforce);
  if (c.reference_edges <= limits.max_reference_edges) out.push_back(SolverChoice::Orientations);
  if (c.reference_edges <= limits.max_reference_edges && c.arguments <= limits.max_formula_arguments)
    out.push_back(SolverChoice::Formulas);
  if (c.width_two) out.push_back(SolverChoice::Certpath);
  if (c.width_two && c.bipartite) out.push_back(SolverChoice::Bipartite);
  return out;
}

SolverChoice choose_solver(const ValueBasedFramework& vaf, const EnumerationLimits& limits) {
  auto c = costs_of(vaf);
  if (c.width_two && c.bipartite) return SolverChoice::Bipartite;
  if (c.width_two) return SolverChoice::Certpath;
  bool audiences = c.values <= limits.max_values;
  bool orientations = c.reference_edges <= limits.max_reference_edges;
  if (audiences && orientations)
    return std::lgamma(static_cast<double>(c.values) + 1.0) <= static_cast<double>(c.reference_edges) * std::log(2.0)
               ? SolverChoice::Bruteforce
               : SolverChoice::Orientations;
  if (audiences) return SolverChoice::Bruteforce;
  if (orientations) return SolverChoice::Orientations;
  throw Error(ErrorCode::TooLarge, std::to_string(c.values) + " values and " + std::to_string(c.reference_edges) +
                                       " reference edges exceed the enumeration limits");
}

SolveReport solve(const ValueBasedFramework& vaf, Problem problem, ArgIndex x, SolverChoice choice,
                  const EnumerationLimits& limits) {
  if (x >= vaf.size())
    throw Error(ErrorCode::UnknownArgument, "argument index " + std::to_string(x) + " out of range");
  if (choice == SolverChoice::Auto) choice = choose_solver(vaf, limits);
  SolveReport report;
  report.solver = choice;
  const bool subjective = problem == Problem::Subjective;

  switch (choice) {
    case SolverChoice::Auto:
      break;
    case SolverChoice::Bruteforce: {
      auto d = subjective ? subjective_bruteforce(vaf, x, limits) : objective_bruteforce(vaf, x, limits);
      report.accepted = d.accepted;
      report.audience = d.audience;
      break;
    }
    case SolverChoice::Orientations: {
      auto d = subjective ? subjective_via_orientations(vaf, x, limits) : objective_via_orientations(vaf, x, limits);
      report.accepted = d.accepted;
      if (d.orientation) report.audience = audience_from_orientation(vaf, reference_graph(vaf), *d.orientation);
      break;
    }
    case SolverChoice::Formulas:
      report.accepted = subjective ? eval_phi_s(vaf, x, limits) : eval_phi_o(vaf, x, limits);
      break;
    case SolverChoice::Certpath:
      if (subjective) {
        auto r = subjective_width2(vaf, x);
        report.accepted = r.accepted;
        if (r.path) {
          report.path = names_of(vaf.af(), r.path->arguments);
          report.audience = witness_audience(vaf, *r.path);
        }
      } else {
        auto r = objective_width2(vaf, x);
        report.accepted = r.accepted;
        report.audience = r.counterexample;
        if (r.failing_attacker) report.failing_attacker = vaf.name(*r.failing_attacker);
      }
      break;
    case SolverChoice::Bipartite:
      if (subjective) {
        auto r = subjective_bipartite(vaf, x);
        report.accepted = r.accepted;
        report.fallback = r.fallback;
        if (r.path) {
          report.path = names_of(vaf.af(), r.path->arguments);
          report.audience = witness_audience(vaf, *r.path);
        }
      } else {
        auto r = objective_bipartite(vaf, x);
        report.accepted = r.result.accepted;
        report.fallback = r.fallback;
        report.audience = r.result.counterexample;
        if (r.result.failing_attacker) report.failing_attacker = vaf.name(*r.result.failing_attacker);
      }
      break;
  }
  return report;
}

}  // namespace vafkit
