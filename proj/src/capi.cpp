// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vafkit/vafkit.h"

#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "vafkit/bipartite.hpp"
#include "vafkit/reductions.hpp"
#include "vafkit/solver.hpp"
#include "vafkit/structure.hpp"
#include "vafkit/textio.hpp"

struct vafkit_framework {
  vafkit::ValueBasedFramework vaf;
};

struct vafkit_result {
  bool accepted = false;
  std::string solver;
  std::optional<std::string> audience;
  std::optional<std::string> path;
  std::optional<std::string> failing_attacker;
  bool fallback = false;
};

namespace {

thread_local std::string last_error;

vafkit_status fail(vafkit_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
vafkit_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return VAFKIT_OK;
  } catch (const vafkit::Error& e) {
    return fail(static_cast<vafkit_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(VAFKIT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(VAFKIT_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (!p) throw vafkit::Error(vafkit::ErrorCode::InvalidInput, std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

vafkit::ArgIndex lookup(const vafkit::ValueBasedFramework& vaf, const char* name) {
  require(name, "argument name");
  return vaf.index_of(name);
}

// Drops absent vertices from an H_F variant.
vafkit::DirectedGraph present_part(const vafkit::ValueBasedFramework& vaf, const vafkit::ValueDigraph& h) {
  vafkit::DirectedGraph g;
  std::vector<std::size_t> remap(h.present.size(), 0);
  for (std::size_t v = 0; v < h.present.size(); ++v)
    if (h.present[v]) {
      remap[v] = g.vertices.size();
      g.vertices.push_back(vaf.value_name(v));
    }
  for (auto [u, v] : h.edges) g.edges.emplace_back(remap[u], remap[v]);
  return g;
}

std::string export_dot(const vafkit::ValueBasedFramework& vaf, const std::string& graph, const char* query) {
  using namespace vafkit;
  auto needs_query = [&] {
    if (!query) throw Error(ErrorCode::InvalidInput, "graph '" + graph + "' needs a query argument");
    return vaf.index_of(query);
  };
  if (graph == "structure") return to_dot(graph_structure(vaf));
  if (graph == "value") return to_dot(value_graph(vaf));
  if (graph == "extended") return to_dot(extended_structure(vaf));
  if (graph == "gaifman") return to_dot(gaifman_structure(vaf, needs_query()));
  if (graph == "reference") {
    DirectedGraph g;
    g.vertices = vaf.value_names();
    g.edges = reference_graph(vaf).edges;
    return to_dot(g);
  }
  if (graph == "hf") return to_dot(present_part(vaf, build_hf(vaf, needs_query())));
  if (graph.rfind("hf-minus:", 0) == 0) {
    ArgIndex x = needs_query();
    return to_dot(present_part(vaf, build_hf_minus(vaf, x, vaf.value_index_of(graph.substr(9)))));
  }
  throw Error(ErrorCode::InvalidInput, "unknown graph '" + graph + "'");
}

std::string metrics_report(const vafkit::ValueBasedFramework& vaf) {
  using namespace vafkit;
  auto m = metrics(vaf);
  auto graph = graph_structure(vaf);
  auto values = value_graph_undirected(vaf);
  auto extended = extended_structure(vaf);
  std::ostringstream out;
  out << "arguments: " << vaf.size() << '\n'
      << "values: " << vaf.value_count() << '\n'
      << "attacks: " << vaf.af().attacks().size() << '\n'
      << "value_width: " << m.value_width << '\n'
      << "attack_width: " << m.attack_width << '\n'
      << "graph_bipartite: " << yes_no(is_bipartite(graph).bipartite) << '\n'
      << "value_graph_bipartite: " << yes_no(is_bipartite(values).bipartite) << '\n'
      << "graph_width_heuristic: " << heuristic_tree_decomposition(graph).width() << '\n'
      << "value_graph_width_heuristic: " << heuristic_tree_decomposition(values).width() << '\n'
      << "extended_width_heuristic: " << heuristic_tree_decomposition(extended).width() << '\n'
      << "acyclic: " << yes_no(is_acyclic(vaf.af())) << '\n'
      // Parsing rejects violations, so a loaded framework always satisfies it.
      << "multivalued_cycles_assumption: true\n";
  return out.str();
}

}  // namespace

extern "C" {

const char* vafkit_version(void) { return "0.1.0"; }
const char* vafkit_last_error(void) { return last_error.c_str(); }

const char* vafkit_status_name(vafkit_status status) {
  if (status == VAFKIT_OK) return "Ok";
  if (status == VAFKIT_INTERNAL) return "Internal";
  return vafkit::to_string(static_cast<vafkit::ErrorCode>(status));
}

void vafkit_string_free(char* s) { delete[] s; }

vafkit_status vafkit_parse(const char* text, vafkit_framework** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new vafkit_framework{vafkit::parse_vaf(text)};
  });
}

vafkit_status vafkit_load(const char* path, vafkit_framework** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new vafkit_framework{vafkit::parse_vaf(vafkit::read_file(path))};
  });
}

void vafkit_framework_free(vafkit_framework* f) { delete f; }

vafkit_status vafkit_emit(const vafkit_framework* f, char** out) {
  return guarded([&] {
    require(f, "framework");
    require(out, "out");
    *out = duplicate(vafkit::emit_vaf(f->vaf));
  });
}

size_t vafkit_argument_count(const vafkit_framework* f) { return f ? f->vaf.size() : 0; }
size_t vafkit_value_count(const vafkit_framework* f) { return f ? f->vaf.value_count() : 0; }

vafkit_status vafkit_metrics_report(const vafkit_framework* f, char** out) {
  return guarded([&] {
    require(f, "framework");
    require(out, "out");
    *out = duplicate(metrics_report(f->vaf));
  });
}

vafkit_status vafkit_parse_problem(const char* text, vafkit_problem* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto p = vafkit::parse_problem(text);
    if (!p) throw vafkit::Error(vafkit::ErrorCode::InvalidInput, std::string("unknown problem '") + text + "'");
    *out = static_cast<vafkit_problem>(*p);
  });
}

vafkit_status vafkit_parse_solver(const char* text, vafkit_solver* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto s = vafkit::parse_solver(text);
    if (!s) throw vafkit::Error(vafkit::ErrorCode::InvalidInput, std::string("unknown solver '") + text + "'");
    *out = static_cast<vafkit_solver>(*s);
  });
}

vafkit_status vafkit_solve(const vafkit_framework* f, vafkit_problem problem, const char* argument,
                           vafkit_solver solver, vafkit_result** out) {
  return guarded([&] {
    require(f, "framework");
    require(out, "out");
    if (problem != VAFKIT_SUBJECTIVE && problem != VAFKIT_OBJECTIVE)
      throw vafkit::Error(vafkit::ErrorCode::InvalidInput, "unknown problem");
    if (solver < VAFKIT_SOLVER_AUTO || solver > VAFKIT_SOLVER_BIPARTITE)
      throw vafkit::Error(vafkit::ErrorCode::InvalidInput, "unknown solver");
    auto x = lookup(f->vaf, argument);
    auto report = vafkit::solve(f->vaf, static_cast<vafkit::Problem>(problem), x,
                                static_cast<vafkit::SolverChoice>(solver));
    auto r = std::make_unique<vafkit_result>();
    r->accepted = report.accepted;
    r->solver = vafkit::to_string(report.solver);
    if (report.audience) r->audience = report.audience->to_string(f->vaf);
    if (!report.path.empty()) r->path = join(report.path, ",");
    r->failing_attacker = report.failing_attacker;
    r->fallback = report.fallback;
    *out = r.release();
  });
}

int vafkit_result_accepted(const vafkit_result* r) { return r && r->accepted ? 1 : 0; }
const char* vafkit_result_solver(const vafkit_result* r) { return r ? r->solver.c_str() : nullptr; }
const char* vafkit_result_audience(const vafkit_result* r) {
  return r && r->audience ? r->audience->c_str() : nullptr;
}
const char* vafkit_result_path(const vafkit_result* r) { return r && r->path ? r->path->c_str() : nullptr; }
const char* vafkit_result_failing_attacker(const vafkit_result* r) {
  return r && r->failing_attacker ? r->failing_attacker->c_str() : nullptr;
}
int vafkit_result_fallback(const vafkit_result* r) { return r && r->fallback ? 1 : 0; }
void vafkit_result_free(vafkit_result* r) { delete r; }

vafkit_status vafkit_export_dot(const vafkit_framework* f, const char* graph, const char* query, char** out) {
  return guarded([&] {
    require(f, "framework");
    require(graph, "graph");
    require(out, "out");
    *out = duplicate(export_dot(f->vaf, graph, query));
  });
}

vafkit_status vafkit_generate_sat(const char* dimacs, const char* variant, vafkit_framework** out,
                                  char** query_out) {
  return guarded([&] {
    require(dimacs, "dimacs");
    require(variant, "variant");
    require(out, "out");
    auto phi = vafkit::parse_dimacs(dimacs);
    std::string v = variant;
    vafkit::Reduction r;
    if (v == "subjective") r = vafkit::reduce_subjective(phi);
    else if (v == "objective") r = vafkit::reduce_objective(phi);
    else if (v == "bipartite-vg") r = vafkit::reduce_bipartite_valuegraph(phi, false);
    else if (v == "bipartite-vg-objective") r = vafkit::reduce_bipartite_valuegraph(phi, true);
    else throw vafkit::Error(vafkit::ErrorCode::InvalidInput, "unknown variant '" + v + "'");
    auto query = r.vaf.name(r.query);
    *out = new vafkit_framework{std::move(r.vaf)};
    if (query_out) *query_out = duplicate(query);
  });
}

vafkit_status vafkit_generate_random(size_t arguments, size_t values, size_t width, uint64_t seed,
                                     vafkit_framework** out) {
  return guarded([&] {
    require(out, "out");
    vafkit::RandomParams p;
    p.arguments = arguments;
    p.values = values;
    p.width = width;
    p.seed = seed;
    *out = new vafkit_framework{vafkit::random_vaf(p)};
  });
}

}  // extern "C"
