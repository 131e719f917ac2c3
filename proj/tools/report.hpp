#pragma once

// JSON views of the library's results. Keys are emitted in insertion order
// and lists follow declaration order, so identical input gives identical
// bytes.

#include <string>
#include <vector>

#include "json.hpp"
#include "lpa/analysis.hpp"
#include "lpa/element.hpp"
#include "lpa/matrix.hpp"
#include "lpa/quotients.hpp"
#include "lpa/semisimple.hpp"
#include "lpa/toeplitz.hpp"

namespace lpa::report {

using Json = nlohmann::ordered_json;

inline constexpr char const* version = "0.1.0";

inline std::string path_string(Graph const& g, Path const& p) {
  if (p.is_trivial()) return g.vertex_name(p.source());
  std::string out;
  for (EdgeId e : p.edges()) {
    if (!out.empty()) out += '*';
    out += g.edge_name(e);
  }
  return out;
}

inline Json names(Graph const& g, VertexSet const& s) { return s.names(g); }

inline Json graph_json(Graph const& g) {
  Json vertices = Json::array();
  for (VertexId v : g.vertices()) vertices.push_back(g.vertex_name(v));
  Json edges = Json::array();
  for (EdgeId e : g.edges()) {
    edges.push_back({{"name", g.edge_name(e)}, {"source", g.vertex_name(g.source(e))}, {"range", g.vertex_name(g.range(e))}});
  }
  return {{"name", g.name()}, {"vertices", vertices}, {"edges", edges}};
}

inline Json analysis_json(Graph const& g) {
  Json cyc = Json::array();
  for (Cycle const& c : cycles(g)) {
    Json edges = Json::array();
    for (EdgeId e : c.edges()) edges.push_back(g.edge_name(e));
    cyc.push_back({{"base", g.vertex_name(c.base())}, {"edges", edges}, {"has_exit", cycle_has_exit(g, c)}});
  }
  Json comps = Json::array();
  for (Subgraph const& s : connected_components(g)) {
    Json members = Json::array();
    for (VertexId v : s.vertices) members.push_back(g.vertex_name(v));
    comps.push_back(members);
  }
  return {{"semiprime_path_algebra", is_path_algebra_semiprime(g)},
          {"line_points", names(g, line_points(g))},
          {"socle_essential", socle_is_essential(g)},
          {"cycles", cyc},
          {"bifurcations", names(g, bifurcations(g))},
          {"components", comps}};
}

inline Json matrix_json(Matrix const& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

inline Json block_matrix_json(BlockMatrix const& m) {
  Json blocks = Json::array();
  for (Matrix const& b : m.blocks()) blocks.push_back(matrix_json(b));
  return blocks;
}

inline Json decomposition_json(MatrixDecomposition const& d) {
  Graph const& g = *d.graph_ptr();
  Json comps = Json::array();
  std::size_t dim = 0;
  for (auto const& c : d.components()) {
    Json index = Json::array();
    for (Path const& p : c.index) index.push_back(path_string(g, p));
    comps.push_back({{"sink", g.vertex_name(c.sink)}, {"size", c.index.size()}, {"truncated", c.truncated}, {"index", index}});
    dim += c.index.size() * c.index.size();
  }
  return {{"sizes", d.sizes()}, {"basis_count", dim}, {"components", comps}};
}

inline Json restriction_json(RestrictionGraph const& rg) {
  Json entering = Json::array();
  for (Path const& p : rg.entering_paths) entering.push_back(path_string(*rg.source, p));
  return {{"h", names(*rg.source, rg.h)},
          {"bound", rg.bound},
          {"complete", rg.complete},
          {"entering_paths", entering},
          {"graph", graph_json(*rg.graph)}};
}

inline Json toeplitz_decomposition_json(Graph const& g, ToeplitzDecomposition const& d) {
  Json connectors = Json::array();
  for (EdgeId e : d.connectors) connectors.push_back(g.edge_name(e));
  return {{"loop_vertex", g.vertex_name(d.loop_vertex)},
          {"loop", g.edge_name(d.loop)},
          {"connectors", connectors},
          {"f", graph_json(*d.f.graph)},
          {"canonical", is_canonical_toeplitz(g, d)}};
}

inline Json exact_sequence_json(ExactSequenceReport const& r) {
  Json pre = Json::object();
  for (auto const& [k, s] : r.preimages) pre[std::to_string(k)] = s;
  return {{"pass", r.passed()},
          {"degree", r.degree},
          {"monomials", r.monomials},
          {"socle_monomials", r.socle_monomials},
          {"preimages", pre},
          {"missing_exponents", r.missing_exponents},
          {"counterexamples", r.mismatches}};
}

inline Json sandwich_json(SandwichReport const& r) {
  return {{"pass", r.passed()},
          {"degree", r.degree},
          {"window", r.window},
          {"monomials", r.monomials},
          {"socle_monomials", r.socle_monomials},
          {"matrix_units", r.matrix_units},
          {"generator_pairs", r.generator_pairs},
          {"counterexamples",
           {{"socle_not_finitely_supported", r.socle_not_finite},
            {"not_row_col_finite", r.not_row_col_finite},
            {"not_banded", r.banded_failures},
            {"matrix_units", r.unit_failures},
            {"multiplicativity", r.multiplicativity_failures}}}};
}

}  // namespace lpa::report
