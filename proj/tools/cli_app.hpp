#pragma once

// The lpa command-line front end. run() takes the arguments after the program
// name and writes the report to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 2 bad input or precondition violation, 1 anything
// else.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpa/analysis.hpp"
#include "lpa/expression.hpp"
#include "lpa/graph_dsl.hpp"
#include "lpa/quotients.hpp"
#include "lpa/semisimple.hpp"
#include "lpa/toeplitz.hpp"
#include "report.hpp"

namespace lpa::cli {

using report::Json;

struct Options {
  std::string command;
  std::string graph_file;
  std::vector<std::string> exprs;
  std::string field = "q";
  bool pretty = false;
  std::size_t degree = 4;
  std::size_t window = 12;
  std::size_t truncate = 4;
  std::optional<std::string> only;
  std::optional<std::vector<std::string>> set;
};

namespace detail {

inline std::string plain(Json const& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline void print_pretty(std::ostream& out, Json const& doc) {
  out << "command: " << plain(doc["command"]) << "\n";
  out << "graph: " << plain(doc["graph"]) << "\n";
  for (auto const& [k, v] : doc["result"].items()) out << k << ": " << plain(v) << "\n";
}

inline Json error_json(std::string const& command, std::string const& kind, std::string const& message) {
  return {{"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
}

inline VertexSet required_set(Graph const& g, Options const& o) {
  if (!o.set) throw PreconditionError("this command needs --set");
  return VertexSet::from_names(g, *o.set);
}

inline std::size_t arity(std::string const& command) {
  static std::map<std::string, std::size_t> const counts{
      {"analyze", 0},       {"nf", 1},           {"mul", 2},      {"eq", 2},        {"decompose", 0},
      {"group-inverse", 1}, {"socle-member", 1}, {"quotient", 0}, {"restrict", 0},  {"denominator", 2},
      {"toeplitz-check", 0}, {"closure", 0}};
  return counts.at(command);
}

inline Json execute(Options const& o, GraphPtr const& g) {
  Field field = Field::parse(o.field);
  auto expr = [&](std::size_t i) { return parse_element(g, o.exprs.at(i), field); };
  std::string const& c = o.command;

  if (c == "analyze") return report::analysis_json(*g);

  if (c == "nf") {
    Element x = expr(0);
    return {{"expression", o.exprs[0]}, {"normal_form", x.to_string()}};
  }
  if (c == "mul") {
    Element x = expr(0), y = expr(1);
    return {{"lhs", x.to_string()}, {"rhs", y.to_string()}, {"product", (x * y).to_string()}};
  }
  if (c == "eq") {
    Element x = expr(0), y = expr(1);
    return {{"lhs", x.to_string()}, {"rhs", y.to_string()}, {"equal", x == y}};
  }

  if (c == "decompose") {
    if (is_acyclic(*g)) {
      Json r = report::decomposition_json(matrix_decomposition(g));
      if (is_acyclic_no_bifurcation(*g)) {
        Json basis = Json::array();
        for (auto const& m : reduced_monomial_basis(g)) {
          basis.push_back({{"component", m.component}, {"row", m.row}, {"col", m.col},
                           {"monomial", monomial_to_string(*g, m.monomial)}});
        }
        r["reduced_basis"] = basis;
      }
      return r;
    }
    // With cycles, decompose the restriction to the socle's vertex set.
    VertexSet h = socle_vertices(*g);
    if (h.empty()) throw PreconditionError("graph has a cycle and no line points; nothing to decompose");
    auto rg = restriction_graph(g, h, o.truncate);
    Json r = report::decomposition_json(matrix_decomposition(rg));
    r["restricted_to"] = report::names(*g, h);
    r["bound"] = o.truncate;
    r["complete"] = rg.complete;
    return r;
  }

  if (c == "group-inverse") {
    Element x = expr(0);
    auto d = matrix_decomposition(g);
    BlockMatrix m = to_matrix(x, d);
    BlockMatrix sharp = group_inverse(m);
    return {{"element", x.to_string()},
            {"group_inverse", from_matrix(sharp, d, field).to_string()},
            {"matrix", report::block_matrix_json(m)},
            {"group_inverse_matrix", report::block_matrix_json(sharp)}};
  }

  if (c == "socle-member") {
    Element x = expr(0);
    VertexSet h = socle_vertices(*g);
    return {{"element", x.to_string()}, {"member", in_graded_ideal(x, h)}, {"socle_vertices", report::names(*g, h)}};
  }

  if (c == "quotient") {
    VertexSet h = required_set(*g, o);
    Graph t = quotient_graph(*g, h);
    Json images = Json::object();
    for (VertexId v : g->vertices()) images[g->vertex_name(v)] = h.contains(v) ? Json(nullptr) : Json(g->vertex_name(v));
    for (EdgeId e : g->edges()) images[g->edge_name(e)] = h.contains(g->range(e)) ? Json(nullptr) : Json(g->edge_name(e));
    return {{"h", report::names(*g, h)},
            {"saturated", is_saturated(*g, h)},
            {"graph", report::graph_json(t)},
            {"images", images}};
  }

  if (c == "restrict") {
    VertexSet h = required_set(*g, o);
    return report::restriction_json(restriction_graph(g, h, o.truncate));
  }

  if (c == "denominator") {
    Element p = expr(0), q = expr(1);
    Denominator d = right_denominator(p, q);
    return {{"p", p.to_string()},
            {"q", q.to_string()},
            {"r", d.r.to_string()},
            {"iterations", d.iterations},
            {"p_r", (p * d.r).to_string()},
            {"q_r", (q * d.r).to_string()}};
  }

  if (c == "toeplitz-check") {
    auto d = recognize_toeplitz(*g);
    if (!d) return {{"recognized", false}, {"decomposition", nullptr}, {"exact_sequence", nullptr}, {"sandwich", nullptr}};
    Json sandwich = {{"applicable", false}};
    if (is_canonical_toeplitz(*g, *d)) {
      sandwich = report::sandwich_json(sandwich_report(g, o.degree, o.window));
      sandwich["applicable"] = true;
    }
    return {{"recognized", true},
            {"decomposition", report::toeplitz_decomposition_json(*g, *d)},
            {"exact_sequence", report::exact_sequence_json(exact_sequence_report(g, o.degree))},
            {"sandwich", sandwich}};
  }

  if (c == "closure") {
    VertexSet x = required_set(*g, o);
    return {{"input", report::names(*g, x)},
            {"closure", report::names(*g, hereditary_saturated_closure(*g, x))},
            {"hereditary", is_hereditary(*g, x)},
            {"saturated", is_saturated(*g, x)}};
  }

  throw PreconditionError("unknown command '" + c + "'");
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Leavitt path algebra toolkit", "lpa"};
  app.require_subcommand(1);
  app.add_option("--field", o.field, "coefficient field: q or fp:<p>");
  app.add_flag("--pretty", o.pretty, "plain text instead of JSON");
  app.add_option("--degree", o.degree, "degree bound");
  app.add_option("--window", o.window, "matrix window size");
  app.add_option("--truncate", o.truncate, "entering-path length bound");
  app.add_option("--only", o.only, "print a single result key");
  app.add_option("--set", o.set, "comma-separated vertex names")->delimiter(',');

  struct Spec {
    char const* name;
    char const* help;
    std::vector<char const*> positionals;
  };
  std::vector<Spec> const specs{
      {"analyze", "structural report", {}},
      {"nf", "normal form of an expression", {"expr"}},
      {"mul", "product of two expressions", {"lhs", "rhs"}},
      {"eq", "equality in the algebra", {"lhs", "rhs"}},
      {"decompose", "matrix decomposition", {}},
      {"group-inverse", "group inverse over a finite acyclic graph", {"expr"}},
      {"socle-member", "membership in the socle", {"expr"}},
      {"quotient", "quotient graph by --set", {}},
      {"restrict", "restriction graph over --set", {}},
      {"denominator", "right denominator r for p, q", {"p", "q"}},
      {"toeplitz-check", "Toeplitz-type recognition and checks", {}},
      {"closure", "hereditary saturated closure of --set", {}},
  };
  std::vector<std::string> positional(3);
  for (auto const& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    sub->add_option("graph", o.graph_file, "graph file")->required();
    for (std::size_t i = 0; i < s.positionals.size(); ++i) sub->add_option(s.positionals[i], positional[i])->required();
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::ParseError const& e) {
    err << detail::error_json("", "usage", e.what()).dump() << "\n";
    return 2;
  }
  o.command = app.get_subcommands().front()->get_name();
  o.exprs.assign(positional.begin(), positional.begin() + static_cast<std::ptrdiff_t>(detail::arity(o.command)));

  std::string graph_name;
  try {
    GraphPtr g = share(load_graph(o.graph_file));
    graph_name = g->name();
    Json result = detail::execute(o, g);
    Json doc = {{"command", o.command}, {"graph", graph_name}, {"version", report::version}, {"result", result}};
    if (o.only) {
      if (!result.contains(*o.only)) throw PreconditionError("result has no key '" + *o.only + "'");
      out << (o.pretty ? detail::plain(result[*o.only]) : result[*o.only].dump()) << "\n";
    } else if (o.pretty) {
      detail::print_pretty(out, doc);
    } else {
      out << doc.dump(2) << "\n";
    }
    return 0;
  } catch (ParseError const& e) {
    Json j = detail::error_json(o.command, "parse", e.what());
    j["error"]["line"] = e.line();
    j["error"]["column"] = e.column();
    err << j.dump() << "\n";
    return 2;
  } catch (IoError const& e) {
    err << detail::error_json(o.command, "io", e.what()).dump() << "\n";
    return 2;
  } catch (GraphError const& e) {
    err << detail::error_json(o.command, "graph", e.what()).dump() << "\n";
    return 2;
  } catch (NotGroupInvertible const& e) {
    err << detail::error_json(o.command, "not_group_invertible", e.what()).dump() << "\n";
    return 2;
  } catch (NotFoundWithinBounds const& e) {
    err << detail::error_json(o.command, "not_found", e.what()).dump() << "\n";
    return 2;
  } catch (PreconditionError const& e) {
    err << detail::error_json(o.command, "precondition", e.what()).dump() << "\n";
    return 2;
  } catch (std::exception const& e) {
    err << detail::error_json(o.command, "internal", e.what()).dump() << "\n";
    return 1;
  }
}

}  // namespace lpa::cli
