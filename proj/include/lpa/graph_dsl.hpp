#pragma once

// Line-oriented graph description format:
//
//   # comment
//   graph <name>
//   vertex <id>
//   edge <id> <source> <range>
//
// Identifiers match [A-Za-z_][A-Za-z0-9_]*. Endpoints must be declared before
// the edge that uses them. Declaration order is preserved.

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/error.hpp"
#include "lpa/graph.hpp"

namespace lpa {

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_')) return false;
  }
  return true;
}

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return tokens;
}

}  // namespace detail

inline Graph parse_graph(std::string_view text) {
  std::optional<GraphBuilder> builder;
  std::set<std::string> edge_names;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;

    auto tokens = detail::split_line(line);
    if (tokens.empty()) continue;

    auto expect_ident = [&](detail::Token const& t) {
      if (!is_identifier(t.text)) throw ParseError("invalid identifier '" + t.text + "'", line_no, t.column);
    };
    auto expect_arity = [&](std::size_t n) {
      if (tokens.size() != n) {
        auto col = tokens.size() > n ? tokens[n].column : line.size() + 1;
        throw ParseError("'" + tokens[0].text + "' takes " + std::to_string(n - 1) + " argument(s)", line_no, col);
      }
    };

    auto const& keyword = tokens[0];
    if (keyword.text == "graph") {
      if (builder) throw ParseError("duplicate graph header", line_no, keyword.column);
      expect_arity(2);
      expect_ident(tokens[1]);
      builder.emplace(tokens[1].text);
    } else if (keyword.text == "vertex" || keyword.text == "edge") {
      if (!builder) throw ParseError("expected 'graph <name>' header first", line_no, keyword.column);
      if (keyword.text == "vertex") {
        expect_arity(2);
        expect_ident(tokens[1]);
        if (builder->has_vertex(tokens[1].text) || edge_names.contains(tokens[1].text)) {
          throw ParseError("duplicate identifier '" + tokens[1].text + "'", line_no, tokens[1].column);
        }
        builder->vertex(tokens[1].text);
      } else {
        expect_arity(4);
        for (std::size_t i = 1; i < 4; ++i) expect_ident(tokens[i]);
        if (builder->has_vertex(tokens[1].text) || !edge_names.insert(tokens[1].text).second) {
          throw ParseError("duplicate identifier '" + tokens[1].text + "'", line_no, tokens[1].column);
        }
        for (std::size_t i = 2; i < 4; ++i) {
          if (!builder->has_vertex(tokens[i].text)) {
            throw ParseError("undeclared endpoint '" + tokens[i].text + "'", line_no, tokens[i].column);
          }
        }
        builder->edge(tokens[1].text, tokens[2].text, tokens[3].text);
      }
    } else {
      throw ParseError("unknown keyword '" + keyword.text + "'", line_no, keyword.column);
    }
  }
  if (!builder) throw ParseError("missing 'graph <name>' header", line_no, 1);
  return builder->build();
}

inline Graph load_graph(std::string const& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open graph file '" + file + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

inline std::string to_dsl(Graph const& g) {
  std::string out = "graph " + g.name() + "\n";
  for (VertexId v : g.vertices()) out += "vertex " + g.vertex_name(v) + "\n";
  for (EdgeId e : g.edges()) {
    out += "edge " + g.edge_name(e) + " " + g.vertex_name(g.source(e)) + " " + g.vertex_name(g.range(e)) + "\n";
  }
  return out;
}

}  // namespace lpa
