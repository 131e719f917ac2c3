#pragma once

// Small named graphs used throughout the tests and the corpus.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "lpa/analysis.hpp"
#include "lpa/graph.hpp"
#include "lpa/quotients.hpp"

namespace lpa {

// u --f--> w
inline Graph a2_graph() { return GraphBuilder("a2").vertex("u").vertex("w").edge("f", "u", "w").build(); }

inline Graph point_graph() { return GraphBuilder("p1").vertex("v").build(); }

inline Graph single_loop_graph() { return GraphBuilder("r1").vertex("v").edge("e", "v", "v").build(); }

// v1 -> v2 -> ... -> vn with edges a, b, c, ... (a1, a2, ... past 26).
inline Graph oriented_line(std::size_t n) {
  if (n == 0) throw PreconditionError("oriented line needs at least one vertex");
  GraphBuilder b("line" + std::to_string(n));
  for (std::size_t i = 1; i <= n; ++i) b.vertex("v" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) {
    std::string name = n <= 27 ? std::string(1, static_cast<char>('a' + i - 1)) : "a" + std::to_string(i);
    b.edge(name, "v" + std::to_string(i), "v" + std::to_string(i + 1));
  }
  return b.build();
}

// One vertex with n loops e1..en.
inline Graph rose_graph(std::size_t n) {
  GraphBuilder b("rose" + std::to_string(n));
  b.vertex("v");
  for (std::size_t i = 1; i <= n; ++i) b.edge("e" + std::to_string(i), "v", "v");
  return b.build();
}

// Vertices and edges of `b` are renamed with `suffix` if they clash with `a`.
inline Graph disjoint_union(Graph const& a, Graph const& b, std::string const& name) {
  GraphBuilder out(name);
  std::vector<std::string> taken;
  auto used = [&](std::string const& s) {
    return a.find_vertex(s) || a.find_edge(s) || std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  for (VertexId v : a.vertices()) out.vertex(a.vertex_name(v));
  for (EdgeId e : a.edges()) out.edge(a.edge_name(e), a.vertex_name(a.source(e)), a.vertex_name(a.range(e)));
  auto fresh = [&](std::string s) {
    while (used(s)) s += "_2";
    taken.push_back(s);
    return s;
  };
  std::vector<std::string> vnames;
  for (VertexId v : b.vertices()) vnames.push_back(fresh(b.vertex_name(v)));
  for (auto const& s : vnames) out.vertex(s);
  for (EdgeId e : b.edges()) {
    out.edge(fresh(b.edge_name(e)), vnames[index(b.source(e))], vnames[index(b.range(e))]);
  }
  return out.build();
}

// Finite stand-in for the infinite ladder u1 -> u2 -> ... with u_i -> v_i:
// edges e_i: u_i -> v_i, f_i: u_i -> u_{i+1} for i < k, and a loop g at u_k
// playing the part of the infinite tail. The loop keeps u_k off the line
// points, so the line points are exactly the v_i, every vertex connects to
// one, and the hereditary saturated closure of {v_i} adds nothing.
inline Graph ladder_graph(std::size_t k) {
  if (k == 0) throw PreconditionError("ladder needs at least one rung");
  GraphBuilder b("ladder" + std::to_string(k));
  for (std::size_t i = 1; i <= k; ++i) b.vertex("u" + std::to_string(i)).vertex("v" + std::to_string(i));
  for (std::size_t i = 1; i <= k; ++i) {
    auto s = std::to_string(i);
    b.edge("e" + s, "u" + s, "v" + s);
    if (i < k) b.edge("f" + s, "u" + s, "u" + std::to_string(i + 1));
  }
  b.edge("g", "u" + std::to_string(k), "u" + std::to_string(k));
  return b.build();
}

inline VertexSet ladder_sinks(Graph const& ladder) {
  VertexSet h(ladder.vertex_count());
  for (VertexId v : ladder.vertices()) {
    if (ladder.is_sink(v)) h.insert(v);
  }
  return h;
}

// The restriction graph of the ladder over its sinks, enumerated far enough
// that the first k sink columns are complete: built on k + 1 rungs with
// entering paths of length <= k. Column i then receives the i paths
// f_j ... f_{i-1} e_i (j <= i), so its block has size i + 1.
inline RestrictionGraph ladder_restriction(std::size_t k) {
  auto g = share(ladder_graph(k + 1));
  return restriction_graph(g, ladder_sinks(*g), k);
}

}  // namespace lpa
