#pragma once

// Purely graph-theoretic analyzers: trees, hereditary and saturated sets,
// line points, cycles, strongly connected and connected components.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

using GraphPtr = std::shared_ptr<Graph const>;

inline GraphPtr share(Graph g) { return std::make_shared<Graph const>(std::move(g)); }

// T(X): every vertex reachable from X by a directed path, X included.
inline VertexSet tree(Graph const& g, VertexSet const& x) {
  require_same_universe(g, x);
  VertexSet seen = x;
  std::vector<VertexId> stack = x.members();
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.range(e);
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

inline VertexSet tree(Graph const& g, VertexId v) {
  if (index(v) >= g.vertex_count()) throw GraphError("unknown vertex index " + std::to_string(index(v)));
  return tree(g, VertexSet(g.vertex_count(), {v}));
}

inline bool connects_to(Graph const& g, VertexId u, VertexId w) {
  if (index(w) >= g.vertex_count()) throw GraphError("unknown vertex index " + std::to_string(index(w)));
  return tree(g, u).contains(w);
}

inline VertexSet bifurcations(Graph const& g) {
  VertexSet result(g.vertex_count());
  for (VertexId v : g.vertices()) {
    if (g.out_degree(v) >= 2) result.insert(v);
  }
  return result;
}

// Tarjan's algorithm, iterative. Component ids are assigned in order of
// completion; only equality of ids is meaningful.
inline std::vector<std::size_t> strongly_connected_components(Graph const& g) {
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::size_t const n = g.vertex_count();
  std::vector<std::size_t> order(n, unvisited), low(n, 0), component(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  std::size_t components = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t next_edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != unvisited) continue;
    std::vector<Frame> frames{{root, 0}};
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& frame = frames.back();
      auto out = g.out_edges(vertex_id(frame.vertex));
      if (frame.next_edge < out.size()) {
        std::size_t w = index(g.range(out[frame.next_edge++]));
        if (order[w] == unvisited) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[frame.vertex] = std::min(low[frame.vertex], order[w]);
        }
        continue;
      }
      std::size_t v = frame.vertex;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().vertex] = std::min(low[frames.back().vertex], low[v]);
      if (low[v] == order[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = components;
        } while (w != v);
        ++components;
      }
    }
  }
  return component;
}

// Vertices lying on some cycle: members of a nontrivial strongly connected
// component, or carriers of a loop.
inline VertexSet vertices_on_cycles(Graph const& g) {
  auto scc = strongly_connected_components(g);
  std::vector<std::size_t> sizes(g.vertex_count(), 0);
  for (std::size_t c : scc) ++sizes[c];
  VertexSet result(g.vertex_count());
  for (VertexId v : g.vertices()) {
    if (sizes[scc[index(v)]] > 1) result.insert(v);
  }
  for (EdgeId e : g.edges()) {
    if (g.source(e) == g.range(e)) result.insert(g.source(e));
  }
  return result;
}

inline bool is_acyclic(Graph const& g) { return vertices_on_cycles(g).empty(); }

// P_l(E): vertices u such that no w in T(u) is a bifurcation or lies on a cycle.
inline VertexSet line_points(Graph const& g) {
  VertexSet bad = bifurcations(g);
  for (VertexId v : vertices_on_cycles(g).members()) bad.insert(v);
  // Anything that reaches a bad vertex is not a line point.
  VertexSet tainted = bad;
  std::vector<VertexId> stack = bad.members();
  while (!stack.empty()) {
    VertexId w = stack.back();
    stack.pop_back();
    for (EdgeId e : g.in_edges(w)) {
      VertexId u = g.source(e);
      if (!tainted.contains(u)) {
        tainted.insert(u);
        stack.push_back(u);
      }
    }
  }
  return tainted.complement();
}

// All cycles, each reported once in its canonical rotation: the rotation
// based at the cycle's least vertex in declaration order.
inline std::vector<Cycle> cycles(Graph const& g) {
  std::vector<Cycle> result;
  std::size_t const n = g.vertex_count();
  for (std::size_t base = 0; base < n; ++base) {
    std::vector<EdgeId> trail;
    std::vector<bool> used(n, false);
    used[base] = true;
    std::function<void(std::size_t)> extend = [&](std::size_t at) {
      for (EdgeId e : g.out_edges(vertex_id(at))) {
        std::size_t next = index(g.range(e));
        if (next < base) continue;
        trail.push_back(e);
        if (next == base) {
          result.push_back(Cycle::of(g, trail));
        } else if (!used[next]) {
          used[next] = true;
          extend(next);
          used[next] = false;
        }
        trail.pop_back();
      }
    };
    extend(base);
  }
  return result;
}

// True iff some edge e leaves a vertex of the cycle with e not on the cycle.
inline bool cycle_has_exit(Graph const& g, Cycle const& c) {
  for (EdgeId ci : c.edges()) {
    for (EdgeId e : g.out_edges(g.source(ci))) {
      if (e != ci) return true;
    }
  }
  return false;
}

inline bool is_hereditary(Graph const& g, VertexSet const& x) { return tree(g, x) == x; }

inline bool is_saturated(Graph const& g, VertexSet const& x) {
  require_same_universe(g, x);
  for (VertexId v : g.vertices()) {
    if (x.contains(v) || g.is_sink(v)) continue;
    bool all_inside = std::all_of(g.out_edges(v).begin(), g.out_edges(v).end(),
                                  [&](EdgeId e) { return x.contains(g.range(e)); });
    if (all_inside) return false;
  }
  return true;
}

// Least hereditary saturated superset: the union of Lambda_n(X), where
// Lambda_0 = T(X) and each step adds the emitting vertices whose edges all
// land in the previous stage.
inline VertexSet hereditary_saturated_closure(Graph const& g, VertexSet const& x) {
  VertexSet current = tree(g, x);
  for (;;) {
    VertexSet next = current;
    for (VertexId v : g.vertices()) {
      if (current.contains(v) || g.is_sink(v)) continue;
      bool all_inside = std::all_of(g.out_edges(v).begin(), g.out_edges(v).end(),
                                    [&](EdgeId e) { return current.contains(g.range(e)); });
      if (all_inside) next.insert(v);
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

// KE is semiprime iff every path has a return path. Equivalently every edge
// has both endpoints in one strongly connected component.
inline bool is_path_algebra_semiprime(Graph const& g) {
  auto scc = strongly_connected_components(g);
  auto edges = g.edges();
  return std::all_of(edges.begin(), edges.end(), [&](EdgeId e) {
    return scc[index(g.source(e))] == scc[index(g.range(e))];
  });
}

// Soc(L_K(E)) is essential iff every vertex connects to a line point.
inline bool socle_is_essential(Graph const& g) {
  VertexSet lp = line_points(g);
  VertexSet reaches(g.vertex_count());
  std::vector<VertexId> stack = lp.members();
  for (VertexId v : stack) reaches.insert(v);
  while (!stack.empty()) {
    VertexId w = stack.back();
    stack.pop_back();
    for (EdgeId e : g.in_edges(w)) {
      VertexId u = g.source(e);
      if (!reaches.contains(u)) {
        reaches.insert(u);
        stack.push_back(u);
      }
    }
  }
  return reaches == VertexSet::all(g);
}

inline bool is_acyclic_no_bifurcation(Graph const& g) { return is_acyclic(g) && bifurcations(g).empty(); }

// A subgraph carrying its own Graph plus the ids of its vertices and edges
// in the parent graph.
struct Subgraph {
  GraphPtr graph;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

inline Subgraph induced_subgraph(Graph const& g, VertexSet const& keep, std::string name) {
  require_same_universe(g, keep);
  Subgraph part;
  GraphBuilder builder(std::move(name));
  for (VertexId v : keep.members()) {
    builder.vertex(g.vertex_name(v));
    part.vertices.push_back(v);
  }
  for (EdgeId e : g.edges()) {
    if (keep.contains(g.source(e)) && keep.contains(g.range(e))) {
      builder.edge(g.edge_name(e), g.vertex_name(g.source(e)), g.vertex_name(g.range(e)));
      part.edges.push_back(e);
    }
  }
  part.graph = share(builder.build());
  return part;
}

// Partition by undirected connectivity, ordered by each part's first vertex
// in declaration order.
inline std::vector<Subgraph> connected_components(Graph const& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (EdgeId e : g.edges()) {
    std::size_t a = find(index(g.source(e)));
    std::size_t b = find(index(g.range(e)));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Subgraph> parts;
  std::vector<std::size_t> root_to_part(g.vertex_count(), static_cast<std::size_t>(-1));
  std::vector<VertexSet> members;
  for (VertexId v : g.vertices()) {
    std::size_t root = find(index(v));
    if (root_to_part[root] == static_cast<std::size_t>(-1)) {
      root_to_part[root] = members.size();
      members.emplace_back(g.vertex_count());
    }
    members[root_to_part[root]].insert(v);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::string name = members.size() == 1 ? g.name() : g.name() + "_c" + std::to_string(i + 1);
    parts.push_back(induced_subgraph(g, members[i], name));
  }
  return parts;
}

}  // namespace lpa
