#pragma once

// Graded-ideal machinery for a hereditary saturated H: the quotient graph
// E/H with the quotient morphism, membership in I(H) and in the socle, the
// restriction graph _H E with its embedding, and right denominators.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpa/analysis.hpp"
#include "lpa/element.hpp"

namespace lpa {

inline void require_hereditary(Graph const& g, VertexSet const& h) {
  require_same_universe(g, h);
  if (!is_hereditary(g, h)) throw PreconditionError("vertex set is not hereditary");
}

inline void require_hereditary_saturated(Graph const& g, VertexSet const& h) {
  require_hereditary(g, h);
  if (!is_saturated(g, h)) throw PreconditionError("vertex set is not saturated");
}

// E/H = (E0 \ H, {e : r(e) not in H}, r, s). A graph-level construction, so
// H only needs to be hereditary; the algebra map below also needs saturation.
inline Graph quotient_graph(Graph const& g, VertexSet const& h) {
  require_hereditary(g, h);
  GraphBuilder builder(g.name() + "_quotient");
  for (VertexId v : g.vertices()) {
    if (!h.contains(v)) builder.vertex(g.vertex_name(v));
  }
  for (EdgeId e : g.edges()) {
    if (!h.contains(g.range(e))) builder.edge(g.edge_name(e), g.vertex_name(g.source(e)), g.vertex_name(g.range(e)));
  }
  return builder.build();
}

// The algebra morphism L_K(E) -> L_K(E/H) killing the vertices of H and the
// edges entering H. For H empty the target is the source graph itself.
class QuotientMorphism {
 public:
  QuotientMorphism(GraphPtr source, VertexSet h) : source_(std::move(source)), h_(std::move(h)) {
    require_hereditary_saturated(*source_, h_);
    target_ = h_.empty() ? source_ : share(quotient_graph(*source_, h_));
    vertex_map_.resize(source_->vertex_count());
    edge_map_.resize(source_->edge_count());
    for (VertexId v : source_->vertices()) {
      if (!h_.contains(v)) vertex_map_[index(v)] = target_->vertex(source_->vertex_name(v));
    }
    for (EdgeId e : source_->edges()) {
      if (!h_.contains(source_->range(e))) edge_map_[index(e)] = target_->edge(source_->edge_name(e));
    }
  }

  GraphPtr const& source() const noexcept { return source_; }
  GraphPtr const& target() const noexcept { return target_; }
  VertexSet const& kernel_vertices() const noexcept { return h_; }

  std::optional<VertexId> image(VertexId v) const { return vertex_map_.at(index(v)); }
  std::optional<EdgeId> image(EdgeId e) const { return edge_map_.at(index(e)); }

  // A monomial p q* survives iff r(p) does not lie in H: by hereditarity
  // every vertex of p and q then survives too.
  Element operator()(Element const& x) const {
    if (x.graph_ptr() != source_) throw PreconditionError("element is not over the morphism's source graph");
    if (h_.empty()) return x;
    Graph const& t = *target_;
    Terms raw;
    for (auto const& [m, c] : x.terms()) {
      if (h_.contains(m.real.range())) continue;
      detail::add_term(raw, Monomial::make(map_path(t, m.real), map_path(t, m.ghost)), c);
    }
    return Element::from_terms(target_, raw, x.field());
  }

 private:
  Path map_path(Graph const& t, Path const& p) const {
    if (p.is_trivial()) return Path::trivial(*image(p.source()));
    std::vector<EdgeId> edges;
    for (EdgeId e : p.edges()) edges.push_back(*image(e));
    return Path::of(t, std::move(edges));
  }

  GraphPtr source_;
  VertexSet h_;
  GraphPtr target_;
  std::vector<std::optional<VertexId>> vertex_map_;
  std::vector<std::optional<EdgeId>> edge_map_;
};

inline Element quotient_morphism(Element const& x, VertexSet const& h) { return QuotientMorphism(x.graph_ptr(), h)(x); }

// x lies in I(H) iff its image in L_K(E/H) vanishes.
inline bool in_graded_ideal(Element const& x, VertexSet const& h) { return quotient_morphism(x, h).is_zero(); }

// The socle is I(H) for H the hereditary saturated closure of the line points.
inline VertexSet socle_vertices(Graph const& g) { return hereditary_saturated_closure(g, line_points(g)); }

inline bool in_socle(Element const& x) { return in_graded_ideal(x, socle_vertices(x.graph())); }

// _H E: vertices H plus one vertex per path entering H (F_E(H)), edges those
// of E leaving H-vertices plus one edge from each entering path's vertex to
// its range. Entering paths are enumerated up to length `bound`.
struct RestrictionGraph {
  GraphPtr source;
  VertexSet h;
  GraphPtr graph;
  std::vector<Path> entering_paths;  // F_E(H) up to the bound, in Path order
  std::size_t bound = 0;
  bool complete = false;  // no entering path is longer than the bound

  static std::string path_name(Graph const& g, Path const& p) {
    std::string out;
    for (EdgeId e : p.edges()) {
      if (!out.empty()) out += '.';
      out += g.edge_name(e);
    }
    return out;
  }
  std::string vertex_name(Path const& p) const { return "path:" + path_name(*source, p); }
  std::string edge_name(Path const& p) const { return "bar:" + path_name(*source, p); }

  Element embed(Element const& y) const;
};

// Paths alpha with s(alpha) outside H, every intermediate range outside H and
// r(alpha) in H, of length exactly `length`.
inline std::vector<Path> entering_paths_of_length(Graph const& g, VertexSet const& h, std::size_t length) {
  std::vector<Path> result;
  if (length == 0) return result;
  std::vector<Path> frontier;
  for (EdgeId e : g.edges()) {
    if (!h.contains(g.source(e))) frontier.push_back(Path::edge(g, e));
  }
  for (std::size_t len = 1; len < length; ++len) {
    std::vector<Path> next;
    for (Path const& p : frontier) {
      if (h.contains(p.range())) continue;
      for (EdgeId e : g.out_edges(p.range())) next.push_back(p.appended(g, e));
    }
    frontier = std::move(next);
  }
  for (Path& p : frontier) {
    if (h.contains(p.range())) result.push_back(std::move(p));
  }
  return result;
}

// H hereditary suffices; I(H) equals the ideal of its saturated closure.
inline RestrictionGraph restriction_graph(GraphPtr g, VertexSet const& h, std::size_t bound) {
  require_hereditary(*g, h);
  if (h.empty()) throw PreconditionError("restriction graph needs a nonempty vertex set");
  RestrictionGraph rg;
  rg.source = g;
  rg.h = h;
  rg.bound = bound;
  for (std::size_t len = 1; len <= bound; ++len) {
    auto layer = entering_paths_of_length(*g, h, len);
    rg.entering_paths.insert(rg.entering_paths.end(), layer.begin(), layer.end());
  }
  std::sort(rg.entering_paths.begin(), rg.entering_paths.end());
  rg.complete = entering_paths_of_length(*g, h, bound + 1).empty();

  GraphBuilder builder(g->name() + "_restricted");
  for (VertexId v : h.members()) builder.vertex(g->vertex_name(v));
  for (Path const& p : rg.entering_paths) builder.vertex(rg.vertex_name(p));
  for (EdgeId e : g->edges()) {
    if (h.contains(g->source(e))) builder.edge(g->edge_name(e), g->vertex_name(g->source(e)), g->vertex_name(g->range(e)));
  }
  for (Path const& p : rg.entering_paths) builder.edge(rg.edge_name(p), rg.vertex_name(p), g->vertex_name(p.range()));
  rg.graph = share(builder.build());
  return rg;
}

// Generator images: u in H -> u, entering path alpha -> alpha alpha*,
// edge e with s(e) in H -> e, bar(alpha) -> alpha; extended multiplicatively.
inline Element RestrictionGraph::embed(Element const& y) const {
  if (y.graph_ptr() != graph) throw PreconditionError("element is not over this restriction graph");
  Graph const& rg = *graph;
  Graph const& e = *source;
  Field f = y.field();
  std::size_t const h_count = h.size();
  auto entering = [&](VertexId v) -> Path const* {
    return index(v) < h_count ? nullptr : &entering_paths[index(v) - h_count];
  };
  auto vertex_image = [&](VertexId v) {
    if (Path const* alpha = entering(v)) return Element::monomial(source, *alpha, *alpha, Scalar::one(f));
    return Element::vertex(source, e.vertex(rg.vertex_name(v)), f);
  };
  auto edge_image = [&](EdgeId x) {
    Path const* alpha = entering(rg.source(x));
    if (alpha) return Element::path(source, *alpha, f);
    return Element::edge(source, e.edge(rg.edge_name(x)), f);
  };
  auto path_image = [&](Path const& p) {
    if (p.is_trivial()) return vertex_image(p.source());
    Element out = edge_image(p.first_edge());
    for (std::size_t i = 1; i < p.length(); ++i) out *= edge_image(p.edges()[i]);
    return out;
  };

  Element result(source, f);
  for (auto const& [m, c] : y.terms()) {
    Element image = m.is_vertex() ? vertex_image(m.real.source()) : path_image(m.real) * path_image(m.ghost).involution();
    result += c * image;
  }
  return result;
}

struct Denominator {
  Element r;                // r in KE with p r != 0 and q r in KE
  Path path;                // r as a path
  std::size_t iterations;   // edges appended while q mu h1...hj was outside KE
};

// Constructive right denominator: first a path mu with p mu in KE \ {0},
// then single-edge extensions until q mu h1...hj lies in KE. Each extension
// strictly lowers the ghost degree, so at most ghost_degree(q) are needed.
inline Denominator right_denominator(Element const& p, Element const& q) {
  if (p.is_zero()) throw PreconditionError("right denominator needs p != 0");
  if (p.graph_ptr() != q.graph_ptr()) throw PreconditionError("elements over different graphs");
  GraphPtr const& g = p.graph_ptr();
  Field f = p.field();
  auto good = [&](Path const& mu) {
    Element x = p * Element::path(g, mu, f);
    return !x.is_zero() && x.is_in_path_algebra();
  };

  // Ghost paths of p, longest first.
  std::vector<Path> candidates;
  for (auto const& [m, c] : p.terms()) candidates.push_back(m.ghost);
  std::sort(candidates.begin(), candidates.end(), [](Path const& a, Path const& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a < b;
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::optional<Path> mu;
  for (Path const& c : candidates) {
    if (good(c)) {
      mu = c;
      break;
    }
  }
  if (!mu) {
    // Descent: p v != 0 for some vertex; while p mu has ghosts, some edge e
    // from r(mu) has p mu e != 0 (since r(mu) = sum e e*), and it lowers
    // the ghost degree.
    for (VertexId v : g->vertices()) {
      if (!(p * Element::vertex(g, v, f)).is_zero()) {
        mu = Path::trivial(v);
        break;
      }
    }
    for (;;) {
      Element x = p * Element::path(g, *mu, f);
      if (x.is_in_path_algebra()) break;
      bool extended = false;
      for (EdgeId e : g->out_edges(mu->range())) {
        Path next = mu->appended(*g, e);
        if (!(p * Element::path(g, next, f)).is_zero()) {
          mu = std::move(next);
          extended = true;
          break;
        }
      }
      if (!extended) throw Error("right denominator descent failed");
    }
  }

  Denominator d{Element::path(g, *mu, f), *mu, 0};
  while (!(q * d.r).is_in_path_algebra()) {
    auto out = g->out_edges(d.path.range());
    if (out.empty()) throw Error("right denominator reached a sink with ghosts remaining");
    d.path = d.path.appended(*g, out.front());
    d.r = Element::path(g, d.path, f);
    ++d.iterations;
  }
  return d;
}

}  // namespace lpa
