#pragma once

// Elements of the Leavitt path algebra L_K(E) (and of its subalgebra KE) in
// canonical form.
//
// Basis: monomials p q* with r(p) = r(q), excluding those where p and q are
// both nonempty and end in the same designated edge. The designated edge of
// a non-sink vertex is the last edge it emits in declaration order. The
// rewrite rule
//
//     (p f)(q f)*  ->  p q*  -  sum_{e != f, s(e) = s(f)} (p e)(q e)*
//
// for designated f is the Cuntz-Krieger relation v = sum e e* solved for f f*.
// It strictly shortens the offending monomial and leaves irreducible
// replacement terms, so every element reduces in finitely many steps.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/analysis.hpp"
#include "lpa/graph.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

// p q* with r(p) = r(q). Both trivial means the vertex idempotent r(p).
struct Monomial {
  Path real;
  Path ghost;

  static Monomial vertex(VertexId v) { return {Path::trivial(v), Path::trivial(v)}; }

  static Monomial make(Path p, Path q) {
    if (p.range() != q.range()) throw PreconditionError("monomial p q* needs r(p) = r(q)");
    return {std::move(p), std::move(q)};
  }

  std::int64_t grade() const {
    return static_cast<std::int64_t>(real.length()) - static_cast<std::int64_t>(ghost.length());
  }
  std::size_t total_length() const { return real.length() + ghost.length(); }
  bool is_vertex() const { return real.is_trivial() && ghost.is_trivial(); }
  bool is_pure_path() const { return ghost.is_trivial(); }
  VertexId source() const { return real.source(); }   // s(p q*) = s(p)
  VertexId range() const { return ghost.source(); }   // r(p q*) = s(q)

  friend bool operator==(Monomial const&, Monomial const&) = default;
  friend auto operator<=>(Monomial const& a, Monomial const& b) {
    if (auto c = a.real <=> b.real; c != 0) return c;
    return a.ghost <=> b.ghost;
  }
};

inline bool is_basis_monomial(Graph const& g, Monomial const& m) {
  if (m.real.is_trivial() || m.ghost.is_trivial()) return true;
  EdgeId last = m.real.last_edge();
  return !(last == m.ghost.last_edge() && g.is_designated(last));
}

// (p q*)(r s*): nonzero only if q is a prefix of r, giving (p t) s* with
// r = q t, or r is a prefix of q, giving p (s t)* with q = r t.
inline std::optional<Monomial> monomial_product(Graph const& g, Monomial const& a, Monomial const& b) {
  if (auto t = b.real.strip_prefix(g, a.ghost)) {
    return Monomial{a.real.concat(*t), b.ghost};
  }
  if (auto t = a.ghost.strip_prefix(g, b.real)) {
    return Monomial{a.real, b.ghost.concat(*t)};
  }
  return std::nullopt;
}

using Terms = std::map<Monomial, Scalar>;

namespace detail {

inline void add_term(Terms& terms, Monomial m, Scalar const& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

// Adds c * p q* to terms, rewriting to the designated-edge basis.
inline void add_normalized(Graph const& g, Terms& terms, Path p, Path q, Scalar const& c) {
  while (!p.is_trivial() && !q.is_trivial() && p.last_edge() == q.last_edge() && g.is_designated(p.last_edge())) {
    EdgeId f = p.last_edge();
    Path p0 = p.without_last(g);
    Path q0 = q.without_last(g);
    for (EdgeId e : g.out_edges(g.source(f))) {
      if (e == f) continue;
      add_term(terms, Monomial{p0.appended(g, e), q0.appended(g, e)}, -c);
    }
    p = std::move(p0);
    q = std::move(q0);
  }
  add_term(terms, Monomial{std::move(p), std::move(q)}, c);
}

}  // namespace detail

class Element {
 public:
  explicit Element(GraphPtr g, Field f = Field::rationals()) : graph_(std::move(g)), field_(f) {
    if (!graph_) throw PreconditionError("element needs a graph");
  }

  static Element vertex(GraphPtr g, VertexId v, Field f = Field::rationals()) {
    Element x(std::move(g), f);
    x.add(Monomial::vertex(v), Scalar::one(f));
    return x;
  }
  static Element edge(GraphPtr g, EdgeId e, Field f = Field::rationals()) {
    Element x(g, f);
    x.add(Path::edge(*g, e), Path::trivial(g->range(e)), Scalar::one(f));
    return x;
  }
  static Element ghost(GraphPtr g, EdgeId e, Field f = Field::rationals()) {
    Element x(g, f);
    x.add(Path::trivial(g->range(e)), Path::edge(*g, e), Scalar::one(f));
    return x;
  }
  static Element path(GraphPtr g, Path const& p, Field f = Field::rationals()) {
    Element x(std::move(g), f);
    x.add(p, Path::trivial(p.range()), Scalar::one(f));
    return x;
  }
  // c * p q*, reduced to canonical form.
  static Element monomial(GraphPtr g, Path p, Path q, Scalar const& c) {
    Element x(std::move(g), c.field());
    x.add(std::move(p), std::move(q), c);
    return x;
  }
  static Element monomial(GraphPtr g, Monomial const& m, Field f = Field::rationals()) {
    return monomial(std::move(g), m.real, m.ghost, Scalar::one(f));
  }
  // Sum of arbitrary (not necessarily basis) monomials, reduced.
  static Element from_terms(GraphPtr g, Terms const& raw, Field f = Field::rationals()) {
    Element x(std::move(g), f);
    for (auto const& [m, c] : raw) x.add(m.real, m.ghost, c);
    return x;
  }

  GraphPtr const& graph_ptr() const noexcept { return graph_; }
  Graph const& graph() const noexcept { return *graph_; }
  Field field() const noexcept { return field_; }
  Terms const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(Monomial const& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
  }

  friend Element operator+(Element a, Element const& b) {
    a.require_compatible(b);
    for (auto const& [m, c] : b.terms_) detail::add_term(a.terms_, m, c);
    return a;
  }
  friend Element operator-(Element a, Element const& b) {
    a.require_compatible(b);
    for (auto const& [m, c] : b.terms_) detail::add_term(a.terms_, m, -c);
    return a;
  }
  Element operator-() const {
    Element r(graph_, field_);
    for (auto const& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Element operator*(Scalar const& k, Element const& x) {
    Element r(x.graph_, x.field_);
    if (k.is_zero()) return r;
    for (auto const& [m, c] : x.terms_) r.terms_.emplace(m, k * c);
    return r;
  }
  friend Element operator*(Element const& x, Element const& y) {
    x.require_compatible(y);
    Element r(x.graph_, x.field_);
    Graph const& g = *x.graph_;
    for (auto const& [a, ca] : x.terms_) {
      for (auto const& [b, cb] : y.terms_) {
        if (auto m = monomial_product(g, a, b)) {
          detail::add_normalized(g, r.terms_, std::move(m->real), std::move(m->ghost), ca * cb);
        }
      }
    }
    return r;
  }
  Element& operator+=(Element const& b) { return *this = *this + b; }
  Element& operator-=(Element const& b) { return *this = *this - b; }
  Element& operator*=(Element const& b) { return *this = *this * b; }

  friend bool operator==(Element const& a, Element const& b) {
    return a.graph_ == b.graph_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  // Linear extension of p q* -> q p*. The basis is closed under the swap.
  Element involution() const {
    Element r(graph_, field_);
    for (auto const& [m, c] : terms_) r.terms_.emplace(Monomial{m.ghost, m.real}, c);
    return r;
  }

  // Z-grading: degree n component spanned by p q* with l(p) - l(q) = n.
  std::map<std::int64_t, Element> homogeneous_components() const {
    std::map<std::int64_t, Element> parts;
    for (auto const& [m, c] : terms_) {
      auto it = parts.try_emplace(m.grade(), graph_, field_).first;
      it->second.terms_.emplace(m, c);
    }
    return parts;
  }

  bool is_homogeneous() const { return homogeneous_components().size() <= 1; }

  // Canonical forms of KE elements have no ghost edges, and every element
  // whose canonical form has none lies in KE.
  bool is_in_path_algebra() const {
    return std::all_of(terms_.begin(), terms_.end(), [](auto const& t) { return t.first.is_pure_path(); });
  }

  // Real / ghost degree of the canonical representation.
  std::size_t real_degree() const {
    std::size_t d = 0;
    for (auto const& t : terms_) d = std::max(d, t.first.real.length());
    return d;
  }
  std::size_t ghost_degree() const {
    std::size_t d = 0;
    for (auto const& t : terms_) d = std::max(d, t.first.ghost.length());
    return d;
  }
  std::size_t total_degree() const {
    std::size_t d = 0;
    for (auto const& t : terms_) d = std::max(d, t.first.total_length());
    return d;
  }

  std::string to_string() const;

 private:
  void add(Monomial const& m, Scalar const& c) { detail::add_term(terms_, m, c); }
  void add(Path p, Path q, Scalar const& c) {
    if (!(c.field() == field_)) throw PreconditionError("scalar from a different field");
    if (p.range() != q.range()) throw PreconditionError("monomial p q* needs r(p) = r(q)");
    detail::add_normalized(*graph_, terms_, std::move(p), std::move(q), c);
  }

  void require_compatible(Element const& other) const {
    if (graph_ != other.graph_) throw PreconditionError("elements over different graphs");
    if (!(field_ == other.field_)) throw PreconditionError("elements over different fields");
  }

  GraphPtr graph_;
  Field field_;
  Terms terms_;
};

// Elements are kept canonical by every operation.
inline Element normal_form(Element const& x) { return x; }

inline std::string monomial_to_string(Graph const& g, Monomial const& m) {
  if (m.is_vertex()) return g.vertex_name(m.real.source());
  std::string out;
  for (EdgeId e : m.real.edges()) {
    if (!out.empty()) out += '*';
    out += g.edge_name(e);
  }
  auto ghost = m.ghost.edges();
  for (auto it = ghost.rbegin(); it != ghost.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += g.edge_name(*it) + "'";
  }
  return out;
}

inline std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto const& [m, c] : terms_) {
    Rational v = c.value();
    bool negative = v < 0;
    if (negative) v = -v;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (v != 1) out += v.str() + "*";
    out += monomial_to_string(*graph_, m);
    first = false;
  }
  return out;
}

// All paths of length <= max_length, trivial ones included, in Path order.
inline std::vector<Path> paths_up_to(Graph const& g, std::size_t max_length) {
  std::vector<Path> result;
  std::vector<Path> frontier;
  for (VertexId v : g.vertices()) frontier.push_back(Path::trivial(v));
  result = frontier;
  for (std::size_t len = 1; len <= max_length && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (Path const& p : frontier) {
      if (p.is_trivial()) {
        for (EdgeId e : g.out_edges(p.source())) next.push_back(Path::edge(g, e));
      } else {
        for (EdgeId e : g.out_edges(p.range())) next.push_back(p.appended(g, e));
      }
    }
    result.insert(result.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

// Canonical basis monomials with l(p) + l(q) <= d, in Monomial order.
inline std::vector<Monomial> basis_monomials_up_to(Graph const& g, std::size_t d) {
  auto paths = paths_up_to(g, d);
  std::vector<std::vector<Path const*>> by_range(g.vertex_count());
  for (Path const& p : paths) by_range[index(p.range())].push_back(&p);
  std::vector<Monomial> result;
  for (auto const& bucket : by_range) {
    for (Path const* p : bucket) {
      for (Path const* q : bucket) {
        if (p->length() + q->length() > d) continue;
        Monomial m{*p, *q};
        if (is_basis_monomial(g, m)) result.push_back(std::move(m));
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace lpa
