#pragma once

// The algebraic Toeplitz algebra and the graphs E(n, F): a loop e at v,
// connectors e_1..e_n from v into an acyclic F in which every vertex reaches
// a line point. Recognition, the quotient onto K[x, x^-1], and the action of
// the canonical graph's algebra on the left ideal generated by its sink.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/analysis.hpp"
#include "lpa/element.hpp"
#include "lpa/laurent.hpp"
#include "lpa/matrix.hpp"
#include "lpa/quotients.hpp"

namespace lpa {

// v with loop e and f: v -> w.
inline Graph toeplitz_graph() {
  return GraphBuilder("toeplitz").vertex("v").vertex("w").edge("e", "v", "v").edge("f", "v", "w").build();
}

// E(n, F). The new vertex and edges are named v, e and f (n = 1) or
// f1..fn, with underscores appended on clashes with names in F.
inline Graph build_toeplitz_family(std::size_t n, Graph const& f, std::vector<std::string> const& attach) {
  if (n == 0) throw PreconditionError("E(n, F) needs n >= 1");
  if (attach.size() != n) throw PreconditionError("attach must list exactly n vertices of F");
  if (!is_acyclic(f)) throw PreconditionError("F has a cycle");
  if (!socle_is_essential(f)) throw PreconditionError("a vertex of F does not connect to a line point of F");
  for (auto const& a : attach) {
    if (!f.find_vertex(a)) throw PreconditionError("attach vertex '" + a + "' is not in F");
  }
  std::vector<std::string> fresh_names;
  auto fresh = [&](std::string s) {
    auto used = [&](std::string const& t) {
      return f.find_vertex(t) || f.find_edge(t) || std::find(fresh_names.begin(), fresh_names.end(), t) != fresh_names.end();
    };
    while (used(s)) s += "_";
    fresh_names.push_back(s);
    return s;
  };
  std::string v = fresh("v");
  std::string e = fresh("e");
  GraphBuilder b(f.name() + "_toeplitz" + std::to_string(n));
  b.vertex(v);
  for (VertexId u : f.vertices()) b.vertex(f.vertex_name(u));
  b.edge(e, v, v);
  for (std::size_t i = 0; i < n; ++i) b.edge(fresh(n == 1 ? "f" : "f" + std::to_string(i + 1)), v, attach[i]);
  for (EdgeId x : f.edges()) b.edge(f.edge_name(x), f.vertex_name(f.source(x)), f.vertex_name(f.range(x)));
  return b.build();
}

struct ToeplitzDecomposition {
  VertexId loop_vertex;
  EdgeId loop;
  std::vector<EdgeId> connectors;
  VertexSet f_vertices;  // F^0 as a subset of the recognized graph
  Subgraph f;
};

// Matches g against E(n, F): exactly one cycle, a loop at v; every other edge
// leaving v enters F^0 = E^0 \ {v}; no edge of F returns to v; and every
// vertex of F connects within F to a line point of F.
inline std::optional<ToeplitzDecomposition> recognize_toeplitz(Graph const& g) {
  auto cs = cycles(g);
  if (cs.size() != 1 || cs.front().path().length() != 1) return std::nullopt;
  EdgeId loop = cs.front().path().first_edge();
  VertexId v = g.source(loop);
  std::vector<EdgeId> connectors;
  for (EdgeId x : g.edges()) {
    if (x == loop) continue;
    if (g.range(x) == v) return std::nullopt;
    if (g.source(x) == v) connectors.push_back(x);
  }
  if (connectors.empty()) return std::nullopt;
  VertexSet rest = VertexSet::all(g);
  rest.erase(v);
  Subgraph f = induced_subgraph(g, rest, g.name() + "_F");
  if (!socle_is_essential(*f.graph)) return std::nullopt;
  return ToeplitzDecomposition{v, loop, std::move(connectors), std::move(rest), std::move(f)};
}

inline bool is_canonical_toeplitz(Graph const& g, ToeplitzDecomposition const& d) {
  return d.connectors.size() == 1 && d.f.graph->vertex_count() == 1 && d.f.graph->edge_count() == 0 &&
         g.vertex_count() == 2;
}

// L_K(E) -> L_K(E/F^0) = L_K(one loop) = K[x, x^-1], e -> x, e* -> x^-1.
class LaurentQuotient {
 public:
  explicit LaurentQuotient(GraphPtr g) : graph_(std::move(g)) {
    auto d = recognize_toeplitz(*graph_);
    if (!d) throw PreconditionError("graph is not of the form E(n, F)");
    pi_.emplace(graph_, d->f_vertices);
  }

  LaurentPoly operator()(Element const& x) const {
    Element y = (*pi_)(x);
    LaurentPoly out(x.field());
    for (auto const& [m, c] : y.terms()) {
      out.add(static_cast<std::int64_t>(m.real.length()) - static_cast<std::int64_t>(m.ghost.length()), c);
    }
    return out;
  }

  QuotientMorphism const& morphism() const { return *pi_; }

 private:
  GraphPtr graph_;
  std::optional<QuotientMorphism> pi_;
};

inline LaurentPoly laurent_quotient(Element const& x) { return LaurentQuotient(x.graph_ptr())(x); }

struct ExactSequenceReport {
  std::size_t degree = 0;
  std::size_t monomials = 0;        // basis monomials checked
  std::size_t socle_monomials = 0;  // of which in the socle
  std::vector<std::string> mismatches;             // in_socle disagrees with a zero image
  std::map<std::int64_t, std::string> preimages;   // x^k -> a basis monomial mapping to it
  std::vector<std::int64_t> missing_exponents;

  bool passed() const { return mismatches.empty() && missing_exponents.empty(); }
};

inline ExactSequenceReport exact_sequence_report(GraphPtr const& g, std::size_t d) {
  LaurentQuotient lq(g);
  VertexSet socle = socle_vertices(*g);
  ExactSequenceReport r;
  r.degree = d;
  for (Monomial const& m : basis_monomials_up_to(*g, d)) {
    Element b = Element::monomial(g, m);
    LaurentPoly image = lq(b);
    bool socle_member = in_graded_ideal(b, socle);
    ++r.monomials;
    if (socle_member) ++r.socle_monomials;
    if (socle_member != image.is_zero()) r.mismatches.push_back(b.to_string());
    if (image.terms().size() == 1 && image.terms().begin()->second.is_one()) {
      r.preimages.try_emplace(image.terms().begin()->first, b.to_string());
    }
  }
  for (std::int64_t k = -static_cast<std::int64_t>(d); k <= static_cast<std::int64_t>(d); ++k) {
    if (!r.preimages.contains(k)) r.missing_exponents.push_back(k);
  }
  // keep only the exponents asked for
  std::erase_if(r.preimages, [&](auto const& kv) { return kv.first < -static_cast<std::int64_t>(d) || kv.first > static_cast<std::int64_t>(d); });
  return r;
}

// Left multiplication on L_K(E) w for the canonical graph, in the basis
// b_0 = w, b_{k+1} = e^k f, truncated to b_0..b_{N-1}.
struct MatrixWindow {
  std::size_t size = 0;
  Matrix entries{0, 0};
  std::size_t validity_bound = 0;  // entries (i, j) with i, j <= bound are exact
  bool finitely_supported = false;  // support within the element's total degree
  bool row_finite = false;
  bool col_finite = false;
  std::size_t bandwidth = 0;
};

namespace detail {

struct ToeplitzNames {
  VertexId v, w;
  EdgeId e, f;
};

inline ToeplitzNames canonical_names(Graph const& g) {
  auto d = recognize_toeplitz(g);
  if (!d || !is_canonical_toeplitz(g, *d)) throw PreconditionError("not the canonical Toeplitz graph");
  return {d->loop_vertex, d->f.vertices.front(), d->loop, d->connectors.front()};
}

enum class Generator { vertex_v, vertex_w, edge_e, edge_f, ghost_e, ghost_f };

inline Matrix generator_matrix(Generator gen, std::size_t n, Field fld) {
  Matrix m(n, n, fld);
  Scalar one = Scalar::one(fld);
  switch (gen) {
    case Generator::vertex_w: m(0, 0) = one; break;
    case Generator::vertex_v:
      for (std::size_t k = 1; k < n; ++k) m(k, k) = one;
      break;
    case Generator::edge_f:
      if (n > 1) m(1, 0) = one;
      break;
    case Generator::ghost_f:
      if (n > 1) m(0, 1) = one;
      break;
    case Generator::edge_e:
      for (std::size_t k = 1; k + 1 < n; ++k) m(k + 1, k) = one;
      break;
    case Generator::ghost_e:
      for (std::size_t k = 2; k < n; ++k) m(k - 1, k) = one;
      break;
  }
  return m;
}

inline void set_flags(MatrixWindow& w, std::size_t degree, std::size_t terms) {
  Matrix const& m = w.entries;
  w.finitely_supported = true;
  w.row_finite = true;
  w.col_finite = true;
  w.bandwidth = 0;
  std::vector<std::size_t> row_count(m.rows(), 0), col_count(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      if (i > degree || j > degree) w.finitely_supported = false;
      ++row_count[i];
      ++col_count[j];
      w.bandwidth = std::max(w.bandwidth, i > j ? i - j : j - i);
    }
  }
  for (auto c : row_count) w.row_finite = w.row_finite && c <= terms;
  for (auto c : col_count) w.col_finite = w.col_finite && c <= terms;
}

}  // namespace detail

inline MatrixWindow rcfm_representation(Element const& x, std::size_t n) {
  Graph const& g = x.graph();
  auto names = detail::canonical_names(g);
  std::size_t degree = x.total_degree();
  if (n <= degree) throw PreconditionError("window must exceed the element's total degree");
  Field fld = x.field();
  using detail::Generator;
  auto real = [&](EdgeId y) { return y == names.e ? Generator::edge_e : Generator::edge_f; };
  auto ghost = [&](EdgeId y) { return y == names.e ? Generator::ghost_e : Generator::ghost_f; };

  MatrixWindow w;
  w.size = n;
  w.entries = Matrix(n, n, fld);
  w.validity_bound = n - degree;
  for (auto const& [m, c] : x.terms()) {
    Matrix prod = detail::generator_matrix(m.real.source() == names.v ? Generator::vertex_v : Generator::vertex_w, n, fld);
    for (EdgeId y : m.real.edges()) prod = prod * detail::generator_matrix(real(y), n, fld);
    auto ghosts = m.ghost.edges();
    for (auto it = ghosts.rbegin(); it != ghosts.rend(); ++it) prod = prod * detail::generator_matrix(ghost(*it), n, fld);
    w.entries = w.entries + c * prod;
  }
  detail::set_flags(w, degree, std::max<std::size_t>(x.size(), 1));
  return w;
}

// b_k as an element: w, f, e f, e e f, ...
inline Element toeplitz_basis_vector(GraphPtr const& g, std::size_t k, Field fld = Field::rationals()) {
  auto names = detail::canonical_names(*g);
  if (k == 0) return Element::vertex(g, names.w, fld);
  std::vector<EdgeId> edges(k - 1, names.e);
  edges.push_back(names.f);
  return Element::path(g, Path::of(*g, std::move(edges)), fld);
}

// Column j holds x b_j written in the b basis, computed with the element
// engine; exact on the whole window (components beyond b_{N-1} are dropped).
inline Matrix action_window(Element const& x, std::size_t n) {
  GraphPtr const& g = x.graph_ptr();
  auto names = detail::canonical_names(*g);
  Matrix m(n, n, x.field());
  for (std::size_t j = 0; j < n; ++j) {
    Element y = x * toeplitz_basis_vector(g, j, x.field());
    for (auto const& [mono, c] : y.terms()) {
      if (!mono.ghost.is_trivial() || mono.real.range() != names.w) throw Error("action left the left ideal");
      std::size_t i = mono.real.length();
      if (i < n) m(i, j) += c;
    }
  }
  return m;
}

struct SandwichReport {
  std::size_t degree = 0;
  std::size_t window = 0;
  std::size_t socle_monomials = 0;
  std::size_t monomials = 0;
  std::vector<std::string> socle_not_finite;    // socle monomials with unbounded window support
  std::vector<std::string> not_row_col_finite;  // monomials failing row/col finiteness
  std::vector<std::string> banded_failures;     // v or e with bandwidth > 1
  std::size_t matrix_units = 0;
  std::vector<std::string> unit_failures;       // (j,k) where b_j b_k* is not E_jk
  std::size_t generator_pairs = 0;
  std::vector<std::string> multiplicativity_failures;

  bool passed() const {
    return socle_not_finite.empty() && not_row_col_finite.empty() && banded_failures.empty() && unit_failures.empty() &&
           multiplicativity_failures.empty();
  }
};

// Entry-wise equality on (i, j) with i, j <= bound.
inline bool agree_within(Matrix const& a, Matrix const& b, std::size_t bound) {
  for (std::size_t i = 0; i < a.rows() && i <= bound; ++i) {
    for (std::size_t j = 0; j < a.cols() && j <= bound; ++j) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

inline std::vector<Element> toeplitz_generators(GraphPtr const& g, Field fld = Field::rationals()) {
  auto names = detail::canonical_names(*g);
  return {Element::vertex(g, names.v, fld), Element::vertex(g, names.w, fld), Element::edge(g, names.e, fld),
          Element::edge(g, names.f, fld),   Element::ghost(g, names.e, fld),  Element::ghost(g, names.f, fld)};
}

inline SandwichReport sandwich_report(GraphPtr const& g, std::size_t d, std::size_t n) {
  auto names = detail::canonical_names(*g);
  if (n <= d) throw PreconditionError("window must exceed the degree bound");
  VertexSet socle = socle_vertices(*g);
  SandwichReport r;
  r.degree = d;
  r.window = n;
  for (Monomial const& m : basis_monomials_up_to(*g, d)) {
    Element b = Element::monomial(g, m);
    MatrixWindow w = rcfm_representation(b, n);
    ++r.monomials;
    if (!(w.row_finite && w.col_finite)) r.not_row_col_finite.push_back(b.to_string());
    if (in_graded_ideal(b, socle)) {
      ++r.socle_monomials;
      if (!w.finitely_supported) r.socle_not_finite.push_back(b.to_string());
    }
  }
  for (Element const& x : {Element::vertex(g, names.v), Element::edge(g, names.e)}) {
    if (rcfm_representation(x, n).bandwidth > 1) r.banded_failures.push_back(x.to_string());
  }
  for (std::size_t j = 0; j + 2 <= n; ++j) {
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      Element unit = toeplitz_basis_vector(g, j) * toeplitz_basis_vector(g, k).involution();
      ++r.matrix_units;
      if (!(action_window(unit, n) == Matrix::unit(n, j, k)) || !in_graded_ideal(unit, socle)) {
        r.unit_failures.push_back("(" + std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  }
  auto gens = toeplitz_generators(g);
  for (Element const& x : gens) {
    for (Element const& y : gens) {
      ++r.generator_pairs;
      Element xy = x * y;
      std::size_t deg = x.total_degree() + y.total_degree();
      Matrix lhs = rcfm_representation(xy, n).entries;
      Matrix rhs = rcfm_representation(x, n).entries * rcfm_representation(y, n).entries;
      if (!agree_within(lhs, rhs, n - deg)) r.multiplicativity_failures.push_back(x.to_string() + " * " + y.to_string());
    }
  }
  return r;
}

}  // namespace lpa
