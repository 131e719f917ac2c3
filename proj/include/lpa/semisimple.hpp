#pragma once

// Matrix structure of L_K(E) for finite acyclic E.
//
// Each sink z contributes one block M_n(K), n = number of paths ending at z
// (the trivial one included). With those paths p_1..p_n in a fixed order,
// p_j p_k* is the matrix unit e_jk. When E also has no bifurcations, every
// vertex has exactly one path to its sink, so the blocks are indexed by
// vertices and p_j p_k* reduces to the monomial mu_jk.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/analysis.hpp"
#include "lpa/element.hpp"
#include "lpa/matrix.hpp"
#include "lpa/quotients.hpp"

namespace lpa {

struct DecompositionComponent {
  VertexId sink;
  std::vector<Path> index;  // paths ending at the sink, in block order
  bool truncated = false;   // more paths exist beyond an enumeration bound
};

class MatrixDecomposition {
 public:
  MatrixDecomposition(GraphPtr g, std::vector<DecompositionComponent> components)
      : graph_(std::move(g)), components_(std::move(components)) {
    for (std::size_t c = 0; c < components_.size(); ++c) {
      auto const& idx = components_[c].index;
      for (std::size_t j = 0; j < idx.size(); ++j) position_.emplace(idx[j], std::pair{c, j});
    }
  }

  GraphPtr const& graph_ptr() const noexcept { return graph_; }
  std::vector<DecompositionComponent> const& components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    for (auto const& c : components_) s.push_back(c.index.size());
    return s;
  }

  std::optional<std::pair<std::size_t, std::size_t>> position(Path const& p) const {
    auto it = position_.find(p);
    if (it == position_.end()) return std::nullopt;
    return it->second;
  }

 private:
  GraphPtr graph_;
  std::vector<DecompositionComponent> components_;
  std::map<Path, std::pair<std::size_t, std::size_t>> position_;
};

namespace detail {

// Declaration order of the source, then length, then edge sequence.
inline bool block_order(Path const& a, Path const& b) {
  if (a.source() != b.source()) return index(a.source()) < index(b.source());
  if (a.length() != b.length()) return a.length() < b.length();
  return std::lexicographical_compare(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                                      [](EdgeId x, EdgeId y) { return index(x) < index(y); });
}

inline std::vector<Path> paths_ending_at(Graph const& g, VertexId z) {
  std::vector<Path> out;
  // reversed edge lists grown backwards from z
  std::vector<std::vector<EdgeId>> stack{{}};
  while (!stack.empty()) {
    auto rev = std::move(stack.back());
    stack.pop_back();
    VertexId at = rev.empty() ? z : g.source(rev.back());
    for (EdgeId e : g.in_edges(at)) {
      auto next = rev;
      next.push_back(e);
      stack.push_back(std::move(next));
    }
    if (rev.empty()) {
      out.push_back(Path::trivial(z));
    } else {
      out.push_back(Path::of(g, std::vector<EdgeId>(rev.rbegin(), rev.rend())));
    }
  }
  std::sort(out.begin(), out.end(), block_order);
  return out;
}

// Paths from v to a sink.
inline std::vector<Path> maximal_paths_from(Graph const& g, VertexId v) {
  std::vector<Path> out;
  std::vector<Path> stack{Path::trivial(v)};
  while (!stack.empty()) {
    Path p = std::move(stack.back());
    stack.pop_back();
    if (g.is_sink(p.range())) {
      out.push_back(std::move(p));
      continue;
    }
    for (EdgeId e : g.out_edges(p.range())) stack.push_back(p.appended(g, e));
  }
  return out;
}

inline void require_acyclic(Graph const& g) {
  if (!is_acyclic(g)) throw PreconditionError("graph has a cycle; no finite matrix decomposition");
}

}  // namespace detail

inline MatrixDecomposition matrix_decomposition(GraphPtr g) {
  detail::require_acyclic(*g);
  std::vector<DecompositionComponent> comps;
  for (VertexId v : g->vertices()) {
    if (g->is_sink(v)) comps.push_back({v, detail::paths_ending_at(*g, v), false});
  }
  return MatrixDecomposition(std::move(g), std::move(comps));
}

// Decomposition of a restriction graph. Blocks whose sink is reached by an
// entering path longer than the bound are marked truncated, and dropped
// entirely when drop_truncated is set.
inline MatrixDecomposition matrix_decomposition(RestrictionGraph const& rg, bool drop_truncated = false) {
  Graph const& hg = *rg.graph;
  detail::require_acyclic(hg);
  VertexSet cut(hg.vertex_count());
  if (!rg.complete) {
    for (Path const& p : entering_paths_of_length(*rg.source, rg.h, rg.bound + 1)) {
      cut.insert(hg.vertex(rg.source->vertex_name(p.range())));
    }
  }
  VertexSet reached = tree(hg, cut);
  std::vector<DecompositionComponent> comps;
  for (VertexId v : hg.vertices()) {
    if (!hg.is_sink(v)) continue;
    bool truncated = reached.contains(v);
    if (truncated && drop_truncated) continue;
    comps.push_back({v, detail::paths_ending_at(hg, v), truncated});
  }
  return MatrixDecomposition(rg.graph, std::move(comps));
}

inline BlockMatrix to_matrix(Element const& x, MatrixDecomposition const& d) {
  if (x.graph_ptr() != d.graph_ptr()) throw PreconditionError("element is not over the decomposed graph");
  Graph const& g = x.graph();
  BlockMatrix m = BlockMatrix::zero(d.sizes(), x.field());
  for (auto const& [mono, c] : x.terms()) {
    for (Path const& t : detail::maximal_paths_from(g, mono.real.range())) {
      auto row = d.position(mono.real.concat(t));
      auto col = d.position(mono.ghost.concat(t));
      if (!row || !col) throw PreconditionError("element reaches a block outside the decomposition");
      m.block(row->first)(row->second, col->second) += c;
    }
  }
  return m;
}

inline Element from_matrix(BlockMatrix const& m, MatrixDecomposition const& d, Field f = Field::rationals()) {
  if (m.sizes() != d.sizes()) throw PreconditionError("block structure does not match the decomposition");
  Element x(d.graph_ptr(), f);
  for (std::size_t c = 0; c < d.size(); ++c) {
    auto const& idx = d.components()[c].index;
    Matrix const& b = m.block(c);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (!b(j, k).is_zero()) x += Element::monomial(d.graph_ptr(), idx[j], idx[k], b(j, k));
      }
    }
  }
  return x;
}

// x = alpha beta* with |alpha| + |beta| minimal. Without bifurcations every
// edge e satisfies e e* = s(e), so a shared final edge cancels.
inline std::pair<Path, Path> reduced_expression(Graph const& g, Monomial const& m) {
  if (!is_acyclic_no_bifurcation(g)) throw PreconditionError("graph has cycles or bifurcations");
  Path a = m.real;
  Path b = m.ghost;
  while (!a.is_trivial() && !b.is_trivial() && a.last_edge() == b.last_edge()) {
    a = a.without_last(g);
    b = b.without_last(g);
  }
  return {std::move(a), std::move(b)};
}

struct ReducedMonomial {
  std::size_t component;
  std::size_t row;
  std::size_t col;
  Monomial monomial;  // mu_{row,col}
};

// alpha^2 reduced monomials per connected component, alpha its vertex count.
inline std::vector<ReducedMonomial> reduced_monomial_basis(GraphPtr const& g) {
  if (!is_acyclic_no_bifurcation(*g)) throw PreconditionError("graph has cycles or bifurcations");
  auto d = matrix_decomposition(g);
  std::vector<ReducedMonomial> out;
  for (std::size_t c = 0; c < d.size(); ++c) {
    auto const& idx = d.components()[c].index;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      for (std::size_t k = 0; k < idx.size(); ++k) {
        auto [a, b] = reduced_expression(*g, Monomial::make(idx[j], idx[k]));
        out.push_back({c, j, k, Monomial::make(std::move(a), std::move(b))});
      }
    }
  }
  return out;
}

inline bool is_square_cancellable(Element const& x) {
  return is_group_invertible(to_matrix(x, matrix_decomposition(x.graph_ptr())));
}

inline Element group_inverse(Element const& x) {
  auto d = matrix_decomposition(x.graph_ptr());
  return from_matrix(group_inverse(to_matrix(x, d)), d, x.field());
}

using Membership = std::function<bool(Element const&)>;

enum class FgVerdict { valid, a_outside, b_outside, b_not_square_cancellable, quotient_mismatch };

inline std::string to_string(FgVerdict v) {
  switch (v) {
    case FgVerdict::valid: return "valid";
    case FgVerdict::a_outside: return "a is outside the subalgebra";
    case FgVerdict::b_outside: return "b is outside the subalgebra";
    case FgVerdict::b_not_square_cancellable: return "b is not square-cancellable";
    case FgVerdict::quotient_mismatch: return "q differs from a b#";
  }
  return "unknown";
}

// Checks q = a b# with a, b in the subalgebra and b square-cancellable.
inline FgVerdict check_fg_witness(Element const& a, Element const& b, Element const& q, Membership const& membership) {
  auto d = matrix_decomposition(q.graph_ptr());
  if (!membership(a)) return FgVerdict::a_outside;
  if (!membership(b)) return FgVerdict::b_outside;
  BlockMatrix mb = to_matrix(b, d);
  if (!is_group_invertible(mb)) return FgVerdict::b_not_square_cancellable;
  BlockMatrix lhs = to_matrix(a, d) * group_inverse(mb);
  return lhs == to_matrix(q, d) ? FgVerdict::valid : FgVerdict::quotient_mismatch;
}

inline bool verify_fg_witness(Element const& a, Element const& b, Element const& q, Membership const& membership) {
  return check_fg_witness(a, b, q, membership) == FgVerdict::valid;
}

// Exhaustive search over combinations of `basis` with coefficients drawn from
// `coefficients`. For each square-cancellable b, a = q b is tried first: when
// any witness with this b exists, q b b# = q.
inline std::pair<Element, Element> find_fg_witness(Element const& q, std::vector<Element> const& basis,
                                                   std::vector<long long> const& coefficients, Membership const& membership) {
  auto d = matrix_decomposition(q.graph_ptr());
  BlockMatrix mq = to_matrix(q, d);
  std::vector<Element> span;
  std::vector<std::size_t> digits(basis.size(), 0);
  for (;;) {
    Element x(q.graph_ptr(), q.field());
    for (std::size_t i = 0; i < basis.size(); ++i) x += Scalar(q.field(), coefficients[digits[i]]) * basis[i];
    span.push_back(std::move(x));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == coefficients.size()) digits[i++] = 0;
    if (i == digits.size()) break;
  }

  for (Element const& b : span) {
    if (b.is_zero() || !membership(b)) continue;
    BlockMatrix mb = to_matrix(b, d);
    if (!is_group_invertible(mb)) continue;
    BlockMatrix sharp = group_inverse(mb);
    Element direct = q * b;
    if (membership(direct) && to_matrix(direct, d) * sharp == mq) return {direct, b};
    for (Element const& a : span) {
      if (membership(a) && to_matrix(a, d) * sharp == mq) return {a, b};
    }
  }
  throw NotFoundWithinBounds("no witness q = a b# within the search bounds");
}

}  // namespace lpa
