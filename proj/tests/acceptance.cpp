// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lpa/builders.hpp"
#include "lpa/expression.hpp"
#include "lpa/graph_dsl.hpp"
#include "lpa/rewriting.hpp"
#include "lpa/semisimple.hpp"
#include "lpa/toeplitz.hpp"
#include "oracles.hpp"

using namespace lpa;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

// Records the first failure, counts the rest.
struct Checker {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool cond, std::string const& what) {
    ++checks;
    if (!cond) {
      if (failures++ == 0) first = what;
    }
  }
  Verdict verdict(std::string const& summary) const {
    if (failures == 0) return {true, summary + " (" + std::to_string(checks) + " checks)"};
    return {false, std::to_string(failures) + "/" + std::to_string(checks) + " failed; first: " + first};
  }
};

std::string sizes_string(std::vector<std::size_t> const& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

std::size_t basis_count(std::vector<std::size_t> const& sizes) {
  std::size_t n = 0;
  for (auto s : sizes) n += s * s;
  return n;
}

Verdict ac1() {
  auto g = oracle::corpus_graph("a2");
  auto d = matrix_decomposition(g);
  Checker c;
  c.expect(d.sizes() == std::vector<std::size_t>{2}, "sizes " + sizes_string(d.sizes()));
  c.expect(basis_count(d.sizes()) == 4, "basis count");
  c.expect(basis_monomials_up_to(*g, 4).size() == 4, "engine basis count");
  return c.verdict("sizes " + sizes_string(d.sizes()) + ", basis 4");
}

Verdict ac2() {
  auto g = oracle::corpus_graph("line3");
  auto d = matrix_decomposition(g);
  Checker c;
  VertexId sink = g->vertex("v3");
  std::size_t n = oracle::paths_into(*g, sink);
  c.expect(n == 3, "oracle path count " + std::to_string(n));
  c.expect(d.sizes() == std::vector<std::size_t>{n}, "sizes " + sizes_string(d.sizes()));
  c.expect(basis_count(d.sizes()) == n * n, "basis count");
  c.expect(basis_monomials_up_to(*g, 6).size() == 9, "engine basis count");
  return c.verdict("sizes " + sizes_string(d.sizes()) + ", basis 9");
}

Verdict ac3() {
  auto d = matrix_decomposition(ladder_restriction(5), true);
  Checker c;
  c.expect(d.sizes() == std::vector<std::size_t>{2, 3, 4, 5, 6}, "sizes " + sizes_string(d.sizes()));
  return c.verdict("sizes " + sizes_string(d.sizes()));
}

Verdict ac4() {
  auto r = exact_sequence_report(oracle::corpus_graph("toeplitz"), 4);
  Checker c;
  for (auto const& m : r.mismatches) c.expect(false, "mismatch at " + m);
  for (auto k : r.missing_exponents) c.expect(false, "no preimage of x^" + std::to_string(k));
  c.expect(r.preimages.size() == 9, "preimage count");
  return c.verdict(std::to_string(r.monomials) + " monomials, " + std::to_string(r.socle_monomials) + " in socle");
}

Verdict ac5() {
  auto g = oracle::corpus_graph("toeplitz");
  std::size_t const n = 12, d = 4;
  auto r = sandwich_report(g, d, n);
  Checker c;
  for (auto const& s : r.socle_not_finite) c.expect(false, "socle window unbounded: " + s);
  for (auto const& s : r.not_row_col_finite) c.expect(false, "not row/col finite: " + s);
  for (auto const& s : r.banded_failures) c.expect(false, "not banded: " + s);
  for (auto const& s : r.unit_failures) c.expect(false, "matrix unit " + s);
  for (auto const& s : r.multiplicativity_failures) c.expect(false, "multiplicativity " + s);
  for (Element const& x : toeplitz_generators(g)) {
    auto w = rcfm_representation(x, n);
    c.expect(w.row_finite && w.col_finite, "generator " + x.to_string());
  }
  c.expect(r.generator_pairs == 36, "generator pair count");

  auto basis = basis_monomials_up_to(*g, d);
  std::mt19937_64 rng(2024);
  std::shuffle(basis.begin(), basis.end(), rng);
  basis.erase(basis.begin() + 20, basis.end());
  Matrix stacked(basis.size(), n * n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Matrix m = rcfm_representation(Element::monomial(g, basis[k]), n).entries;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) stacked(k, i * n + j) = m(i, j);
    }
  }
  c.expect(stacked.rank() == basis.size(), "20 windows have rank " + std::to_string(stacked.rank()));
  return c.verdict(std::to_string(r.monomials) + " monomials, " + std::to_string(r.matrix_units) + " units, 20 windows independent");
}

Verdict ac6() {
  Checker c;
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    Graph g = oracle::random_graph(rng, 6, 10);
    c.expect(is_path_algebra_semiprime(g) == oracle::path_algebra_semiprime(g), "random graph\n" + to_dsl(g));
  }
  auto a2 = oracle::corpus_graph("a2");
  c.expect(!is_path_algebra_semiprime(*a2), "A2 decided semiprime");
  Element f = parse_element(a2, "f");
  for (Path const& p : paths_up_to(*a2, 2)) c.expect((f * Element::path(a2, p) * f).is_zero(), "f KE f != 0");
  c.expect(!f.is_zero(), "f is zero");
  return c.verdict("100 random graphs, A2 witness f KE f = 0");
}

Verdict ac7() {
  Checker c;
  std::size_t graphs = 0;
  for (auto const& g : oracle::corpus()) {
    std::size_t n = g->vertex_count();
    if (n > 5) continue;
    ++graphs;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      auto bits = oracle::from_mask(n, mask);
      VertexSet x(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (bits[i]) x.insert(vertex_id(i));
      }
      VertexSet got = hereditary_saturated_closure(*g, x);
      auto want = oracle::closure(*g, bits);
      bool same = true;
      for (std::size_t i = 0; i < n; ++i) same = same && got.contains(vertex_id(i)) == want[i];
      c.expect(same, g->name() + " mask " + std::to_string(mask));
    }
  }
  return c.verdict(std::to_string(graphs) + " corpus graphs, all subsets");
}

Verdict ac8() {
  Checker c;
  std::mt19937_64 rng(8);
  for (auto const& g : oracle::corpus()) {
    int pairs = 0;
    while (pairs < 100) {
      Element p = oracle::random_element(g, rng), q = oracle::random_element(g, rng);
      if (p.is_zero()) continue;
      ++pairs;
      try {
        auto d = right_denominator(p, q);
        std::string where = g->name() + ": p=" + p.to_string() + " q=" + q.to_string();
        c.expect(!(p * d.r).is_zero(), "p r = 0 for " + where);
        c.expect((q * d.r).is_in_path_algebra(), "q r outside KE for " + where);
        c.expect(d.r.is_in_path_algebra(), "r outside KE for " + where);
        c.expect(d.iterations <= q.ghost_degree(), "too many iterations for " + where);
      } catch (std::exception const& e) {
        c.expect(false, g->name() + ": " + e.what());
      }
    }
  }
  return c.verdict("100 pairs per corpus graph");
}

Element letter_element(GraphPtr const& g, Letter l) {
  switch (l.kind) {
    case Letter::Kind::vertex: return Element::vertex(g, l.vertex());
    case Letter::Kind::edge: return Element::edge(g, l.edge());
    case Letter::Kind::ghost: return Element::ghost(g, l.edge());
  }
  return Element(g);
}

Verdict ac9() {
  Checker c;
  std::mt19937_64 rng(9);
  Field q = Field::rationals();
  for (auto const& g : oracle::corpus()) {
    std::size_t nv = g->vertex_count(), ne = g->edge_count();
    std::uniform_int_distribution<std::size_t> letter(0, nv + 2 * ne - 1);
    auto random_letter = [&] {
      std::size_t k = letter(rng);
      if (k < nv) return Letter::of(vertex_id(k));
      k -= nv;
      return k < ne ? Letter::real(edge_id(k)) : Letter::ghost(edge_id(k - ne));
    };
    // Random elements given as raw words over the generators.
    for (int t = 0; t < 200; ++t) {
      WordCombination words;
      Element product(g);
      std::size_t terms = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
      for (std::size_t i = 0; i < terms; ++i) {
        Word w;
        std::size_t len = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        for (std::size_t k = 0; k < len; ++k) w.push_back(random_letter());
        Scalar coef(q, std::uniform_int_distribution<long long>(1, 3)(rng));
        Element x = letter_element(g, w.front());
        for (std::size_t k = 1; k < w.size(); ++k) x *= letter_element(g, w[k]);
        product += coef * x;
        detail::add_word(words, w, coef);
      }
      auto a = rewrite(*g, words, RewriteStrategy::random, rng());
      auto b = rewrite(*g, words, RewriteStrategy::random, rng());
      auto l = rewrite(*g, words, RewriteStrategy::leftmost);
      c.expect(a.terms == b.terms && a.terms == l.terms, g->name() + ": strategies disagree");
      c.expect(Element::from_terms(g, a.terms) == product, g->name() + ": rewriting differs from the product");
    }

    // CK relations
    for (VertexId u : g->vertices()) {
      for (VertexId v : g->vertices()) {
        Element uv = Element::vertex(g, u) * Element::vertex(g, v);
        c.expect(uv == (u == v ? Element::vertex(g, u) : Element(g)), g->name() + ": vertex idempotents");
      }
    }
    for (EdgeId e : g->edges()) {
      Element x = Element::edge(g, e), xs = Element::ghost(g, e);
      Element s = Element::vertex(g, g->source(e)), r = Element::vertex(g, g->range(e));
      c.expect(s * x == x && x * r == x, g->name() + ": s(e) e = e = e r(e)");
      c.expect(r * xs == xs && xs * s == xs, g->name() + ": r(e) e* = e* = e* s(e)");
      for (EdgeId f : g->edges()) {
        c.expect(xs * Element::edge(g, f) == (e == f ? r : Element(g)), g->name() + ": e* f");
      }
    }
    for (VertexId v : g->vertices()) {
      if (g->is_sink(v)) continue;
      Element sum(g);
      for (EdgeId e : g->out_edges(v)) sum += Element::edge(g, e) * Element::ghost(g, e);
      c.expect(sum == Element::vertex(g, v), g->name() + ": v = sum e e*");
    }

    // involution and grading
    for (int t = 0; t < 50; ++t) {
      Element x = oracle::random_element(g, rng), y = oracle::random_element(g, rng);
      c.expect((x * y).involution() == y.involution() * x.involution(), g->name() + ": (xy)* = y* x*");
      for (auto const& [dx, cx] : x.homogeneous_components()) {
        for (auto const& [dy, cy] : y.homogeneous_components()) {
          auto parts = (cx * cy).homogeneous_components();
          c.expect(parts.empty() || (parts.size() == 1 && parts.begin()->first == dx + dy), g->name() + ": grading");
        }
      }
    }

    // distinct paths are linearly independent
    auto paths = paths_up_to(*g, 3);
    Element sum(g);
    for (std::size_t i = 0; i < paths.size(); ++i) sum += Scalar(q, static_cast<long long>(i + 1)) * Element::path(g, paths[i]);
    c.expect(sum.size() == paths.size(), g->name() + ": paths collapse");
    for (std::size_t i = 0; i < paths.size(); ++i) {
      Monomial m = Monomial::make(paths[i], Path::trivial(paths[i].range()));
      c.expect(sum.coefficient(m) == Scalar(q, static_cast<long long>(i + 1)), g->name() + ": path coefficient");
    }
  }
  return c.verdict("200 elements per corpus graph");
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  std::uniform_int_distribution<int> d(-3, 3);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(Field::rationals(), d(rng));
  }
  return m;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (m.rank() == n) return m;
  }
}

// P diag(C, 0) P^-1 with C invertible: rank(m) = rank(m^2) for every rank.
Matrix random_group_invertible(std::mt19937_64& rng, std::size_t n) {
  std::size_t r = std::uniform_int_distribution<std::size_t>(0, n)(rng);
  Matrix core = Matrix(n, n);
  if (r > 0) {
    Matrix c = random_invertible(rng, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) core(i, j) = c(i, j);
    }
  }
  Matrix p = random_invertible(rng, n);
  return p * core * p.inverse();
}

// P N P^-1 with N strictly upper triangular and nonzero: rank drops on squaring.
Matrix random_rank_dropping(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix nil(n, n);
    std::uniform_int_distribution<int> d(-3, 3);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) nil(i, j) = Scalar(Field::rationals(), d(rng));
    }
    if (nil.is_zero()) continue;
    Matrix p = random_invertible(rng, n);
    Matrix m = p * nil * p.inverse();
    if (m.rank() != (m * m).rank()) return m;
  }
}

Verdict ac10() {
  Checker c;
  std::mt19937_64 rng(10);
  for (int t = 0; t < 100; ++t) {
    BlockMatrix a({random_group_invertible(rng, 2), random_group_invertible(rng, 3)});
    try {
      BlockMatrix b = group_inverse(a);
      c.expect(a * b * a == a, "aba != a");
      c.expect(b * a * b == b, "bab != b");
      c.expect(a * b == b * a, "ab != ba");
    } catch (NotGroupInvertible const&) {
      c.expect(false, "group-invertible matrix rejected");
    }
  }
  for (int t = 0; t < 100; ++t) {
    bool first = t % 2 == 0;
    Matrix bad2 = first ? random_rank_dropping(rng, 2) : random_group_invertible(rng, 2);
    Matrix bad3 = first ? random_group_invertible(rng, 3) : random_rank_dropping(rng, 3);
    BlockMatrix a({bad2, bad3});
    bool threw = false;
    try {
      group_inverse(a);
    } catch (NotGroupInvertible const&) {
      threw = true;
    }
    c.expect(threw, "rank-dropping matrix accepted");
    c.expect(!is_group_invertible(a), "rank-dropping matrix reported invertible");
  }
  return c.verdict("100 invertible, 100 rank-dropping in M2+M3");
}

Verdict ac11() {
  Checker c;
  c.expect(socle_is_essential(*oracle::corpus_graph("toeplitz")), "Toeplitz");
  c.expect(!socle_is_essential(*oracle::corpus_graph("r1")), "R1");
  c.expect(socle_is_essential(*oracle::corpus_graph("ladder")), "ladder");
  c.expect(socle_is_essential(*ladder_restriction(5).graph), "ladder restriction");
  for (auto const& g : oracle::corpus()) c.expect(socle_is_essential(*g) == oracle::socle_essential(*g), g->name());
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    Graph g = oracle::random_graph(rng, 6, 10);
    c.expect(socle_is_essential(g) == oracle::socle_essential(g), "random graph\n" + to_dsl(g));
  }
  return c.verdict("corpus plus 100 random graphs");
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Verdict()>>> const criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},   {"AC5", ac5},  {"AC6", ac6},
      {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11}};
  int failed = 0;
  for (auto const& [name, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (std::exception const& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << name << (v.ok ? " PASS: " : " FAIL: ") << v.detail << std::endl;
    if (!v.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
