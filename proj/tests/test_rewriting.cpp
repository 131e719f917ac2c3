#include <gtest/gtest.h>

#include <random>

#include "lpa/builders.hpp"
#include "lpa/rewriting.hpp"
#include "lpa/toeplitz.hpp"
#include "oracles.hpp"

using namespace lpa;

namespace {

Letter random_letter(Graph const& g, std::mt19937_64& rng) {
  std::size_t n = g.vertex_count(), m = g.edge_count();
  std::size_t k = std::uniform_int_distribution<std::size_t>(0, n + 2 * m - 1)(rng);
  if (k < n) return Letter::of(vertex_id(k));
  k -= n;
  return k < m ? Letter::real(edge_id(k)) : Letter::ghost(edge_id(k - m));
}

Element letter_element(GraphPtr const& g, Letter l) {
  switch (l.kind) {
    case Letter::Kind::vertex: return Element::vertex(g, l.vertex());
    case Letter::Kind::edge: return Element::edge(g, l.edge());
    case Letter::Kind::ghost: return Element::ghost(g, l.edge());
  }
  return Element(g);
}

// Product of the letters computed with Element's own multiplication.
Element word_element(GraphPtr const& g, Word const& w) {
  Element x = letter_element(g, w.front());
  for (std::size_t i = 1; i < w.size(); ++i) x *= letter_element(g, w[i]);
  return x;
}

}  // namespace

TEST(Rewriting, DesignatedJunctionExpands) {
  auto g = share(toeplitz_graph());
  EdgeId f = g->edge("f");
  WordCombination words{{Word{Letter::real(f), Letter::ghost(f)}, Scalar::one(Field::rationals())}};
  auto out = rewrite(*g, words, RewriteStrategy::leftmost);
  EXPECT_EQ(Element::from_terms(g, out.terms).to_string(), "v - e*e'");
  EXPECT_EQ(out.steps, 1u);
}

TEST(Rewriting, ZeroProducts) {
  auto g = share(toeplitz_graph());
  EdgeId e = g->edge("e"), f = g->edge("f");
  WordCombination words{{Word{Letter::ghost(e), Letter::real(f)}, Scalar::one(Field::rationals())}};
  EXPECT_TRUE(rewrite(*g, words, RewriteStrategy::random, 3).terms.empty());
}

TEST(Rewriting, StepLimit) {
  auto g = share(toeplitz_graph());
  EdgeId f = g->edge("f");
  WordCombination words{{Word{Letter::real(f), Letter::ghost(f)}, Scalar::one(Field::rationals())}};
  EXPECT_THROW(rewrite(*g, words, RewriteStrategy::leftmost, 0, 0), Error);
}

class RewritingCorpus : public ::testing::TestWithParam<std::string> {};

TEST_P(RewritingCorpus, StrategiesAgreeWithProduct) {
  auto g = oracle::corpus_graph(GetParam());
  std::mt19937_64 rng(std::hash<std::string>{}(GetParam()) ^ 0x5a5a);
  Field q = Field::rationals();
  for (int trial = 0; trial < 200; ++trial) {
    WordCombination words;
    Element expected(g);
    std::size_t terms = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    for (std::size_t t = 0; t < terms; ++t) {
      Word w;
      std::size_t len = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
      for (std::size_t i = 0; i < len; ++i) w.push_back(random_letter(*g, rng));
      Scalar c(q, std::uniform_int_distribution<long long>(-3, 3)(rng));
      if (c.is_zero()) continue;
      expected += c * word_element(g, w);
      detail::add_word(words, w, c);
    }
    auto left = rewrite(*g, words, RewriteStrategy::leftmost);
    auto rand = rewrite(*g, words, RewriteStrategy::random, rng());
    ASSERT_EQ(Element::from_terms(g, left.terms), expected);
    ASSERT_EQ(Element::from_terms(g, rand.terms), expected);
    // irreducible words are already in canonical form
    ASSERT_EQ(expected.terms(), left.terms);
    ASSERT_EQ(expected.terms(), rand.terms);
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, RewritingCorpus,
                         ::testing::Values("toeplitz", "a2", "p1", "r1", "line3", "diamond", "two_loops", "rose2",
                                           "toeplitz_a2", "cycle_exit", "ladder"));
