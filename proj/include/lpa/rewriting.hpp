#pragma once

// String rewriting over the generators {v, e, e*} of L_K(E).
//
// Works on linear combinations of words and applies the defining relations
// one adjacent pair at a time, in an order chosen by a strategy. Irreducible
// words have the shape p q* with no designated-edge junction f f*, so the
// result can be compared term-by-term with Element's canonical form.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "lpa/element.hpp"

namespace lpa {

struct Letter {
  enum class Kind : std::uint8_t { vertex, edge, ghost };
  Kind kind;
  std::uint32_t id;

  static Letter of(VertexId v) { return {Kind::vertex, static_cast<std::uint32_t>(index(v))}; }
  static Letter real(EdgeId e) { return {Kind::edge, static_cast<std::uint32_t>(index(e))}; }
  static Letter ghost(EdgeId e) { return {Kind::ghost, static_cast<std::uint32_t>(index(e))}; }

  VertexId vertex() const { return vertex_id(id); }
  EdgeId edge() const { return edge_id(id); }

  friend bool operator==(Letter const&, Letter const&) = default;
  friend auto operator<=>(Letter const&, Letter const&) = default;
};

using Word = std::vector<Letter>;
using WordCombination = std::map<Word, Scalar>;

enum class RewriteStrategy { leftmost, random };

namespace detail {

struct Replacement {
  Word letters;
  int sign;
};

// Redex at the pair (w[i], w[i+1]): the replacement words, empty for zero;
// nullopt if the pair is irreducible.
inline std::optional<std::vector<Replacement>> rewrite_pair(Graph const& g, Letter a, Letter b) {
  using K = Letter::Kind;
  using R = std::vector<Replacement>;
  auto keep = [](Letter x) { return R{{{x}, 1}}; };
  if (a.kind == K::vertex && b.kind == K::vertex) return a.id == b.id ? keep(a) : R{};
  if (a.kind == K::vertex && b.kind == K::edge) return g.source(b.edge()) == a.vertex() ? keep(b) : R{};
  if (a.kind == K::edge && b.kind == K::vertex) return g.range(a.edge()) == b.vertex() ? keep(a) : R{};
  if (a.kind == K::vertex && b.kind == K::ghost) return g.range(b.edge()) == a.vertex() ? keep(b) : R{};
  if (a.kind == K::ghost && b.kind == K::vertex) return g.source(a.edge()) == b.vertex() ? keep(a) : R{};
  if (a.kind == K::edge && b.kind == K::edge) {
    if (g.range(a.edge()) != g.source(b.edge())) return R{};
    return std::nullopt;
  }
  if (a.kind == K::ghost && b.kind == K::ghost) {
    if (g.source(a.edge()) != g.range(b.edge())) return R{};
    return std::nullopt;
  }
  if (a.kind == K::ghost && b.kind == K::edge) {
    return a.id == b.id ? keep(Letter::of(g.range(a.edge()))) : R{};
  }
  // edge then ghost
  if (g.range(a.edge()) != g.range(b.edge())) return R{};
  if (a.id == b.id && g.is_designated(a.edge())) {
    VertexId v = g.source(a.edge());
    R out{{{Letter::of(v)}, 1}};
    for (EdgeId e : g.out_edges(v)) {
      if (e != a.edge()) out.push_back({{Letter::real(e), Letter::ghost(e)}, -1});
    }
    return out;
  }
  return std::nullopt;
}

inline std::vector<std::size_t> redexes(Graph const& g, Word const& w) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (rewrite_pair(g, w[i], w[i + 1])) positions.push_back(i);
  }
  return positions;
}

inline void add_word(WordCombination& c, Word w, Scalar const& k) {
  if (k.is_zero()) return;
  auto [it, inserted] = c.try_emplace(std::move(w), k);
  if (!inserted) {
    it->second += k;
    if (it->second.is_zero()) c.erase(it);
  }
}

}  // namespace detail

struct RewriteResult {
  Terms terms;
  std::size_t steps = 0;
};

// Reduces a combination of words to irreducible form with the chosen strategy.
inline RewriteResult rewrite(Graph const& g, WordCombination words, RewriteStrategy strategy,
                             std::uint64_t seed = 0, std::size_t step_limit = 1'000'000) {
  std::mt19937_64 rng(seed);
  RewriteResult result;
  for (;;) {
    std::vector<std::pair<Word const*, std::vector<std::size_t>>> reducible;
    for (auto const& [w, c] : words) {
      auto positions = detail::redexes(g, w);
      if (!positions.empty()) {
        reducible.emplace_back(&w, std::move(positions));
        if (strategy == RewriteStrategy::leftmost) break;
      }
    }
    if (reducible.empty()) break;
    if (++result.steps > step_limit) throw Error("rewriting exceeded the step limit");

    std::size_t pick = 0;
    std::size_t pos = reducible.front().second.front();
    if (strategy == RewriteStrategy::random) {
      pick = std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(rng);
      auto const& positions = reducible[pick].second;
      pos = positions[std::uniform_int_distribution<std::size_t>(0, positions.size() - 1)(rng)];
    }
    Word word = *reducible[pick].first;
    auto node = words.extract(word);
    Scalar k = node.mapped();
    auto replacements = *detail::rewrite_pair(g, word[pos], word[pos + 1]);
    for (auto const& rep : replacements) {
      Word next(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos));
      next.insert(next.end(), rep.letters.begin(), rep.letters.end());
      next.insert(next.end(), word.begin() + static_cast<std::ptrdiff_t>(pos + 2), word.end());
      detail::add_word(words, std::move(next), rep.sign > 0 ? k : -k);
    }
  }

  for (auto const& [w, c] : words) {
    if (w.size() == 1 && w.front().kind == Letter::Kind::vertex) {
      detail::add_term(result.terms, Monomial::vertex(w.front().vertex()), c);
      continue;
    }
    std::vector<EdgeId> real, ghost;
    for (Letter const& l : w) {
      if (l.kind == Letter::Kind::edge) {
        real.push_back(l.edge());
      } else if (l.kind == Letter::Kind::ghost) {
        ghost.insert(ghost.begin(), l.edge());
      } else {
        throw Error("irreducible word still contains a vertex");
      }
    }
    std::optional<Path> p, q;
    if (!real.empty()) p = Path::of(g, real);
    if (!ghost.empty()) q = Path::of(g, ghost);
    if (!p) p = Path::trivial(q->range());
    if (!q) q = Path::trivial(p->range());
    detail::add_term(result.terms, Monomial::make(std::move(*p), std::move(*q)), c);
  }
  return result;
}

}  // namespace lpa
