#pragma once

// Element expression grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := [scalar '*'] factor ('*' factor)*
//   factor := atom ['\'']
//   atom   := identifier | '(' expr ')'
//   scalar := ['-'] integer ['/' positive-integer]
//
// A postfix prime is the involution of its factor; on an edge it is the
// ghost edge. A bare leading '-' before a factor is accepted as -1.
// Products of non-composable factors are zero, not errors.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/error.hpp"

namespace lpa {

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(GraphPtr g, Field f, std::string_view text) : graph_(std::move(g)), field_(f), text_(text) {}

  Element parse() {
    Element x = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(std::string const& message) const { throw ParseError(message, 1, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Element expr() {
    Element x = term();
    for (;;) {
      if (accept('+')) {
        x += term();
      } else if (accept('-')) {
        x -= term();
      } else {
        return x;
      }
    }
  }

  bool at_scalar() {
    std::size_t save = pos_;
    bool result = false;
    if (peek() == '-') {
      ++pos_;
    }
    result = std::isdigit(static_cast<unsigned char>(peek())) != 0;
    pos_ = save;
    return result;
  }

  Integer integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Scalar scalar() {
    bool negative = accept('-');
    Rational value(integer());
    if (accept('/')) {
      Integer den = integer();
      if (den == 0) fail("zero denominator");
      value /= Rational(den);
    }
    if (negative) value = -value;
    return Scalar(field_, value);
  }

  Element term() {
    Scalar coefficient = Scalar::one(field_);
    if (at_scalar()) {
      coefficient = scalar();
      if (!accept('*')) fail("expected '*' after scalar");
    } else if (accept('-')) {
      coefficient = -coefficient;
    }
    Element x = factor();
    while (accept('*')) x *= factor();
    return coefficient * x;
  }

  Element factor() {
    Element x = atom();
    while (accept('\'')) x = x.involution();
    return x;
  }

  Element atom() {
    if (accept('(')) {
      Element x = expr();
      if (!accept(')')) fail("expected ')'");
      return x;
    }
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (start == pos_) fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                                : "unexpected end of expression");
    std::string name(text_.substr(start, pos_ - start));
    if (auto v = graph_->find_vertex(name)) return Element::vertex(graph_, *v, field_);
    if (auto e = graph_->find_edge(name)) return Element::edge(graph_, *e, field_);
    pos_ = start;
    fail("unknown identifier '" + name + "'");
  }

  GraphPtr graph_;
  Field field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Element parse_element(GraphPtr g, std::string_view text, Field f = Field::rationals()) {
  return detail::ExpressionParser(std::move(g), f, text).parse();
}

}  // namespace lpa
