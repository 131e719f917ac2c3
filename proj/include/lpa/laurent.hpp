#pragma once

// Laurent polynomials K[x, x^-1] with exact coefficients.

#include <cstdint>
#include <map>
#include <string>

#include "lpa/scalar.hpp"

namespace lpa {

class LaurentPoly {
 public:
  explicit LaurentPoly(Field f = Field::rationals()) : field_(f) {}

  static LaurentPoly monomial(std::int64_t k, Scalar const& c) {
    LaurentPoly p(c.field());
    p.add(k, c);
    return p;
  }
  static LaurentPoly x_power(std::int64_t k, Field f = Field::rationals()) { return monomial(k, Scalar::one(f)); }

  Field field() const noexcept { return field_; }
  std::map<std::int64_t, Scalar> const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coefficient(std::int64_t k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
  }

  void add(std::int64_t k, Scalar const& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // x -> x^-1
  LaurentPoly inverted() const {
    LaurentPoly out(field_);
    for (auto const& [k, c] : terms_) out.add(-k, c);
    return out;
  }

  friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) {
    for (auto const& [k, c] : b.terms_) a.add(k, c);
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) {
    for (auto const& [k, c] : b.terms_) a.add(k, -c);
    return a;
  }
  friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
    LaurentPoly out(a.field_);
    for (auto const& [i, c] : a.terms_) {
      for (auto const& [j, d] : b.terms_) out.add(i + j, c * d);
    }
    return out;
  }
  friend bool operator==(LaurentPoly const& a, LaurentPoly const& b) { return a.terms_ == b.terms_; }

  // Highest power first, e.g. "x^2 + 3 - 1/2*x^-1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [k, c] = *it;
      bool negative = c.field().is_rational() && c.value() < 0;
      Scalar mag = negative ? -c : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string power = k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k);
      if (power.empty()) {
        out += mag.to_string();
      } else if (mag.is_one()) {
        out += power;
      } else {
        out += mag.to_string() + "*" + power;
      }
    }
    return out;
  }

 private:
  Field field_;
  std::map<std::int64_t, Scalar> terms_;
};

}  // namespace lpa
