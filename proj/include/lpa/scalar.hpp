#pragma once

// Exact field elements: the rationals (default) or a prime field F_p.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>

#include "lpa/error.hpp"

namespace lpa {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Field {
 public:
  static Field rationals() { return Field(0); }

  static Field prime(std::uint64_t p) {
    if (p < 2 || p > (std::uint64_t{1} << 31)) throw PreconditionError("prime field modulus out of range");
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw PreconditionError(std::to_string(p) + " is not prime");
    }
    return Field(p);
  }

  // "q" or "fp:<p>"
  static Field parse(std::string const& spec) {
    if (spec == "q" || spec == "Q") return rationals();
    if (spec.rfind("fp:", 0) == 0) {
      try {
        return prime(std::stoull(spec.substr(3)));
      } catch (std::logic_error const&) {
        throw PreconditionError("bad field specification '" + spec + "'");
      }
    }
    throw PreconditionError("bad field specification '" + spec + "'");
  }

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::string to_string() const { return is_rational() ? "q" : "fp:" + std::to_string(modulus_); }

  friend bool operator==(Field const&, Field const&) = default;

 private:
  explicit Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_;
};

class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(Field f, Rational value) : field_(f) { assign(std::move(value)); }
  Scalar(Field f, long long value) : Scalar(f, Rational(value)) {}

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  Field field() const noexcept { return field_; }
  bool is_zero() const { return field_.is_rational() ? value_ == 0 : residue_ == 0; }
  bool is_one() const { return field_.is_rational() ? value_ == 1 : residue_ == 1; }

  // Exact value; in F_p the canonical representative in [0, p).
  Rational value() const { return field_.is_rational() ? value_ : Rational(residue_); }

  Scalar operator-() const { return Scalar(field_, -value()); }

  friend Scalar operator+(Scalar const& a, Scalar const& b) {
    check(a, b);
    if (a.field_.is_rational()) return Scalar(a.field_, a.value_ + b.value_);
    return from_residue(a.field_, (a.residue_ + b.residue_) % a.field_.modulus());
  }
  friend Scalar operator-(Scalar const& a, Scalar const& b) { return a + (-b); }
  friend Scalar operator*(Scalar const& a, Scalar const& b) {
    check(a, b);
    if (a.field_.is_rational()) return Scalar(a.field_, a.value_ * b.value_);
    return from_residue(a.field_, (a.residue_ * b.residue_) % a.field_.modulus());
  }
  friend Scalar operator/(Scalar const& a, Scalar const& b) { return a * b.inverse(); }

  Scalar& operator+=(Scalar const& b) { return *this = *this + b; }
  Scalar& operator-=(Scalar const& b) { return *this = *this - b; }
  Scalar& operator*=(Scalar const& b) { return *this = *this * b; }

  Scalar inverse() const {
    if (is_zero()) throw PreconditionError("division by zero");
    if (field_.is_rational()) return Scalar(field_, Rational(1) / value_);
    // Fermat: a^(p-2)
    std::uint64_t p = field_.modulus();
    std::uint64_t result = 1, base = residue_, exp = p - 2;
    while (exp > 0) {
      if (exp & 1U) result = result * base % p;
      base = base * base % p;
      exp >>= 1U;
    }
    return from_residue(field_, result);
  }

  std::string to_string() const {
    if (!field_.is_rational()) return std::to_string(residue_);
    return value_.str();
  }

  friend bool operator==(Scalar const& a, Scalar const& b) {
    return a.field_ == b.field_ && (a.field_.is_rational() ? a.value_ == b.value_ : a.residue_ == b.residue_);
  }

 private:
  static void check(Scalar const& a, Scalar const& b) {
    if (!(a.field_ == b.field_)) throw PreconditionError("scalars from different fields");
  }

  static Scalar from_residue(Field f, std::uint64_t r) {
    Scalar s;
    s.field_ = f;
    s.residue_ = r;
    return s;
  }

  void assign(Rational v) {
    if (field_.is_rational()) {
      value_ = std::move(v);
      return;
    }
    Integer p = field_.modulus();
    Integer num = boost::multiprecision::numerator(v) % p;
    Integer den = boost::multiprecision::denominator(v) % p;
    if (num < 0) num += p;
    if (den == 0) throw PreconditionError("denominator vanishes in " + field_.to_string());
    residue_ = static_cast<std::uint64_t>(num);
    auto d = from_residue(field_, static_cast<std::uint64_t>(den)).inverse();
    residue_ = residue_ * d.residue_ % field_.modulus();
  }

  Field field_ = Field::rationals();
  Rational value_ = 0;
  std::uint64_t residue_ = 0;
};

}  // namespace lpa
