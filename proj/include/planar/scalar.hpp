#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "planar/rational.hpp"
#include "planar/tau_poly.hpp"

namespace planar {

// Coefficient field of every exact formula: tau either instantiated (Rational) or formal (TauPoly).
// Mixed operations promote to TauPoly; a symbolic value stays symbolic even when constant.
class Scalar {
 public:
  Scalar() : v_(Rational{}) {}
  template <std::integral I>
  Scalar(I v) : v_(Rational(v)) {}
  Scalar(const Rational& r) : v_(r) {}
  Scalar(const TauPoly& p) : v_(p) {}

  // Text containing 't' parses as TauPoly, otherwise as Rational.
  static Scalar parse(std::string_view text);

  bool is_symbolic() const { return std::holds_alternative<TauPoly>(v_); }
  bool is_zero() const;
  // Rational value; throws DomainError when symbolic and non-constant.
  Rational rational() const;
  TauPoly poly() const;
  // tau := t
  Rational substitute(const Rational& t) const;
  double to_double() const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  // Divisor must be a nonzero Rational, a nonzero constant, or an exact TauPoly divisor.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, TauPoly> v_;
};

Scalar pow(const Scalar& base, int exponent);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace planar
