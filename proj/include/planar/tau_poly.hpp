#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "planar/rational.hpp"

namespace planar {

// Dense univariate polynomial in the formal variable t with Rational coefficients.
// Invariant: coeffs are trimmed, so the zero polynomial has no coefficients.
class TauPoly {
 public:
  TauPoly() = default;
  explicit TauPoly(std::vector<Rational> coeffs);
  TauPoly(const Rational& constant);

  static TauPoly variable();
  static TauPoly monomial(const Rational& c, int degree);

  // Parses the printed form, e.g. "1/3 + 4/3*t^2 - t^4"; bare "t" terms are accepted.
  static TauPoly parse(std::string_view text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int i) const;
  std::span<const Rational> coeffs() const { return c_; }

  Rational eval(const Rational& t) const;
  double eval(double t) const;
  // Sum of coefficients, i.e. eval at t = 1.
  Rational coeff_sum() const;
  std::string to_string() const;

  TauPoly operator-() const;
  TauPoly& operator+=(const TauPoly& o);
  TauPoly& operator-=(const TauPoly& o);
  TauPoly& operator*=(const TauPoly& o);
  TauPoly& operator*=(const Rational& r);

  friend TauPoly operator+(TauPoly a, const TauPoly& b) { return a += b; }
  friend TauPoly operator-(TauPoly a, const TauPoly& b) { return a -= b; }
  friend TauPoly operator*(const TauPoly& a, const TauPoly& b);
  friend TauPoly operator*(TauPoly a, const Rational& r) { return a *= r; }
  friend TauPoly operator*(const Rational& r, TauPoly a) { return a *= r; }
  friend bool operator==(const TauPoly& a, const TauPoly& b) { return a.c_ == b.c_; }

  struct DivMod;
  static DivMod divmod(const TauPoly& num, const TauPoly& den);

 private:
  void trim();
  std::vector<Rational> c_;
};

struct TauPoly::DivMod {
  TauPoly quotient;
  TauPoly remainder;
};

// num = q * den exactly; throws InexactDivision on a nonzero remainder, DomainError on den = 0.
TauPoly taupoly_div_exact(const TauPoly& num, const TauPoly& den);
TauPoly pow(const TauPoly& base, int exponent);
std::ostream& operator<<(std::ostream& os, const TauPoly& p);

}  // namespace planar
