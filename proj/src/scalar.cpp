#include "planar/scalar.hpp"

#include <ostream>

#include "planar/errors.hpp"

namespace planar {

Scalar Scalar::parse(std::string_view text) {
  if (text.find('t') != std::string_view::npos) return Scalar(TauPoly::parse(text));
  return Scalar(Rational::parse(text));
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->is_zero();
  return std::get<TauPoly>(v_).is_zero();
}

Rational Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  const auto& p = std::get<TauPoly>(v_);
  if (!p.is_constant()) throw DomainError("symbolic value has no rational instantiation: " + p.to_string());
  return p.coeff(0);
}

TauPoly Scalar::poly() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return TauPoly(*r);
  return std::get<TauPoly>(v_);
}

Rational Scalar::substitute(const Rational& t) const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  return std::get<TauPoly>(v_).eval(t);
}

double Scalar::to_double() const { return rational().to_double(); }

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->to_string();
  return std::get<TauPoly>(v_).to_string();
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return Scalar(-*r);
  return Scalar(-std::get<TauPoly>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  auto* a = std::get_if<Rational>(&v_);
  const auto* b = std::get_if<Rational>(&o.v_);
  if (a && b) {
    *a += *b;
  } else {
    TauPoly p = poly();
    p += o.poly();
    v_ = std::move(p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  auto* a = std::get_if<Rational>(&v_);
  const auto* b = std::get_if<Rational>(&o.v_);
  if (a && b) {
    *a -= *b;
  } else {
    TauPoly p = poly();
    p -= o.poly();
    v_ = std::move(p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  auto* a = std::get_if<Rational>(&v_);
  const auto* b = std::get_if<Rational>(&o.v_);
  if (a && b) {
    *a *= *b;
  } else if (b) {
    std::get<TauPoly>(v_) *= *b;
  } else if (a) {
    v_ = std::get<TauPoly>(o.v_) * *a;
  } else {
    std::get<TauPoly>(v_) *= std::get<TauPoly>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (const auto* b = std::get_if<Rational>(&o.v_)) {
    if (auto* a = std::get_if<Rational>(&v_))
      *a /= *b;
    else
      std::get<TauPoly>(v_) *= b->inverse();
    return *this;
  }
  const auto& d = std::get<TauPoly>(o.v_);
  if (d.is_constant()) {
    const Rational inv = d.coeff(0).inverse();
    TauPoly p = poly();
    p *= inv;
    v_ = std::move(p);
    return *this;
  }
  v_ = taupoly_div_exact(poly(), d);
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* x = std::get_if<Rational>(&a.v_);
  const auto* y = std::get_if<Rational>(&b.v_);
  if (x && y) return *x == *y;
  return a.poly() == b.poly();
}

Scalar pow(const Scalar& base, int exponent) {
  if (!base.is_symbolic()) return Scalar(pow(base.rational(), exponent));
  if (exponent < 0) throw DomainError("negative power of a symbolic value");
  return Scalar(pow(base.poly(), exponent));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace planar
