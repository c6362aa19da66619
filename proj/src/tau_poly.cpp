#include "planar/tau_poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "planar/errors.hpp"

namespace planar {

TauPoly::TauPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

TauPoly::TauPoly(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

TauPoly TauPoly::variable() { return monomial(Rational(1), 1); }

TauPoly TauPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw DomainError("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return TauPoly(std::move(v));
}

void TauPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational TauPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational{};
  return c_[static_cast<std::size_t>(i)];
}

Rational TauPoly::eval(const Rational& t) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double TauPoly::eval(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->to_double();
  return acc;
}

Rational TauPoly::coeff_sum() const {
  Rational acc;
  for (const auto& c : c_) acc += c;
  return acc;
}

std::string TauPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const Rational mag = neg ? -c : c;
    const bool unit = mag == Rational(1);
    if (i == 0) {
      out += mag.to_string();
      continue;
    }
    if (!unit) out += mag.to_string() + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

TauPoly TauPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto fail = [&] { return DomainError("malformed tau polynomial: '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();
  TauPoly out;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (!first) {
      throw fail();
    }
    first = false;
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    Rational coef(1);
    const bool has_num = j > i;
    if (has_num) coef = Rational::parse(std::string_view(s).substr(i, j - i));
    i = j;
    int deg = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_num) throw fail();
      ++i;
      if (i >= s.size() || s[i] != 't') throw fail();
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) throw fail();
        deg = std::stoi(s.substr(i, k - i));
        i = k;
      }
    } else if (!has_num) {
      throw fail();
    }
    out += monomial(neg ? -coef : coef, deg);
  }
  return out;
}

TauPoly TauPoly::operator-() const {
  TauPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TauPoly& TauPoly::operator+=(const TauPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

TauPoly& TauPoly::operator-=(const TauPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

TauPoly operator*(const TauPoly& a, const TauPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].get() * b.c_[j].get();
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& q : acc) out.emplace_back(q);
  return TauPoly(std::move(out));
}

TauPoly& TauPoly::operator*=(const TauPoly& o) { return *this = *this * o; }

TauPoly& TauPoly::operator*=(const Rational& r) {
  if (r.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= r;
  return *this;
}

TauPoly::DivMod TauPoly::divmod(const TauPoly& num, const TauPoly& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem(num.c_.begin(), num.c_.end());
  const int dd = den.degree();
  const Rational lead_inv = den.c_.back().inverse();
  const int qd = num.degree() - dd;
  std::vector<Rational> q(qd >= 0 ? static_cast<std::size_t>(qd) + 1 : 0);
  for (int i = qd; i >= 0; --i) {
    const Rational f = rem[static_cast<std::size_t>(i + dd)] * lead_inv;
    q[static_cast<std::size_t>(i)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i + j)] -= f * den.c_[static_cast<std::size_t>(j)];
  }
  return {TauPoly(std::move(q)), TauPoly(std::move(rem))};
}

TauPoly taupoly_div_exact(const TauPoly& num, const TauPoly& den) {
  auto [q, r] = TauPoly::divmod(num, den);
  if (!r.is_zero())
    throw InexactDivision("inexact polynomial division: (" + num.to_string() + ") / (" +
                          den.to_string() + ") leaves " + r.to_string());
  return q;
}

TauPoly pow(const TauPoly& base, int exponent) {
  if (exponent < 0) throw DomainError("negative polynomial power");
  TauPoly result(Rational(1));
  TauPoly b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const TauPoly& p) { return os << p.to_string(); }

}  // namespace planar
