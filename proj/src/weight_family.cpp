#include "planar/weight_family.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <vector>

#include "planar/combinatorics.hpp"
#include "planar/errors.hpp"

namespace planar {

struct WeightFamily::Cache {
  std::mutex mu;
  std::vector<Rational> reversed;  // G_0, G_1, ...
};

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::hermite: return "hermite";
    case FamilyKind::laguerre: return "laguerre";
    case FamilyKind::gegenbauer: return "gegenbauer";
  }
  return "?";
}

FamilyKind parse_family(std::string_view name) {
  if (name == "hermite") return FamilyKind::hermite;
  if (name == "laguerre") return FamilyKind::laguerre;
  if (name == "gegenbauer") return FamilyKind::gegenbauer;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

namespace {

void check_tau(const Scalar& tau) {
  if (tau.is_symbolic()) {
    if (tau.poly() != TauPoly::variable()) throw DomainError("symbolic tau must be the variable t");
    return;
  }
  const Rational t = tau.rational();
  if (t.sign() < 0 || t > Rational(1)) throw DomainError("tau must lie in [0, 1], got " + t.to_string());
}

}  // namespace

WeightFamily::WeightFamily(FamilyKind kind, Scalar tau, Rational nu, Rational a)
    : kind_(kind), tau_(std::move(tau)), nu_(std::move(nu)), a_(std::move(a)), cache_(std::make_shared<Cache>()) {}

WeightFamily WeightFamily::hermite(Scalar tau) {
  check_tau(tau);
  return WeightFamily(FamilyKind::hermite, std::move(tau), Rational{}, Rational{});
}

WeightFamily WeightFamily::laguerre(Scalar tau, Rational nu) {
  check_tau(tau);
  if (nu <= Rational(-1)) throw DomainError("laguerre requires nu > -1, got " + nu.to_string());
  return WeightFamily(FamilyKind::laguerre, std::move(tau), std::move(nu), Rational{});
}

WeightFamily WeightFamily::gegenbauer(Rational tau, Rational a) {
  check_tau(Scalar(tau));
  if (a <= Rational(-1)) throw DomainError("gegenbauer requires a > -1, got " + a.to_string());
  return WeightFamily(FamilyKind::gegenbauer, Scalar(std::move(tau)), Rational{}, std::move(a));
}

WeightFamily WeightFamily::instantiate(const Rational& t) const {
  switch (kind_) {
    case FamilyKind::hermite: return hermite(Scalar(t));
    case FamilyKind::laguerre: return laguerre(Scalar(t), nu_);
    case FamilyKind::gegenbauer: return gegenbauer(t, a_);
  }
  throw DomainError("unreachable");
}

std::string WeightFamily::describe() const {
  std::ostringstream os;
  os << family_name(kind_) << "(tau=" << (symbolic() ? std::string("t") : tau_.to_string());
  if (kind_ == FamilyKind::laguerre) os << ", nu=" << nu_;
  if (kind_ == FamilyKind::gegenbauer) os << ", a=" << a_;
  os << ")";
  return os.str();
}

Rational WeightFamily::gegenbauer_reversed(int k) const {
  if (kind_ != FamilyKind::gegenbauer) throw DomainError("reversed Gegenbauer polynomial needs the gegenbauer family");
  if (k < 0) return Rational{};
  std::lock_guard lock(cache_->mu);
  auto& g = cache_->reversed;
  const Rational tau2 = tau_.rational() * tau_.rational();
  if (g.empty()) {
    g.emplace_back(1);
    g.push_back(Rational(2) * (Rational(1) + a_));
  }
  // (m+1) G_{m+1} = 2(m+1+a) G_m - (m+1+2a) tau^2 G_{m-1}
  while (static_cast<int>(g.size()) <= k) {
    const int m = static_cast<int>(g.size()) - 1;
    const Rational next = (Rational(2) * (Rational(m + 1) + a_) * g[static_cast<std::size_t>(m)] -
                           (Rational(m + 1) + Rational(2) * a_) * tau2 * g[static_cast<std::size_t>(m - 1)]) /
                          Rational(m + 1);
    g.push_back(next);
  }
  return g[static_cast<std::size_t>(k)];
}

RecurrenceCoeffs recurrence_coeffs(const WeightFamily& f, int k) {
  if (k < 0) throw DomainError("negative recurrence index");
  const Scalar& tau = f.tau();
  switch (f.kind()) {
    case FamilyKind::hermite:
      return {Scalar(0), tau * Scalar(k)};
    case FamilyKind::laguerre: {
      const Rational kr(k);
      return {tau * Scalar(Rational(2 * k + 1) + f.nu()), tau * tau * Scalar(kr * (kr + f.nu()))};
    }
    case FamilyKind::gegenbauer: {
      if (k == 0) return {Scalar(0), Scalar(0)};
      const Rational& a = f.a();
      const Rational kr(k);
      const Rational c = kr * (kr + 1 + Rational(2) * a) / (Rational(4) * (kr + a) * (kr + 1 + a));
      return {Scalar(0), tau * Scalar(c)};
    }
  }
  throw DomainError("unreachable");
}

namespace {

// h_k up to a k-independent factor, Gegenbauer family.
Rational gegenbauer_norm(const WeightFamily& f, int k) {
  const Rational& a = f.a();
  const Rational lam = Rational(1) + a;
  const Rational ratio = factorial(k) / pochhammer(lam, k);
  return lam / (Rational(k) + lam) * ratio * ratio * pow(Rational(4), -k) * f.gegenbauer_reversed(k);
}

// prod_{i=lo+1}^{hi} i (i + nu)
Rational laguerre_norm_span(const Rational& nu, int lo, int hi) {
  Rational acc(1);
  for (int i = lo + 1; i <= hi; ++i) acc *= Rational(i) * (Rational(i) + nu);
  return acc;
}

}  // namespace

Scalar norm_ratio(const WeightFamily& f, int j, int k) {
  if (j < 0 || k < 0) throw DomainError("negative norm index");
  switch (f.kind()) {
    case FamilyKind::hermite:
      return j >= k ? Scalar(pochhammer(Rational(k + 1), j - k)) : Scalar(pochhammer(Rational(j + 1), k - j).inverse());
    case FamilyKind::laguerre:
      return j >= k ? Scalar(laguerre_norm_span(f.nu(), k, j)) : Scalar(laguerre_norm_span(f.nu(), j, k).inverse());
    case FamilyKind::gegenbauer:
      return Scalar(gegenbauer_norm(f, j) / gegenbauer_norm(f, k));
  }
  throw DomainError("unreachable");
}

Scalar alpha_power(const WeightFamily& f, int e) {
  if (e < 0) throw DomainError("negative alpha power");
  if (f.kind() == FamilyKind::laguerre) return pow(f.tau(), e);
  if (e % 2 != 0) throw DomainError("odd power of sqrt(tau) is not rational");
  return pow(f.tau(), e / 2);
}

Rational inversion_coeff(const WeightFamily& f, int n, int idx) {
  if (n < 0) throw DomainError("negative inversion degree");
  if (idx < 0 || idx > n) return Rational{};
  switch (f.kind()) {
    case FamilyKind::hermite: {
      if ((n - idx) % 2 != 0) return Rational{};
      const int l = (n - idx) / 2;
      return factorial(n) * pow(Rational(2), -n) * recip_factorial(l) * recip_factorial(idx);
    }
    case FamilyKind::laguerre: {
      const int l = idx;
      const Rational sign = l % 2 == 0 ? Rational(1) : Rational(-1);
      return factorial(n) * sign * binomial(Rational(n) + f.nu(), n - l);
    }
    case FamilyKind::gegenbauer: {
      if ((n - idx) % 2 != 0) return Rational{};
      const int l = (n - idx) / 2;
      const Rational lam = Rational(1) + f.a();
      return factorial(n) * pow(Rational(2), -n) * (Rational(n - 2 * l) + lam) * recip_factorial(l) /
             pochhammer(lam, n + 1 - l);
    }
  }
  throw DomainError("unreachable");
}

Rational linearisation_coeff(const WeightFamily& f, int n, int m, int k) {
  if (n < 0 || m < 0 || k < 0) throw DomainError("negative linearisation degree");
  if (k > n + m) return Rational{};
  switch (f.kind()) {
    case FamilyKind::hermite: {
      if ((n + m - k) % 2 != 0) return Rational{};
      const int s = (n + m - k) / 2;
      return pow(Rational(2), s) * factorial(s) * binomial(n, s) * binomial(m, s);
    }
    case FamilyKind::laguerre: {
      const Rational& nu = f.nu();
      Rational acc;
      const int s_lo = std::max({n, m, k});
      const int s_hi = (n + m + k) / 2;
      for (int s = s_lo; s <= s_hi; ++s) {
        const int e = k + n + m - 2 * s;
        Rational term = pow(Rational(-2), e) * factorial(k) * pochhammer(Rational(k + 1) + nu, s - k);
        term *= recip_factorial(s - k) * recip_factorial(s - n) * recip_factorial(s - m) * recip_factorial(e);
        acc += term;
      }
      return acc;
    }
    case FamilyKind::gegenbauer: {
      if ((n + m - k) % 2 != 0) return Rational{};
      const int l = (n + m - k) / 2;
      if (l > std::min(n, m)) return Rational{};
      const Rational lam = Rational(1) + f.a();
      const Rational two_lam = Rational(2) * lam;
      Rational num = (Rational(n + m - 2 * l) + lam) * pochhammer(lam, l) * pochhammer(lam, n - l) *
                     pochhammer(lam, m - l) * pochhammer(two_lam, n + m - l) * factorial(n + m - 2 * l);
      Rational den = (Rational(n + m - l) + lam) * factorial(l) * factorial(n - l) * factorial(m - l) *
                     pochhammer(lam, n + m - l) * pochhammer(two_lam, n + m - 2 * l);
      return num / den;
    }
  }
  throw DomainError("unreachable");
}

namespace {

// P_k = scale_k Q_k(x / s) relates the monic basis P to the classical basis Q.
// Hermite: scale_k = 2^{-k/2}, s = sqrt 2; Laguerre: (-1)^k k!; Gegenbauer: k!/((1+a)_k 2^k).
Rational monic_scale(const WeightFamily& f, int k) {
  switch (f.kind()) {
    case FamilyKind::laguerre: return (k % 2 == 0 ? Rational(1) : Rational(-1)) * factorial(k);
    case FamilyKind::gegenbauer: return factorial(k) / (pochhammer(Rational(1) + f.a(), k) * pow(Rational(2), k));
    case FamilyKind::hermite: break;
  }
  throw DomainError("unreachable");
}

}  // namespace

Rational monic_inversion_coeff(const WeightFamily& f, int n, int idx) {
  const Rational a = inversion_coeff(f, n, idx);
  if (a.is_zero()) return a;
  if (f.kind() == FamilyKind::hermite) return a * pow(Rational(2), (n + idx) / 2);
  return a / monic_scale(f, idx);
}

Rational monic_linearisation_coeff(const WeightFamily& f, int n, int m, int k) {
  const Rational b = linearisation_coeff(f, n, m, k);
  if (b.is_zero()) return b;
  if (f.kind() == FamilyKind::hermite) return b * pow(Rational(2), (k - n - m) / 2);
  return b * monic_scale(f, n) * monic_scale(f, m) / monic_scale(f, k);
}

}  // namespace planar
