#include "planar/a_coeff.hpp"

#include <algorithm>
#include <cstdlib>

#include "planar/combinatorics.hpp"
#include "planar/errors.hpp"

namespace planar {

namespace {

bool outside_support(const WeightFamily& f, int p, int j, int k) {
  if (j < 0 || std::abs(j - k) > p) return true;
  return f.even_symmetric() && (p + k - j) % 2 != 0;
}

Scalar hermite_explicit(const WeightFamily& f, int p, int j, int k) {
  const int e = (p + k - j) / 2;
  Rational acc;
  for (int l = 0; l <= p / 2; ++l)
    acc += factorial(p) * pow(Rational(2), -l) * recip_factorial(l) * recip_factorial((p - k + j) / 2 - l) *
           binomial(k, e - l);
  return pow(f.tau(), e) * Scalar(acc);
}

Scalar laguerre_explicit(const WeightFamily& f, int p, int j, int k) {
  const Rational& nu = f.nu();
  Rational acc;
  for (int l = 0; l <= p; ++l) {
    // p!/(p-l)! * Gamma(p+nu+1)/Gamma(l+nu+1) * k!
    const Rational outer = factorial(p) * recip_factorial(p - l) * pochhammer(Rational(l + 1) + nu, p - l) * factorial(k);
    Rational inner;
    const int s_lo = std::max({j, k, l});
    for (int s = s_lo; 2 * s <= j + k + l; ++s) {
      // Gamma(s+nu+1)/Gamma(j+nu+1) with s >= j
      inner += pochhammer(Rational(j + 1) + nu, s - j) * pow(Rational(2), j + k + l - 2 * s) * recip_factorial(s - j) *
               recip_factorial(s - k) * recip_factorial(s - l) * recip_factorial(j + k + l - 2 * s);
    }
    acc += outer * inner;
  }
  return pow(f.tau(), p + k - j) * Scalar(acc);
}

Scalar gegenbauer_explicit(const WeightFamily& f, int p, int j, int k) {
  const Rational a1 = Rational(1) + f.a();
  const Rational a2 = Rational(2) * a1;
  const Rational front = factorial(k) * pow(Rational(2), j - k) * pochhammer(a1, j) / pochhammer(a1, k) *
                         factorial(p) * pow(Rational(2), -p);
  Rational acc;
  for (int l = 0; l <= p / 2; ++l) {
    const int u = (k + p - 2 * l - j) / 2;
    const int v = (j + p - 2 * l - k) / 2;
    const int w = (j + k - p + 2 * l) / 2;
    const int t = (j + k + p - 2 * l) / 2;
    if (u < 0 || v < 0 || w < 0) continue;
    Rational term = (Rational(p - 2 * l) + a1) * recip_factorial(l) / pochhammer(a1, p + 1 - l);
    term *= (Rational(j) + a1) / (Rational(t) + a1);
    term *= pochhammer(a1, u) * pochhammer(a1, v) * pochhammer(a1, w) * pochhammer(a2, t);
    term *= recip_factorial(u) * recip_factorial(v) * recip_factorial(w);
    term /= pochhammer(a1, t) * pochhammer(a2, j);
    acc += term;
  }
  return pow(f.tau(), (p + k - j) / 2) * Scalar(front * acc);
}

Scalar explicit_entry(const WeightFamily& f, int p, int j, int k) {
  switch (f.kind()) {
    case FamilyKind::hermite: return hermite_explicit(f, p, j, k);
    case FamilyKind::laguerre: return laguerre_explicit(f, p, j, k);
    case FamilyKind::gegenbauer: return gegenbauer_explicit(f, p, j, k);
  }
  throw DomainError("unreachable");
}

// alpha^{p+k-j} sum_l a_{p,l} b_{l,k,j} in the monic real basis.
Scalar scaling_entry(const WeightFamily& f, int p, int j, int k) {
  Rational acc;
  for (int l = std::max(j - k, 0); l <= p; ++l) {
    const Rational a = monic_inversion_coeff(f, p, l);
    if (a.is_zero()) continue;
    acc += a * monic_linearisation_coeff(f, l, k, j);
  }
  return alpha_power(f, p + k - j) * Scalar(acc);
}

}  // namespace

ACoeffTable::ACoeffTable(WeightFamily family, AMethod method)
    : family_(std::move(family)), method_(method), store_(std::make_shared<Store>()) {}

Scalar ACoeffTable::operator()(int p, int j, int k) const {
  if (p < 0 || k < 0) throw DomainError("A-coefficient needs p, k >= 0");
  if (outside_support(family_, p, j, k)) return Scalar(0);
  const auto col = column(p, k);
  return col->v[static_cast<std::size_t>(j - col->lo)];
}

std::shared_ptr<const ACoeffTable::Column> ACoeffTable::column(int p, int k) const {
  const auto key = std::make_pair(p, k);
  {
    std::lock_guard lock(store_->mu);
    auto it = store_->columns.find(key);
    if (it != store_->columns.end()) return it->second;
  }
  auto built = build(p, k);
  std::lock_guard lock(store_->mu);
  return store_->columns.emplace(key, std::move(built)).first->second;
}

std::shared_ptr<const ACoeffTable::Column> ACoeffTable::build(int p, int k) const {
  auto col = std::make_shared<Column>();
  col->lo = k - p;
  col->v.assign(static_cast<std::size_t>(2 * p + 1), Scalar(0));
  auto at = [&](int j) -> Scalar& { return col->v[static_cast<std::size_t>(j - col->lo)]; };
  if (p == 0) {
    at(k) = Scalar(1);
    return col;
  }
  if (method_ == AMethod::recursive) {
    // z p_m = p_{m+1} + b_m p_m + c_m p_{m-1}, applied to column k of A^{p-1}
    const auto prev = column(p - 1, k);
    auto prev_at = [&](int j) -> Scalar {
      const int idx = j - prev->lo;
      if (idx < 0 || idx >= static_cast<int>(prev->v.size())) return Scalar(0);
      return prev->v[static_cast<std::size_t>(idx)];
    };
    for (int j = std::max(0, k - p); j <= k + p; ++j) {
      Scalar v = prev_at(j - 1);
      const auto rj = recurrence_coeffs(family_, j);
      if (!rj.b.is_zero()) v += rj.b * prev_at(j);
      const Scalar up = prev_at(j + 1);
      if (!up.is_zero()) v += recurrence_coeffs(family_, j + 1).c * up;
      at(j) = std::move(v);
    }
    return col;
  }
  for (int j = std::max(0, k - p); j <= k + p; ++j) {
    if (outside_support(family_, p, j, k)) continue;
    at(j) = method_ == AMethod::explicit_formula ? explicit_entry(family_, p, j, k) : scaling_entry(family_, p, j, k);
  }
  return col;
}

Scalar a_coeff(const WeightFamily& f, int p, int j, int k, AMethod method) {
  if (p < 0 || k < 0) throw DomainError("A-coefficient needs p, k >= 0");
  if (outside_support(f, p, j, k)) return Scalar(0);
  if (p == 0) return Scalar(1);
  switch (method) {
    case AMethod::recursive: return ACoeffTable(f, AMethod::recursive)(p, j, k);
    case AMethod::explicit_formula: return explicit_entry(f, p, j, k);
    case AMethod::scaling: return scaling_entry(f, p, j, k);
  }
  throw DomainError("unreachable");
}

}  // namespace planar
