#pragma once

// Test-only exact polynomial algebra in x (or z), independent of the library's
// recurrence machinery: basis polynomials come from explicit classical sums.

#include <stdexcept>
#include <vector>

#include "planar/combinatorics.hpp"
#include "planar/rational.hpp"
#include "planar/weight_family.hpp"

namespace oracle {

using planar::Rational;
using QPoly = std::vector<Rational>;  // index i = coefficient of x^i

inline void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline QPoly shift(const QPoly& a, int s) {
  QPoly r(static_cast<std::size_t>(s), Rational{});
  r.insert(r.end(), a.begin(), a.end());
  trim(r);
  return r;
}

inline Rational lead(const QPoly& p) { return p.empty() ? Rational{} : p.back(); }

// Coordinates of target in a triangular basis (basis[d] has degree d); throws if not representable.
inline std::vector<Rational> expand(QPoly target, const std::vector<QPoly>& basis) {
  trim(target);
  std::vector<Rational> out(basis.size());
  for (int d = static_cast<int>(target.size()) - 1; d >= 0; --d) {
    if (target[static_cast<std::size_t>(d)].is_zero()) continue;
    if (d >= static_cast<int>(basis.size())) throw std::runtime_error("basis too short");
    const QPoly& b = basis[static_cast<std::size_t>(d)];
    const Rational f = target[static_cast<std::size_t>(d)] / lead(b);
    out[static_cast<std::size_t>(d)] = f;
    for (std::size_t i = 0; i < b.size(); ++i) target[i] -= f * b[i];
  }
  return out;
}

// Physicists' Hermite H_k(x) = k! sum_m (-1)^m (2x)^{k-2m} / (m!(k-2m)!)
inline QPoly hermite_H(int k) {
  QPoly p(static_cast<std::size_t>(k) + 1);
  for (int m = 0; 2 * m <= k; ++m) {
    Rational c = planar::factorial(k) * planar::pow(Rational(2), k - 2 * m) /
                 (planar::factorial(m) * planar::factorial(k - 2 * m));
    p[static_cast<std::size_t>(k - 2 * m)] = m % 2 ? -c : c;
  }
  return p;
}

// L_k^nu(x) = sum_i (-1)^i binom(k+nu, k-i) x^i / i!
inline QPoly laguerre_L(int k, const Rational& nu) {
  QPoly p(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    Rational c = planar::binomial(Rational(k) + nu, k - i) / planar::factorial(i);
    p[static_cast<std::size_t>(i)] = i % 2 ? -c : c;
  }
  trim(p);
  return p;
}

// C_k^lam(x) = sum_m (-1)^m (lam)_{k-m} (2x)^{k-2m} / (m!(k-2m)!)
inline QPoly gegenbauer_C(int k, const Rational& lam) {
  QPoly p(static_cast<std::size_t>(k) + 1);
  for (int m = 0; 2 * m <= k; ++m) {
    Rational c = planar::pochhammer(lam, k - m) * planar::pow(Rational(2), k - 2 * m) /
                 (planar::factorial(m) * planar::factorial(k - 2 * m));
    p[static_cast<std::size_t>(k - 2 * m)] = m % 2 ? -c : c;
  }
  return p;
}

inline QPoly classical(const planar::WeightFamily& f, int k) {
  switch (f.kind()) {
    case planar::FamilyKind::hermite: return hermite_H(k);
    case planar::FamilyKind::laguerre: return laguerre_L(k, f.nu());
    case planar::FamilyKind::gegenbauer: return gegenbauer_C(k, Rational(1) + f.a());
  }
  return {};
}

// Monic planar polynomial p_k(z) at rational tau, from its definition via classical polynomials.
inline QPoly planar_poly(const planar::WeightFamily& f, int k, const Rational& tau) {
  QPoly p(static_cast<std::size_t>(k) + 1);
  switch (f.kind()) {
    case planar::FamilyKind::hermite:
      // (tau/2)^{k/2} H_k(z / sqrt(2 tau)): coefficient of z^{k-2m} is k!(-1)^m tau^m / (2^m m! (k-2m)!)
      for (int m = 0; 2 * m <= k; ++m) {
        Rational c = planar::factorial(k) * planar::pow(tau, m) /
                     (planar::pow(Rational(2), m) * planar::factorial(m) * planar::factorial(k - 2 * m));
        p[static_cast<std::size_t>(k - 2 * m)] = m % 2 ? -c : c;
      }
      break;
    case planar::FamilyKind::laguerre:
      // (-1)^k k! tau^k L_k(z / tau)
      for (int i = 0; i <= k; ++i) {
        Rational c = planar::factorial(k) * planar::pow(tau, k - i) * planar::binomial(Rational(k) + f.nu(), k - i) /
                     planar::factorial(i);
        p[static_cast<std::size_t>(i)] = (k + i) % 2 ? -c : c;
      }
      break;
    case planar::FamilyKind::gegenbauer: {
      // k!/(lam)_k (sqrt(tau)/2)^k C_k(z / sqrt(tau))
      const Rational lam = Rational(1) + f.a();
      for (int m = 0; 2 * m <= k; ++m) {
        Rational c = planar::factorial(k) / planar::pochhammer(lam, k) * planar::pochhammer(lam, k - m) *
                     planar::pow(tau, m) /
                     (planar::pow(Rational(4), m) * planar::factorial(m) * planar::factorial(k - 2 * m));
        p[static_cast<std::size_t>(k - 2 * m)] = m % 2 ? -c : c;
      }
      break;
    }
  }
  trim(p);
  return p;
}

}  // namespace oracle
