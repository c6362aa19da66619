#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "planar/rational.hpp"
#include "planar/scalar.hpp"

namespace planar {

enum class FamilyKind { hermite, laguerre, gegenbauer };

std::string_view family_name(FamilyKind kind);
FamilyKind parse_family(std::string_view name);

// Immutable parameter set of a planar weight. Copies share internal caches.
//   hermite:    tau (Rational or formal), alpha = sqrt(tau)
//   laguerre:   tau (Rational or formal), nu > -1, alpha = tau
//   gegenbauer: tau Rational only, a > -1, alpha = sqrt(tau)
// Rational tau lies in [0, 1]; tau = 1 is the Hermitian limit for exact formulas only.
class WeightFamily {
 public:
  static WeightFamily hermite(Scalar tau);
  static WeightFamily laguerre(Scalar tau, Rational nu);
  static WeightFamily gegenbauer(Rational tau, Rational a);

  FamilyKind kind() const { return kind_; }
  const Scalar& tau() const { return tau_; }
  const Rational& nu() const { return nu_; }
  const Rational& a() const { return a_; }
  bool symbolic() const { return tau_.is_symbolic(); }
  // Hermite and Gegenbauer weights are invariant under z -> -z.
  bool even_symmetric() const { return kind_ != FamilyKind::laguerre; }

  // Same family with tau := t.
  WeightFamily instantiate(const Rational& t) const;
  std::string describe() const;

  // G_k(tau) = tau^k C_k^(1+a)(1/tau), a polynomial in tau^2; memoized.
  Rational gegenbauer_reversed(int k) const;

 private:
  struct Cache;
  WeightFamily(FamilyKind kind, Scalar tau, Rational nu, Rational a);

  FamilyKind kind_;
  Scalar tau_;
  Rational nu_;
  Rational a_;
  std::shared_ptr<Cache> cache_;
};

struct RecurrenceCoeffs {
  Scalar b;
  Scalar c;
};

// z p_k = p_{k+1} + b_k p_k + c_k p_{k-1}
RecurrenceCoeffs recurrence_coeffs(const WeightFamily& f, int k);
// h_j / h_k
Scalar norm_ratio(const WeightFamily& f, int j, int k);
// alpha^e; for sqrt-type families e must be even.
Scalar alpha_power(const WeightFamily& f, int e);

// Classical bases: physicists' H_k; Laguerre L_k^nu; Gegenbauer C_k^(1+a).
// Coefficient of the degree-idx base polynomial in x^n.
Rational inversion_coeff(const WeightFamily& f, int n, int idx);
// Coefficient of the degree-k base polynomial in (base_n)(base_m).
Rational linearisation_coeff(const WeightFamily& f, int n, int m, int k);

// Same quantities for the monic real basis P_k with p_k(z) = alpha^k P_k(z / alpha).
Rational monic_inversion_coeff(const WeightFamily& f, int n, int idx);
Rational monic_linearisation_coeff(const WeightFamily& f, int n, int m, int k);

}  // namespace planar
