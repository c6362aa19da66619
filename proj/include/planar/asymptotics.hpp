#pragma once

#include <functional>
#include <string>
#include <vector>

#include "planar/moments.hpp"

namespace planar {

// Leading coefficient of M^C / N^{(p1+p2)/2+1}; zero for odd p1 + p2.
Scalar c1(int p1, int p2, const Scalar& tau);
// Subleading coefficient of the complex elliptic Ginibre expansion.
Scalar c2(int p1, int p2, const Scalar& tau);
// Subleading coefficient of M^H / (2^{(p1+p2)/2} N^{(p1+p2)/2+1}); zero at p1 = p2 = 0.
Scalar c2_prime(int p1, int p2, const Scalar& tau);
// Leading coefficient of the Laguerre moments with nu/N -> alpha.
Scalar l1(int p1, int p2, const Scalar& tau, const Rational& alpha);
// Coefficient of N^{p+1-2g} in the GUE moment of index 2p.
Rational genus_coeff(int g, int p);
// (1/(1-tau^2)) integral over the ellipse of z^p1 zb^p2 dA, via Joukowsky coefficient extraction.
Scalar elliptic_law_moment(int p1, int p2, const Scalar& tau);

// Coefficients c_0..c_d of the degree-d polynomial through f(1..d+1); throws
// FormulaMismatch when it misses f(d+2).
std::vector<Scalar> interpolate_in_N(const std::function<Scalar(int)>& f, int degree);
// Hermite moments as polynomials in N; default degree (p1+p2)/2 + 1.
std::vector<Scalar> poly_in_N_extract(const MomentEngine& hermite, int p1, int p2, Component component,
                                      int max_degree = -1);

struct AsymptoticRow {
  int N = 0;
  double scaled = 0;     // M / (scale N^{d})
  double predicted = 0;  // c1 (+ c2/N for Hermite)
  double residual = 0;
};

struct AsymptoticReport {
  bool pass = false;
  std::string formula_pair;
  std::string detail;
  std::vector<AsymptoticRow> rows;
  double fitted_K = 0;  // Laguerre only
};

// Hermite: exact coefficients of N^{d} and N^{d-1} against c1 and c2 (complex) or
// c1 and c2' after 2^{(p1+p2)/2} scaling (symplectic); rows for N_list.
// Laguerre: |M/(scale N^{p1+p2+1}) - l1| <= 3K/N with K fitted over N_list,
// nu = round(alpha N) (complex) or round(2 alpha N) (symplectic).
AsymptoticReport asymptotic_check(FamilyKind kind, const Scalar& tau, const Rational& alpha, int p1, int p2,
                                  Component component, const std::vector<int>& N_list);

}  // namespace planar
