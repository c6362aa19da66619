#pragma once

#include <cstddef>

#include "planar/rational.hpp"
#include "planar/scalar.hpp"

namespace planar {

// n! for n >= 0; DomainError for n < 0.
Rational factorial(int n);
// 1/n!, with 1/n! = 0 for n < 0.
Rational recip_factorial(int n);
// 0 when n < 0, k < 0 or k > n.
Rational binomial(int n, int k);
// Generalized binomial x(x-1)...(x-k+1)/k!; 0 for k < 0.
Rational binomial(const Rational& x, int k);
// n!! with 0!! = (-1)!! = 1; DomainError for n < -1.
Rational double_factorial(int n);
// (a)_k = a(a+1)...(a+k-1); DomainError for k < 0.
Rational pochhammer(const Rational& a, int k);
// Signed Stirling number of the first kind; 0 outside 0 <= k <= n.
Rational stirling_first(int n, int k);
Rational catalan(int p);
// sum_{k=1}^p binom(p,k) binom(p,k-1) y^k / p
Scalar narayana(int p, const Scalar& y);
Rational narayana(int p, const Rational& y);

// Factorials up to the cap are memoized; larger arguments are computed on demand.
void set_factorial_cache_cap(std::size_t cap);
std::size_t factorial_cache_cap();

}  // namespace planar
