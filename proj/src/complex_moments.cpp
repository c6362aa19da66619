#include "planar/complex_moments.hpp"

#include <algorithm>

#include "planar/combinatorics.hpp"
#include "planar/errors.hpp"

namespace planar {

namespace {

void check_indices(int p1, int p2, int N) {
  if (p1 < 0 || p2 < 0) throw DomainError("moment indices must be nonnegative");
  if (N < 1) throw DomainError("N must be at least 1");
}

const WeightFamily& require_hermite(const ACoeffTable& A) {
  if (A.family().kind() != FamilyKind::hermite) throw DomainError("formula defined for the hermite family only");
  return A.family();
}

}  // namespace

Scalar moment_complex(const ACoeffTable& A, int p1, int p2, int N) {
  check_indices(p1, p2, N);
  const WeightFamily& f = A.family();
  if (f.even_symmetric() && (p1 + p2) % 2 != 0) return Scalar(0);
  if (p2 == 0) return moment_complex_holomorphic(A, p1, N);
  if (p1 == 0) return moment_complex_holomorphic(A, p2, N);
  const int m = std::min(p1, p2);
  Scalar acc;
  for (int k = 0; k < N; ++k) {
    for (int j = std::max(0, k - m); j <= k + m; ++j) {
      const Scalar a1 = A(p1, j, k);
      if (a1.is_zero()) continue;
      const Scalar a2 = A(p2, j, k);
      if (a2.is_zero()) continue;
      acc += norm_ratio(f, j, k) * a1 * a2;
    }
  }
  return acc;
}

Scalar moment_complex_holomorphic(const ACoeffTable& A, int p, int N) {
  check_indices(p, 0, N);
  Scalar acc;
  for (int k = 0; k < N; ++k) acc += A(p, k, k);
  return acc;
}

Scalar hermitian_unitary_moment(const ACoeffTable& A, int p, int N) {
  check_indices(p, 0, N);
  const WeightFamily& f = A.family();
  if (f.even_symmetric() && p % 2 != 0) return Scalar(0);
  const Scalar scale = alpha_power(f, p);
  if (scale.is_zero()) throw DomainError("alpha^p vanishes at tau = 0");
  return moment_complex_holomorphic(A, p, N) / scale;
}

Rational ginue_moment(int p1, int p2, int N) {
  check_indices(p1, p2, N);
  if (p1 != p2) return Rational{};
  return factorial(N + p1) / (factorial(N - 1) * Rational(p1 + 1));
}

Rational gue_moment(int p, int N) {
  check_indices(p, 0, N);
  Rational acc;
  for (int l = 0; l <= p; ++l)
    acc += factorial(2 * p) * pow(Rational(2), -l) * recip_factorial(l) * recip_factorial(p - l) * binomial(N, p - l + 1);
  return acc;
}

Scalar eginue_cd_moment(const ACoeffTable& A, int p1, int p2, int N) {
  check_indices(p1, p2, N);
  const WeightFamily& f = require_hermite(A);
  const Scalar& tau = f.tau();
  Scalar bracket;
  for (int n = std::max(0, N - 2 - p1); n <= N + p1 + 1; ++n) {
    const Scalar w = norm_ratio(f, n, N - 1);
    const Scalar first = A(p1 + 1, n, N - 1) * A(p2, n, N);
    const Scalar second = A(p1 + 1, n, N) * A(p2, n, N - 1);
    if (first.is_zero() && second.is_zero()) continue;
    bracket += w * (first - tau * second);
  }
  const Scalar denom = (Scalar(1) - tau * tau) * Scalar(p1 + 1);
  if (denom.is_zero()) throw DomainError("1 - tau^2 vanishes; use symbolic tau for the Hermitian limit");
  return bracket / denom;
}

Scalar eginue_cd_moment(int p1, int p2, int N, const Scalar& tau) {
  return eginue_cd_moment(ACoeffTable(WeightFamily::hermite(tau)), p1, p2, N);
}

Scalar eginue_appendixB_moment(int p1, int p2, int N, const Scalar& tau) {
  check_indices(p1, p2, N);
  if ((p1 + p2) % 2 != 0) return Scalar(0);
  const int m = std::min(p1, p2);
  Scalar acc;
  for (int r = -m; r <= m; r += 2) {
    // tau^{(p1+p2)/2 + r} times a rational sum over k, l1, l2
    Rational sum;
    for (int k = std::max(0, r); k < N; ++k) {
      const Rational ratio = factorial(k - r) / factorial(k);
      Rational s1, s2;
      for (int l1 = 0; l1 <= p1 / 2; ++l1)
        s1 += factorial(p1) * pow(Rational(2), -l1) * recip_factorial(l1) * recip_factorial((p1 - r) / 2 - l1) *
              binomial(k, (p1 + r) / 2 - l1);
      for (int l2 = 0; l2 <= p2 / 2; ++l2)
        s2 += factorial(p2) * pow(Rational(2), -l2) * recip_factorial(l2) * recip_factorial((p2 - r) / 2 - l2) *
              binomial(k, (p2 + r) / 2 - l2);
      sum += ratio * s1 * s2;
    }
    acc += pow(tau, (p1 + p2) / 2 + r) * Scalar(sum);
  }
  return acc;
}

Scalar eginue_appendixB_holomorphic(int p, int N, const Scalar& tau) {
  check_indices(p, 0, N);
  Rational sum;
  for (int k = 0; k < N; ++k)
    for (int l = 0; l <= p; ++l) sum += pow(Rational(2), l) * binomial(p, l) * binomial(k, l);
  return pow(tau, p) * Scalar(double_factorial(2 * p - 1) * sum);
}

}  // namespace planar
