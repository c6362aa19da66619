#include "planar/symplectic_moments.hpp"

#include <algorithm>

#include "planar/combinatorics.hpp"
#include "planar/complex_moments.hpp"
#include "planar/errors.hpp"

namespace planar {

namespace {

void check_indices(int p1, int p2, int N) {
  if (p1 < 0 || p2 < 0) throw DomainError("moment indices must be nonnegative");
  if (N < 1) throw DomainError("N must be at least 1");
}

// (2k)!!/(2j)!! = 2^{k-j} k!/j! for k >= j >= 0
Rational even_double_factorial_ratio(int k, int j) {
  return pow(Rational(2), k - j) * factorial(k) / factorial(j);
}

}  // namespace

SkewData::SkewData(WeightFamily family) : family_(std::move(family)), store_(std::make_shared<Store>()) {}

SkewData skew_data(const WeightFamily& f) { return SkewData(f); }

Scalar SkewData::d(int k) const {
  std::lock_guard lock(store_->mu);
  auto& d = store_->d;
  while (static_cast<int>(d.size()) <= k) {
    const int m = static_cast<int>(d.size());
    Scalar v = norm_ratio(family_, 2 * m + 1, 2 * m) - recurrence_coeffs(family_, 2 * m + 1).c;
    if (v.is_zero()) throw DomainError("skew norm vanishes (tau = 1 needs symbolic mode)");
    d.push_back(std::move(v));
  }
  return d[static_cast<std::size_t>(k)];
}

Scalar SkewData::lambda(int l) const {
  if (l < 0) throw DomainError("negative lambda index");
  {
    std::lock_guard lock(store_->mu);
    if (l < static_cast<int>(store_->lambda.size())) return store_->lambda[static_cast<std::size_t>(l)];
  }
  std::vector<Scalar> fresh;
  int start;
  {
    std::lock_guard lock(store_->mu);
    start = static_cast<int>(store_->lambda.size());
  }
  for (int m = start; m <= l; ++m) {
    const Scalar denom = d(m);
    const Scalar num =
        norm_ratio(family_, 2 * m + 2, 2 * m) - recurrence_coeffs(family_, 2 * m + 2).c * norm_ratio(family_, 2 * m + 1, 2 * m);
    fresh.push_back(num / denom);
  }
  std::lock_guard lock(store_->mu);
  auto& lam = store_->lambda;
  for (int m = start; m <= l; ++m)
    if (m == static_cast<int>(lam.size())) lam.push_back(fresh[static_cast<std::size_t>(m - start)]);
  return lam[static_cast<std::size_t>(l)];
}

Scalar SkewData::mu(int k, int j) const {
  if (j < 0 || j > k) throw DomainError("mu_{k,j} needs 0 <= j <= k");
  Scalar acc(1);
  for (int l = j; l < k; ++l) acc *= lambda(l);
  return acc;
}

Scalar SkewData::skew_norm_ratio(int n, int k) const {
  if (n < 0 || k < 0) throw DomainError("negative skew norm index");
  return d(n) / d(k) * norm_ratio(family_, 2 * n, 2 * k);
}

BCoeffTable::BCoeffTable(ACoeffTable A, SkewData S)
    : A_(std::move(A)), S_(std::move(S)), store_(std::make_shared<Store>()) {}

Scalar BCoeffTable::operator()(int p, int target, int source) const {
  if (target < 0) return Scalar(0);
  if (source < 0) throw DomainError("negative source index");
  const auto key = std::make_tuple(p, target, source);
  {
    std::lock_guard lock(store_->mu);
    auto it = store_->entries.find(key);
    if (it != store_->entries.end()) return it->second;
  }
  Scalar v = compute(p, target, source);
  std::lock_guard lock(store_->mu);
  return store_->entries.emplace(key, std::move(v)).first->second;
}

Scalar BCoeffTable::compute(int p, int target, int source) const {
  const int n = target / 2;
  const int k = source / 2;
  const bool t_odd = target % 2 != 0;
  const bool s_odd = source % 2 != 0;
  if (s_odd) {
    if (t_odd) return A_(p, target, source);
    const Scalar up = A_(p, 2 * n + 2, source);
    Scalar v = A_(p, 2 * n, source);
    if (!up.is_zero()) v -= S_.lambda(n) * up;
    return v;
  }
  // Only j with |2n - 2j| <= p + 2 can contribute.
  const int j_lo = std::max(0, n - p / 2 - 1);
  Scalar acc;
  for (int j = j_lo; j <= k; ++j) {
    Scalar a = A_(p, target, 2 * j);
    if (!t_odd) {
      const Scalar up = A_(p, 2 * n + 2, 2 * j);
      if (!up.is_zero()) a -= S_.lambda(n) * up;
    }
    if (a.is_zero()) continue;
    acc += S_.mu(k, j) * a;
  }
  return acc;
}

Scalar b_coeff(const BCoeffTable& B, int p, int target, int source) { return B(p, target, source); }

Scalar frak_m(const BCoeffTable& B, int p1, int p2, int k) {
  if (k < 0) throw DomainError("negative index");
  const SkewData& S = B.skew();
  const int w = std::max(p1, p2) / 2 + 1;
  Scalar acc;
  for (int n = std::max(0, k - w); n <= k + w; ++n) {
    Scalar t = B(p1, 2 * n + 1, 2 * k + 1) * B(p2, 2 * n, 2 * k);
    t += B(p1, 2 * n, 2 * k) * B(p2, 2 * n + 1, 2 * k + 1);
    t -= B(p1, 2 * n, 2 * k + 1) * B(p2, 2 * n + 1, 2 * k);
    t -= B(p1, 2 * n + 1, 2 * k) * B(p2, 2 * n, 2 * k + 1);
    if (t.is_zero()) continue;
    acc += S.skew_norm_ratio(n, k) * t;
  }
  return acc;
}

Scalar moment_symplectic(const BCoeffTable& B, int p1, int p2, int N) {
  check_indices(p1, p2, N);
  if (B.a_table().family().even_symmetric() && (p1 + p2) % 2 != 0) return Scalar(0);
  Scalar acc;
  for (int k = 0; k < N; ++k) acc += frak_m(B, p1, p2, k);
  return acc * Scalar(Rational(mpz_class(1), mpz_class(2)));
}

Scalar moment_symplectic_holomorphic(const BCoeffTable& B, int p, int N) {
  check_indices(p, 0, N);
  const ACoeffTable& A = B.a_table();
  Scalar corr;
  for (int j = std::max(0, N - p / 2); j < N; ++j) {
    const Scalar a = A(p, 2 * N, 2 * j);
    if (!a.is_zero()) corr += B.skew().mu(N, j) * a;
  }
  const Scalar half(Rational(mpz_class(1), mpz_class(2)));
  return half * (moment_complex_holomorphic(A, p, 2 * N) - corr);
}

Rational ginse_moment(int p1, int p2, int N) {
  check_indices(p1, p2, N);
  if (p1 < p2) std::swap(p1, p2);
  if ((p1 - p2) % 2 != 0) return Rational{};
  Rational acc;
  if (p1 == p2) {
    for (int k = 0; k < N; ++k) acc += factorial(2 * k + 1 + p1) / factorial(2 * k + 1);
    return acc;
  }
  // (2k)!!/(2k+2-p1+p2)!! vanishes once the lower argument drops below -1.
  for (int k = 0; k < N; ++k) {
    const int low = 2 * k + 2 - p1 + p2;
    if (low < 0) continue;
    acc += factorial(2 * k + 1 + p2) / factorial(2 * k + 1) * double_factorial(2 * k) / double_factorial(low);
  }
  return -Rational(p1) / Rational(2) * acc;
}

Rational gse_moment(int p, int N) {
  check_indices(p, 0, N);
  Rational corr;
  for (int r = 1; r <= std::min(p, N); ++r)
    for (int l = 0; l <= p; ++l)
      corr += even_double_factorial_ratio(N, N - r) * factorial(2 * p) * pow(Rational(2), -l) * recip_factorial(l) *
              recip_factorial(p - l + r) * binomial(2 * N - 2 * r, p - l - r);
  return (gue_moment(p, 2 * N) - corr) / Rational(2);
}

namespace {

Scalar eginse_recursive_impl(const ACoeffTable& A, int p1, int p2, int N, std::map<std::pair<int, int>, Scalar>& memo) {
  if (p1 + p2 == 0) return Scalar(N);
  if ((p1 + p2) % 2 != 0) return Scalar(0);
  auto it = memo.find({p1, p2});
  if (it != memo.end()) return it->second;
  const WeightFamily& f = A.family();
  const Scalar& tau = f.tau();
  const Rational total(p1 + p2);
  const Scalar half(Rational(mpz_class(1), mpz_class(2)));
  Scalar value = half * moment_complex(A, p1, p2, 2 * N);
  if (p1 > 0 && p2 > 0)
    value += (Scalar(1) - tau * tau) * Scalar(Rational(p1 * p2) / total) *
             eginse_recursive_impl(A, p1 - 1, p2 - 1, N, memo);
  const Scalar w1(Rational(p1) / total), w2(Rational(p2) / total);
  const int pm = std::max(p1, p2);
  Scalar corr;
  for (int k = 0; k < N; ++k) {
    const Rational dd = even_double_factorial_ratio(N, k);
    for (int n = std::max(0, 2 * N - pm); n <= 2 * N + pm; ++n) {
      Scalar t;
      if (p1 > 0) t += w1 * A(p1, n, 2 * k) * A(p2, n, 2 * N);
      if (p2 > 0) t += w2 * A(p1, n, 2 * N) * A(p2, n, 2 * k);
      if (t.is_zero()) continue;
      corr += Scalar(dd) * norm_ratio(f, n, 2 * N) * t;
    }
  }
  value -= half * corr;
  memo.emplace(std::make_pair(p1, p2), value);
  return value;
}

}  // namespace

Scalar eginse_recursive_moment(const ACoeffTable& A, int p1, int p2, int N) {
  check_indices(p1, p2, N);
  if (A.family().kind() != FamilyKind::hermite) throw DomainError("formula defined for the hermite family only");
  std::map<std::pair<int, int>, Scalar> memo;
  return eginse_recursive_impl(A, p1, p2, N, memo);
}

Scalar eginse_recursive_moment(int p1, int p2, int N, const Scalar& tau) {
  return eginse_recursive_moment(ACoeffTable(WeightFamily::hermite(tau)), p1, p2, N);
}

namespace {

// (2k+1-2r)! / (2k+1)!, zero for a negative numerator argument.
Rational falling_ratio(int top, int k) {
  if (top < 0) return Rational{};
  return factorial(top) / factorial(2 * k + 1);
}

// f_{k,s,l1,l2}(p1,p2) as a map tau-power -> rational coefficient, accumulated into acc.
void add_f(std::map<int, Rational>& acc, const Rational& weight, int k, int s, int l1, int l2, int p1, int p2) {
  const int base = (p1 + p2) / 2;
  if (p1 % 2 == 0) {
    const int h1 = p1 / 2, h2 = p2 / 2;
    for (int r = -h1 + l1; r <= h1 - l1; ++r) {
      const Rational a1 = binomial(2 * k + 1, h1 - l1 + r) * recip_factorial(h1 - l1 - r);
      if (a1.is_zero()) continue;
      const Rational t1 = falling_ratio(2 * k + 1 - 2 * r, k) * a1 * binomial(2 * k - 2 * s, h2 - l2 + r - s) *
                          recip_factorial(h2 - l2 + s - r);
      const Rational t2 = falling_ratio(2 * k + 2 - 2 * r, k) * a1 * binomial(2 * k - 2 * s, h2 - l2 + r - s - 1) *
                          recip_factorial(h2 - l2 + s - r + 1);
      if (!t1.is_zero()) acc[base + 2 * r - s] += weight * t1;
      if (!t2.is_zero()) acc[base + 2 * r - s - 1] -= weight * t2;
    }
    return;
  }
  const int u1 = (p1 + 1) / 2, d1 = (p1 - 1) / 2;
  const int u2 = (p2 + 1) / 2, d2 = (p2 - 1) / 2;
  for (int r = -u1 + l1; r <= u1 - l1; ++r) {
    const Rational a2 = binomial(2 * k - 2 * s, d2 - l2 + r - s) * recip_factorial(u2 - l2 + s - r);
    if (a2.is_zero()) continue;
    const Rational t1 = falling_ratio(2 * k + 1 - 2 * r, k) * binomial(2 * k + 1, u1 - l1 + r) *
                        recip_factorial(d1 - l1 - r) * a2;
    const Rational t2 = falling_ratio(2 * k + 2 - 2 * r, k) * binomial(2 * k + 1, d1 - l1 + r) *
                        recip_factorial(u1 - l1 - r) * a2;
    if (!t1.is_zero()) acc[base + 2 * r - s] -= weight * t1;
    if (!t2.is_zero()) acc[base + 2 * r - s - 1] += weight * t2;
  }
}

}  // namespace

Scalar eginse_appendixB_moment(int p1, int p2, int N, const Scalar& tau) {
  check_indices(p1, p2, N);
  if ((p1 + p2) % 2 != 0) return Scalar(0);
  std::map<int, Rational> by_power;
  for (int k = 0; k < N; ++k) {
    for (int s = 0; s <= std::min(k, (p1 + p2) / 2); ++s) {
      const Rational dd = even_double_factorial_ratio(k, k - s);
      for (int l1 = 0; l1 <= p1 / 2; ++l1) {
        for (int l2 = 0; l2 <= p2 / 2; ++l2) {
          const Rational w = dd * factorial(p1) * pow(Rational(2), -l1) * recip_factorial(l1) * factorial(p2) *
                             pow(Rational(2), -l2) * recip_factorial(l2);
          add_f(by_power, w, k, s, l1, l2, p1, p2);
          add_f(by_power, w, k, s, l2, l1, p2, p1);
        }
      }
    }
  }
  Scalar acc;
  for (const auto& [e, c] : by_power) {
    if (c.is_zero()) continue;
    if (e < 0) throw FormulaMismatch("negative tau power in the explicit symplectic sum");
    acc += pow(tau, e) * Scalar(c);
  }
  return acc * Scalar(Rational(mpz_class(1), mpz_class(2)));
}

Scalar eginse_appendixB_holomorphic(int p, int N, const Scalar& tau) {
  check_indices(p, 0, N);
  Scalar corr;
  for (int r = 1; r <= std::min(p, N); ++r) {
    Rational c;
    for (int l = 0; l <= p; ++l)
      c += even_double_factorial_ratio(N, N - r) * factorial(2 * p) * pow(Rational(2), -l) * recip_factorial(l) *
           recip_factorial(p - l + r) * binomial(2 * N - 2 * r, p - l - r);
    corr += pow(tau, p - r) * Scalar(c);
  }
  const Scalar half(Rational(mpz_class(1), mpz_class(2)));
  return half * (eginue_appendixB_holomorphic(p, 2 * N, tau) - corr);
}

}  // namespace planar
