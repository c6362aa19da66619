#include "planar/combinatorics.hpp"

#include <mutex>
#include <vector>

#include "planar/errors.hpp"

namespace planar {

namespace {

struct FactorialCache {
  std::mutex mu;
  std::size_t cap = 4096;
  std::vector<mpz_class> table{mpz_class(1)};
};

FactorialCache& cache() {
  static FactorialCache c;
  return c;
}

mpz_class factorial_z(int n) {
  auto& c = cache();
  {
    std::lock_guard lock(c.mu);
    const auto un = static_cast<std::size_t>(n);
    if (un < c.table.size()) return c.table[un];
    if (un < c.cap) {
      while (c.table.size() <= un) c.table.push_back(c.table.back() * static_cast<unsigned long>(c.table.size()));
      return c.table[un];
    }
  }
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

struct StirlingCache {
  std::mutex mu;
  // rows[n][k] = s(n, k)
  std::vector<std::vector<mpz_class>> rows{{mpz_class(1)}};
};

}  // namespace

void set_factorial_cache_cap(std::size_t cap) {
  auto& c = cache();
  std::lock_guard lock(c.mu);
  c.cap = cap;
}

std::size_t factorial_cache_cap() {
  auto& c = cache();
  std::lock_guard lock(c.mu);
  return c.cap;
}

Rational factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  return Rational(factorial_z(n));
}

Rational recip_factorial(int n) {
  if (n < 0) return Rational{};
  return Rational(mpz_class(1), factorial_z(n));
}

Rational binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Rational{};
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational binomial(const Rational& x, int k) {
  if (k < 0) return Rational{};
  if (x.is_integer() && x.sign() >= 0 && mpz_fits_sint_p(x.get().get_num_mpz_t()))
    return binomial(static_cast<int>(x.get().get_num().get_si()), k);
  mpq_class acc(1);
  for (int i = 0; i < k; ++i) acc *= x.get() - i;
  acc /= factorial_z(k);
  return Rational(acc);
}

Rational double_factorial(int n) {
  if (n < -1) throw DomainError("double factorial below -1");
  if (n <= 0) return Rational(1);
  mpz_class r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational pochhammer(const Rational& a, int k) {
  if (k < 0) throw DomainError("pochhammer with negative length");
  mpq_class acc(1);
  for (int i = 0; i < k; ++i) acc *= a.get() + i;
  return Rational(acc);
}

Rational stirling_first(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Rational{};
  static StirlingCache sc;
  std::lock_guard lock(sc.mu);
  auto& rows = sc.rows;
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    const long m = static_cast<long>(rows.size()) - 1;
    std::vector<mpz_class> next(prev.size() + 1);
    // s(m+1, j) = s(m, j-1) - m s(m, j)
    for (std::size_t j = 0; j < next.size(); ++j) {
      mpz_class v;
      if (j >= 1) v += prev[j - 1];
      if (j < prev.size()) v -= m * prev[j];
      next[j] = v;
    }
    rows.push_back(std::move(next));
  }
  return Rational(rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
}

Rational catalan(int p) {
  if (p < 0) throw DomainError("catalan of negative index");
  return binomial(2 * p, p) / Rational(p + 1);
}

Scalar narayana(int p, const Scalar& y) {
  if (p < 1) throw DomainError("narayana requires p >= 1");
  Scalar acc;
  Scalar yk = y;
  for (int k = 1; k <= p; ++k) {
    acc += Scalar(binomial(p, k) * binomial(p, k - 1) / Rational(p)) * yk;
    yk *= y;
  }
  return acc;
}

Rational narayana(int p, const Rational& y) { return narayana(p, Scalar(y)).rational(); }

}  // namespace planar
