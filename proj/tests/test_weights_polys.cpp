#include <doctest.h>

#include <cmath>
#include <vector>

#include "planar/a_coeff.hpp"
#include "planar/combinatorics.hpp"
#include "planar/errors.hpp"
#include "support/poly_oracle.hpp"

using namespace planar;

namespace {

Rational q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }
const Scalar tsym{TauPoly::variable()};

std::vector<WeightFamily> rational_grid() {
  std::vector<WeightFamily> out;
  for (const Rational& t : {q(0), q(1, 3), q(1)}) out.push_back(WeightFamily::hermite(Scalar(t)));
  for (const Rational& t : {q(0), q(1, 2)})
    for (const Rational& nu : {q(0), q(1, 2), q(2)}) out.push_back(WeightFamily::laguerre(Scalar(t), nu));
  for (const Rational& t : {q(0), q(1, 2)})
    for (const Rational& a : {q(0), q(1, 2)}) out.push_back(WeightFamily::gegenbauer(t, a));
  return out;
}

std::vector<oracle::QPoly> planar_basis(const WeightFamily& f, int n, const Rational& tau) {
  std::vector<oracle::QPoly> basis;
  for (int k = 0; k <= n; ++k) basis.push_back(oracle::planar_poly(f, k, tau));
  return basis;
}

}  // namespace

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(WeightFamily::hermite(Scalar(q(-1, 2))), DomainError);
  CHECK_THROWS_AS(WeightFamily::hermite(Scalar(q(3, 2))), DomainError);
  CHECK_THROWS_AS(WeightFamily::laguerre(Scalar(q(1, 2)), q(-1)), DomainError);
  CHECK_THROWS_AS(WeightFamily::gegenbauer(q(1, 2), q(-3, 2)), DomainError);
  CHECK_NOTHROW(WeightFamily::hermite(Scalar(q(1))));
  CHECK_NOTHROW(WeightFamily::laguerre(tsym, q(1, 2)));
  CHECK(parse_family("laguerre") == FamilyKind::laguerre);
  CHECK_THROWS_AS(parse_family("jacobi"), DomainError);
}

TEST_CASE("recurrence coefficients") {
  const auto h = WeightFamily::hermite(tsym);
  auto r = recurrence_coeffs(h, 3);
  CHECK(r.b.is_zero());
  CHECK(r.c == Scalar(3) * tsym);
  const auto l = WeightFamily::laguerre(tsym, q(1, 2));
  r = recurrence_coeffs(l, 0);
  CHECK(r.b == Scalar(q(3, 2)) * tsym);
  CHECK(r.c.is_zero());
  const auto g = WeightFamily::gegenbauer(q(1, 2), q(0));
  r = recurrence_coeffs(g, 1);
  CHECK(r.b.is_zero());
  // k(k+1+2a)/(4(k+a)(k+1+a)) at k=1, a=0 is 1/4
  CHECK(r.c == Scalar(q(1, 8)));
  CHECK(recurrence_coeffs(g, 0).c.is_zero());
}

TEST_CASE("recurrence coefficients match the defining polynomials") {
  for (const auto& f : rational_grid()) {
    const Rational tau = f.tau().rational();
    const auto basis = planar_basis(f, 12, tau);
    for (int k = 0; k < 11; ++k) {
      // z p_k - p_{k+1} = b_k p_k + c_k p_{k-1}
      auto lhs = oracle::shift(basis[static_cast<std::size_t>(k)], 1);
      for (std::size_t i = 0; i < basis[static_cast<std::size_t>(k) + 1].size(); ++i)
        lhs[i] -= basis[static_cast<std::size_t>(k) + 1][i];
      const auto coords = oracle::expand(lhs, basis);
      const auto rc = recurrence_coeffs(f, k);
      CHECK(rc.b == Scalar(coords[static_cast<std::size_t>(k)]));
      CHECK(rc.c == Scalar(k > 0 ? coords[static_cast<std::size_t>(k) - 1] : Rational{}));
    }
  }
}

TEST_CASE("norm ratios") {
  const auto h = WeightFamily::hermite(Scalar(q(1, 2)));
  CHECK(norm_ratio(h, 3, 1) == Scalar(6));
  CHECK(norm_ratio(h, 1, 3) == Scalar(q(1, 6)));
  const auto l = WeightFamily::laguerre(Scalar(q(1, 2)), q(1));
  CHECK(norm_ratio(l, 1, 0) == Scalar(2));
  for (const auto& f : rational_grid()) {
    for (int k = 0; k < 6; ++k) CHECK(norm_ratio(f, k, k) == Scalar(1));
    CHECK(norm_ratio(f, 4, 1) * norm_ratio(f, 1, 3) == norm_ratio(f, 4, 3));
  }
}

TEST_CASE("reversed gegenbauer polynomial matches its explicit sum") {
  for (const Rational& a : {q(0), q(1, 2), q(-1, 2), q(3)}) {
    for (const Rational& t : {q(0), q(1, 3), q(1)}) {
      const auto g = WeightFamily::gegenbauer(t, a);
      const Rational lam = Rational(1) + a;
      for (int k = 0; k <= 12; ++k) {
        Rational s;
        for (int m = 0; 2 * m <= k; ++m) {
          Rational c = pochhammer(lam, k - m) * pow(Rational(2), k - 2 * m) * pow(t, 2 * m) /
                       (factorial(m) * factorial(k - 2 * m));
          s += m % 2 ? -c : c;
        }
        CHECK(g.gegenbauer_reversed(k) == s);
      }
    }
  }
}

TEST_CASE("inversion coefficients") {
  const auto h = WeightFamily::hermite(Scalar(q(1, 2)));
  CHECK(inversion_coeff(h, 2, 2) == q(1, 4));
  CHECK(inversion_coeff(h, 2, 0) == q(1, 2));
  CHECK(inversion_coeff(h, 2, 1).is_zero());
  const auto l = WeightFamily::laguerre(Scalar(q(1, 2)), q(0));
  CHECK(inversion_coeff(l, 1, 0) == q(1));
  CHECK(inversion_coeff(l, 1, 1) == q(-1));
  for (const auto& f : rational_grid()) {
    CHECK(inversion_coeff(f, 0, 0) == q(1));
    CHECK(inversion_coeff(f, 3, 5).is_zero());
    CHECK(inversion_coeff(f, 3, -1).is_zero());
    std::vector<oracle::QPoly> cls, monic;
    for (int k = 0; k <= 10; ++k) {
      cls.push_back(oracle::classical(f, k));
      monic.push_back(oracle::planar_poly(f, k, q(1)));
    }
    for (int n = 0; n <= 10; ++n) {
      oracle::QPoly xn(static_cast<std::size_t>(n) + 1);
      xn.back() = q(1);
      const auto c = oracle::expand(xn, cls);
      const auto cm = oracle::expand(xn, monic);
      for (int i = 0; i <= n; ++i) {
        CHECK(inversion_coeff(f, n, i) == c[static_cast<std::size_t>(i)]);
        CHECK(monic_inversion_coeff(f, n, i) == cm[static_cast<std::size_t>(i)]);
      }
    }
  }
}

TEST_CASE("linearisation coefficients") {
  const auto h = WeightFamily::hermite(Scalar(q(1, 2)));
  CHECK(linearisation_coeff(h, 1, 1, 2) == q(1));
  CHECK(linearisation_coeff(h, 1, 1, 0) == q(2));
  CHECK(linearisation_coeff(h, 1, 1, 1).is_zero());
  const auto g = WeightFamily::gegenbauer(q(1, 2), q(0));
  // C_1^(1)(x)^2 = 4x^2 = C_2^(1) + C_0^(1)
  CHECK(linearisation_coeff(g, 1, 1, 2) == q(1));
  CHECK(linearisation_coeff(g, 1, 1, 0) == q(1));
  for (const auto& f : rational_grid()) {
    std::vector<oracle::QPoly> cls, monic;
    for (int k = 0; k <= 14; ++k) {
      cls.push_back(oracle::classical(f, k));
      monic.push_back(oracle::planar_poly(f, k, q(1)));
    }
    for (int n = 0; n <= 7; ++n) {
      for (int m = 0; m <= 7; ++m) {
        const auto c = oracle::expand(oracle::mul(cls[static_cast<std::size_t>(n)], cls[static_cast<std::size_t>(m)]), cls);
        const auto cm = oracle::expand(
            oracle::mul(monic[static_cast<std::size_t>(n)], monic[static_cast<std::size_t>(m)]), monic);
        for (int k = 0; k <= n + m; ++k) {
          CHECK(linearisation_coeff(f, n, m, k) == c[static_cast<std::size_t>(k)]);
          CHECK(monic_linearisation_coeff(f, n, m, k) == cm[static_cast<std::size_t>(k)]);
          if (n == 0) CHECK(linearisation_coeff(f, n, m, k) == (m == k ? q(1) : q(0)));
        }
        CHECK(linearisation_coeff(f, n, m, n + m + 1).is_zero());
      }
    }
  }
}

TEST_CASE("A-coefficient spot values") {
  const auto h = WeightFamily::hermite(tsym);
  for (auto method : {AMethod::recursive, AMethod::explicit_formula, AMethod::scaling}) {
    for (int k = 0; k <= 6; ++k) {
      CHECK(a_coeff(h, 1, k + 1, k, method) == Scalar(1));
      CHECK(a_coeff(h, 1, k - 1, k, method) == (k == 0 ? Scalar(0) : Scalar(k) * tsym));
      CHECK(a_coeff(h, 2, k, k, method) == Scalar(2 * k + 1) * tsym);
      for (int j = 0; j <= 8; ++j) CHECK(a_coeff(h, 0, j, k, method) == Scalar(j == k ? 1 : 0));
    }
  }
}

TEST_CASE("A-coefficients: three methods agree and match the defining polynomials") {
  for (const auto& f : rational_grid()) {
    const ACoeffTable rec(f, AMethod::recursive);
    const ACoeffTable ex(f, AMethod::explicit_formula);
    const ACoeffTable sc(f, AMethod::scaling);
    for (int p = 0; p <= 6; ++p) {
      for (int k = 0; k <= 20; ++k) {
        for (int j = k - p - 1; j <= k + p + 1; ++j) {
          const Scalar v = rec(p, j, k);
          CHECK_MESSAGE(v == ex(p, j, k), f.describe() << " p=" << p << " j=" << j << " k=" << k);
          CHECK_MESSAGE(v == sc(p, j, k), f.describe() << " p=" << p << " j=" << j << " k=" << k);
          if (j < 0 || std::abs(j - k) > p || (f.even_symmetric() && (j - k - p) % 2 != 0)) CHECK(v.is_zero());
        }
      }
    }
    const Rational tau = f.tau().rational();
    const auto basis = planar_basis(f, 17, tau);
    for (int p = 0; p <= 6; ++p) {
      for (int k = 0; k <= 10; ++k) {
        const auto coords = oracle::expand(oracle::shift(basis[static_cast<std::size_t>(k)], p), basis);
        for (int j = 0; j <= k + p; ++j) CHECK(rec(p, j, k) == Scalar(coords[static_cast<std::size_t>(j)]));
      }
    }
  }
}

TEST_CASE("A-coefficients compose: T_{p+q} = T_p T_q") {
  std::vector<WeightFamily> fams = rational_grid();
  fams.push_back(WeightFamily::hermite(tsym));
  fams.push_back(WeightFamily::laguerre(tsym, q(1, 2)));
  for (const auto& f : fams) {
    const ACoeffTable A(f);
    for (int p = 0; p <= 6; ++p) {
      for (int qq = 0; p + qq <= 6; ++qq) {
        for (int k = 0; k <= 12; ++k) {
          for (int j = std::max(0, k - p - qq); j <= k + p + qq; ++j) {
            Scalar sum;
            for (int m = std::max(0, k - p); m <= k + p; ++m) sum += A(p, m, k) * A(qq, j, m);
            CHECK(sum == A(p + qq, j, k));
          }
        }
      }
    }
  }
}

TEST_CASE("A-coefficients in symbolic mode carry the tau-power structure") {
  const auto h = WeightFamily::hermite(tsym);
  const auto l = WeightFamily::laguerre(tsym, q(1, 2));
  const ACoeffTable Ah(h), Al(l), Ah3(WeightFamily::hermite(Scalar(q(1, 3)))),
      Al3(WeightFamily::laguerre(Scalar(q(1, 3)), q(1, 2)));
  for (int p = 0; p <= 6; ++p) {
    for (int k = 0; k <= 10; ++k) {
      for (int j = std::max(0, k - p); j <= k + p; ++j) {
        const TauPoly vh = Ah(p, j, k).poly();
        if (!vh.is_zero()) {
          CHECK(vh.degree() == (p + k - j) / 2);
          CHECK(vh == TauPoly::monomial(vh.coeff(vh.degree()), vh.degree()));
        }
        CHECK(Ah(p, j, k).substitute(q(1, 3)) == Ah3(p, j, k).rational());
        const TauPoly vl = Al(p, j, k).poly();
        if (!vl.is_zero()) {
          CHECK(vl.degree() == p + k - j);
          CHECK(vl == TauPoly::monomial(vl.coeff(vl.degree()), vl.degree()));
        }
        CHECK(Al(p, j, k).substitute(q(1, 3)) == Al3(p, j, k).rational());
      }
    }
  }
}

TEST_CASE("A-coefficient asymptotics at large degree") {
  const Rational tau = q(1, 2);
  const ACoeffTable A(WeightFamily::hermite(Scalar(tau)));
  const int k = 10000;
  for (int p = 0; p <= 6; ++p) {
    for (int r = -p; r <= p; r += 2) {
      const double exact = A(p, k - r, k).to_double();
      const double lead = std::pow(tau.to_double(), (p + r) / 2.0) * binomial(p, (p + r) / 2).to_double() *
                          std::pow(static_cast<double>(k), (p + r) / 2.0);
      CHECK(std::abs(exact / lead - 1.0) < 0.01);
    }
  }
}
