#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "planar/asymptotics.hpp"
#include "planar/errors.hpp"
#include "planar/moments.hpp"
#include "planar/numeric/bessel.hpp"
#include "planar/numeric/oracle.hpp"

using namespace planar;
using namespace planar::numeric;

namespace {

Rational q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

WeightFamily hermite(long n, long d) { return WeightFamily::hermite(Scalar(q(n, d))); }

double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

double log_abs(const Rational& r) {
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, r.numerator().get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, r.denominator().get_mpz_t());
  return std::log(std::abs(mn)) - std::log(md) + (en - ed) * std::numbers::ln2;
}

// Gaussian-rational value of the monic Hermite polynomial with c_k = k tau.
struct ExactComplex {
  Rational re, im;
};
ExactComplex exact_hermite_poly(const Rational& tau, int k, const Rational& x, const Rational& y) {
  ExactComplex prev{1, 0}, cur{x, y};
  for (int j = 1; j < k; ++j) {
    const Rational c = tau * Rational(j);
    ExactComplex next{x * cur.re - y * cur.im - c * prev.re, x * cur.im + y * cur.re - c * prev.im};
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

TEST_CASE("bessel K values") {
  CHECK(bessel_k(0.5, 1.0) == doctest::Approx(std::sqrt(std::numbers::pi / 2) * std::exp(-1.0)).epsilon(1e-13));
  CHECK(bessel_k(0.5, 1.0) == doctest::Approx(0.4610685).epsilon(1e-7));
  const double x = 1e4;
  CHECK(std::abs(bessel_k_scaled(1.0, x) * std::sqrt(2 * x / std::numbers::pi) - 1.0) < 1e-3);
  CHECK_THROWS_AS(bessel_k(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(bessel_k(1.0, -2.0), DomainError);

  // trapezoid with two fixed truncations of the unscaled integral
  auto trap = [](double nu, double xx, double T, double h) {
    double s = 0.5 * std::exp(-xx);
    for (double t = h; t <= T; t += h) s += std::exp(-xx * std::cosh(t)) * std::cosh(nu * t);
    return s * h;
  };
  const double a = trap(0.0, 1.0, 8.0, 0.01), b = trap(0.0, 1.0, 10.0, 0.005);
  CHECK(std::abs(a - b) < 1e-10);
  CHECK(bessel_k(0.0, 1.0) == doctest::Approx(b).epsilon(1e-12));

  for (double nu : {0.0, 0.5, 1.0, 2.5, 3.0, 7.0})
    for (double xx : {1e-3, 0.1, 1.0, 5.0, 30.0, 200.0}) {
      CAPTURE(nu);
      CAPTURE(xx);
      CHECK(bessel_k(nu, xx) == doctest::Approx(std::cyl_bessel_k(nu, xx)).epsilon(1e-11));
    }
}

TEST_CASE("gauss rules integrate polynomials exactly") {
  const auto g = gauss_legendre(10, -1, 3);
  double s = 0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], 19);
  CHECK(s == doctest::Approx((std::pow(3.0, 20) - 1) / 20).epsilon(1e-13));
  for (double a : {0.0, 0.5, 2.0}) {
    const auto j = gauss_jacobi01(12, a);
    // int_0^1 s^m (1-s)^a ds = B(m+1, a+1)
    for (int m : {0, 5, 23}) {
      double t = 0;
      for (std::size_t i = 0; i < j.nodes.size(); ++i) t += j.weights[i] * std::pow(j.nodes[i], m);
      const double beta = std::exp(std::lgamma(m + 1.0) + std::lgamma(a + 1) - std::lgamma(m + a + 2));
      CHECK(t == doctest::Approx(beta).epsilon(1e-12));
    }
  }
  std::vector<double> v(1001, 0.1);
  CHECK(pairwise_sum(v) == doctest::Approx(100.1).epsilon(1e-15));
}

TEST_CASE("planar polynomial evaluation") {
  const auto H = hermite(1, 2);
  CHECK(std::abs(eval_planar_poly(H, 2, 0.0) - cplx(-0.5)) < 1e-15);
  CHECK(eval_planar_poly(H, 0, {3, 4}) == cplx(1.0));
  const auto L = WeightFamily::laguerre(Scalar(q(1, 3)), q(2));
  const cplx z{0.7, -1.2};
  CHECK(std::abs(eval_planar_poly(L, 1, z) - (z - (1.0 / 3) * 3.0)) < 1e-15);
  CHECK(eval_planar_poly(WeightFamily::gegenbauer(q(1, 2), q(1)), 0, z) == cplx(1.0));

  SUBCASE("log-scaled recurrence at high degree") {
    for (auto [x, y] : {std::pair{50L, 0L}, std::pair{3L, 4L}}) {
      const ExactComplex e = exact_hermite_poly(q(1, 2), 400, Rational(x), Rational(y));
      const LogComplex lc = eval_planar_poly_log(H, 400, cplx(double(x), double(y)));
      const double want = 0.5 * log_abs(e.re * e.re + e.im * e.im);
      CHECK(std::isfinite(lc.log_abs()));
      CHECK(lc.log_abs() == doctest::Approx(want).epsilon(1e-12));
      if (y == 0) {
        CHECK(log_abs(e.re) > 700);
        CHECK(std::abs(lc.mantissa.imag()) == 0);
        CHECK(lc.mantissa.real() > 0);
      } else {
        // phase of re + i im vs mantissa
        const double ratio = (e.im / e.re).to_double();
        CHECK(std::tan(std::arg(lc.mantissa)) == doctest::Approx(ratio).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("absolute norms and orthogonality") {
  const auto H = hermite(1, 2);
  const auto g = weighted_grid(H, 3, 0);
  CHECK(quadrature_orthogonality(H, 2, 2, g) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-8));
  CHECK(std::abs(quadrature_orthogonality(H, 2, 3, g)) < 1e-9 * absolute_norm(H, 3));
  CHECK(absolute_norm(H, 2) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));

  const auto L = WeightFamily::laguerre(Scalar(q(1, 2)), q(1));
  CHECK(quadrature_orthogonality(L, 0, 0, weighted_grid(L, 0, 0)) == doctest::Approx(0.375).epsilon(1e-6));
  CHECK(absolute_norm(L, 0) == doctest::Approx(0.375).epsilon(1e-15));

  const auto G = WeightFamily::gegenbauer(q(1, 3), q(3, 2));
  CHECK(quadrature_orthogonality(G, 0, 0, weighted_grid(G, 0, 0)) ==
        doctest::Approx(std::sqrt(1 - 1.0 / 9) / 5).epsilon(1e-12));

  for (const auto& f : {hermite(1, 3), WeightFamily::laguerre(Scalar(q(1, 2)), q(1, 2)),
                        WeightFamily::gegenbauer(q(1, 2), q(1))}) {
    CAPTURE(f.describe());
    const auto grid = weighted_grid(f, 8, 0);
    for (int j = 0; j <= 8; ++j)
      for (int k = 0; k <= j; ++k) {
        const double v = quadrature_orthogonality(f, j, k, grid);
        const double scale = std::sqrt(absolute_norm(f, j) * absolute_norm(f, k));
        if (j == k)
          CHECK(v == doctest::Approx(absolute_norm(f, j)).epsilon(1e-8));
        else
          CHECK(std::abs(v) < 1e-8 * scale);
      }
  }
}

TEST_CASE("skew orthogonality of the q basis") {
  for (const auto& f : {hermite(1, 2), WeightFamily::laguerre(Scalar(q(1, 3)), q(1)),
                        WeightFamily::gegenbauer(q(1, 2), q(1, 2))}) {
    CAPTURE(f.describe());
    const int N = 3;
    const DensityEval d(f, N, Component::symplectic);
    const auto g = weighted_grid(f, 2 * N - 1, 1);
    for (int j = 0; j < 2 * N; ++j)
      for (int k = 0; k < 2 * N; ++k) {
        const double v = quadrature_skew_product(d, j, k, g);
        double want = 0;
        if (j % 2 == 1 && k == j - 1) want = d.r(k / 2);
        if (j % 2 == 0 && k == j + 1) want = -d.r(j / 2);
        const double scale = std::max(d.r(j / 2), d.r(k / 2));
        CAPTURE(j);
        CAPTURE(k);
        CHECK(std::abs(v - want) < 1e-9 * scale);
      }
    for (int k = 0; k < N; ++k) CHECK(d.r(k) > 0);
  }
}

TEST_CASE("densities") {
  const auto H = hermite(1, 2);
  SUBCASE("reference values") {
    CHECK(quadrature_moment(H, 1, 1, 3, Component::complex, weighted_grid(H, 2, 2)) ==
          doctest::Approx(6.75).epsilon(1e-8));
    const auto G0 = hermite(0, 1);
    CHECK(std::abs(quadrature_moment(G0, 1, 1, 1, Component::symplectic, weighted_grid(G0, 1, 2)) - 2.0) < 1e-7);
  }
  SUBCASE("normalization") {
    for (const auto& f : {H, WeightFamily::laguerre(Scalar(q(1, 2)), q(2)), WeightFamily::gegenbauer(q(1, 3), 0)})
      for (auto c : {Component::complex, Component::symplectic})
        for (int N : {1, 4}) {
          CAPTURE(f.describe());
          CAPTURE(N);
          const double m = quadrature_moment(f, 0, 0, N, c, weighted_grid(f, density_degree(N, c), 0));
          CHECK(std::abs(m - N) < (c == Component::complex ? 1e-8 : 1e-7));
        }
  }
  SUBCASE("ginibre plateau") {
    const DensityEval d(hermite(0, 1), 60, Component::complex);
    CHECK(std::abs(d.density({1, 1}) - 1.0) < 1e-9);
    CHECK(std::abs(d.density({0, 0.5}) - 1.0) < 1e-9);
  }
  SUBCASE("symplectic density vanishes on the real line and is nonnegative") {
    for (const auto& f : {H, WeightFamily::laguerre(Scalar(q(1, 2)), q(1)), WeightFamily::gegenbauer(q(1, 2), 1)}) {
      const DensityEval d(f, 4, Component::symplectic);
      for (double x : {-0.4, 0.0, 0.3, 1.7}) CHECK(d.density({x, 0}) == 0.0);
      const DensityEval dc(f, 4, Component::complex);
      std::mt19937_64 rng(7);
      std::uniform_real_distribution<double> u(-2.5, 2.5);
      for (int i = 0; i < 400; ++i) {
        const cplx z{u(rng), u(rng)};
        CHECK(d.density(z) >= -1e-12);
        CHECK(dc.density(z) >= 0.0);
      }
    }
  }
  SUBCASE("direct density matches the vector kernel") {
    for (auto c : {Component::complex, Component::symplectic}) {
      const DensityEval d(WeightFamily::laguerre(Scalar(q(1, 4)), q(1, 2)), 5, c);
      QuadratureGrid g;
      for (double x : {-1.0, 0.3, 2.0})
        for (double y : {-0.7, 0.2, 1.1}) g.x.push_back(x), g.y.push_back(y), g.w.push_back(1);
      const auto K = d.kernel_on(g);
      for (std::size_t i = 0; i < g.size(); ++i) {
        const cplx z{g.x[i], g.y[i]};
        CHECK(d.density(z) == doctest::Approx(K[i] * weight(d.family(), z)).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(DensityEval(WeightFamily::hermite(Scalar(TauPoly::variable())), 2, Component::complex),
                  DomainError);
  CHECK_THROWS_AS(DensityEval(hermite(1, 1), 2, Component::complex), DomainError);
  CHECK_THROWS_AS(weighted_grid(WeightFamily::laguerre(Scalar(q(1, 2)), q(-1, 2)), 2, 0), DomainError);
  CHECK_THROWS_AS(weighted_grid(WeightFamily::gegenbauer(q(1, 2), q(-1, 2)), 2, 0), DomainError);
}

TEST_CASE("scalar and avx2 kernels agree") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3, 3);
  std::vector<double> x(1003), y(1003);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = u(rng), y[i] = u(rng);
  const DensityEval dc(WeightFamily::laguerre(Scalar(q(1, 3)), q(1)), 9, Component::complex);
  const DensityEval ds(hermite(1, 2), 7, Component::symplectic);
  for (const DensityEval* d : {&dc, &ds}) {
    std::vector<double> a(x.size()), b(x.size());
    auto run = [&](KernelIsa isa, std::vector<double>& out) {
      if (d->component() == Component::complex)
        complex_kernel(x.data(), y.data(), x.size(), d->coeffs(), out.data(), isa);
      else
        symplectic_kernel(x.data(), y.data(), x.size(), d->coeffs(), out.data(), isa);
    };
    run(KernelIsa::scalar, a);
    run(KernelIsa::avx2, b);
    double scale = 0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-12 * scale);
  }
  if (!avx2_supported()) {
    MESSAGE("avx2 unavailable; both paths ran the scalar kernel");
    CHECK_THROWS_AS(set_isa_override(KernelIsa::avx2), DomainError);
  } else {
    CHECK(active_isa() == KernelIsa::avx2);
  }
  set_isa_override(KernelIsa::scalar);
  CHECK(active_isa() == KernelIsa::scalar);
  const auto H = hermite(1, 3);
  const double m_scalar = quadrature_moment(H, 2, 1, 4, Component::symplectic, weighted_grid(H, 7, 3));
  set_isa_override(std::nullopt);
  const double m_auto = quadrature_moment(H, 2, 1, 4, Component::symplectic, weighted_grid(H, 7, 3));
  CHECK(m_scalar == doctest::Approx(m_auto).epsilon(1e-12));
  CHECK(isa_name(KernelIsa::avx2) == "avx2");
}

TEST_CASE("MP law quadrature") {
  for (double tau : {0.0, 0.3, 0.6})
    for (double alpha : {0.0, 0.5, 2.0, 6.0}) {
      CAPTURE(tau);
      CAPTURE(alpha);
      CHECK(std::abs(mp_law_moment_quadrature(0, 0, tau, alpha) - 1.0) < 1e-6);
    }
  CHECK(std::abs(mp_law_moment_quadrature(1, 0, 0.5, 1.0) - 1.0) < 1e-5);
  CHECK(std::abs(mp_law_moment_quadrature(1, 1, 0.5, 0.0) - 0.6875) < 1e-5);
  for (int p1 = 0; p1 <= 3; ++p1)
    for (int p2 = 0; p2 <= p1; ++p2)
      for (long a : {0L, 1L, 3L}) {
        const double l = l1(p1, p2, Scalar(q(1, 2)), Rational(a)).to_double();
        CAPTURE(p1);
        CAPTURE(p2);
        CAPTURE(a);
        CHECK(std::abs(mp_law_moment_quadrature(p1, p2, 0.5, double(a)) - l) < 1e-5 * std::max(1.0, std::abs(l)));
      }
  CHECK_THROWS_AS(mp_law_grid(1.0, 0.5), DomainError);
  CHECK_THROWS_AS(mp_law_grid(0.5, -1.0), DomainError);
}

TEST_CASE("grid refinement convergence on the Hermite grid") {
  std::vector<std::pair<int, int>> ps;
  for (int s = 0; s <= 4; ++s)
    for (int p2 = 0; p2 <= s; ++p2) ps.emplace_back(s - p2, p2);
  for (long d : {0L, 3L, 2L})
    for (auto c : {Component::complex, Component::symplectic})
      for (int N : {1, 3, 6}) {
        const auto f = d == 0 ? hermite(0, 1) : hermite(1, d);
        CAPTURE(f.describe());
        CAPTURE(N);
        CHECK_NOTHROW(quadrature_moments_checked(f, N, c, ps, 1e-9));
      }
}

TEST_CASE("oracle agrees with the exact engines") {
  const std::vector<WeightFamily> fams = {
      hermite(0, 1),
      hermite(1, 3),
      hermite(1, 2),
      WeightFamily::laguerre(Scalar(q(0)), q(1)),
      WeightFamily::laguerre(Scalar(q(1, 3)), q(1, 2)),
      WeightFamily::laguerre(Scalar(q(1, 2)), q(2)),
      WeightFamily::gegenbauer(q(1, 3), q(0)),
      WeightFamily::gegenbauer(q(1, 2), q(3, 2)),
  };
  std::vector<std::pair<int, int>> ps;
  for (int s = 0; s <= 4; ++s)
    for (int p2 = 0; p2 <= s; ++p2) ps.emplace_back(s - p2, p2);
  for (const auto& f : fams) {
    const MomentEngine engine(f);
    const double tol = f.kind() == FamilyKind::laguerre ? 1e-5 : 1e-7;
    for (auto c : {Component::complex, Component::symplectic})
      for (int N = 1; N <= 6; ++N) {
        const DensityEval d(f, N, c);
        const auto got = quadrature_moments(d, ps, weighted_grid(f, density_degree(N, c), 4));
        for (std::size_t i = 0; i < ps.size(); ++i) {
          const double want = engine.compute(ps[i].first, ps[i].second, N, c, Method::main).value.to_double();
          CAPTURE(f.describe());
          CAPTURE(N);
          CAPTURE(ps[i].first);
          CAPTURE(ps[i].second);
          CHECK(rel_err(got[i], want) < tol);
        }
      }
  }
}
