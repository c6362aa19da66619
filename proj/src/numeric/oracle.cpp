#include "planar/numeric/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "planar/errors.hpp"
#include "planar/numeric/bessel.hpp"
#include "planar/symplectic_moments.hpp"

namespace planar::numeric {

namespace {

double float_tau(const WeightFamily& f, bool allow_one) {
  if (f.symbolic()) throw DomainError("numeric evaluation needs a rational tau");
  const Rational& t = f.tau().rational();
  if (allow_one ? t > Rational(1) : !(t < Rational(1))) throw DomainError("numeric evaluation needs tau < 1");
  return t.to_double();
}

struct FloatRecurrence {
  std::vector<double> b, c;
};

FloatRecurrence float_recurrence(const WeightFamily& f, int steps) {
  FloatRecurrence r;
  r.b.resize(static_cast<std::size_t>(steps));
  r.c.resize(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const auto rc = recurrence_coeffs(f, k);
    r.b[k] = rc.b.to_double();
    r.c[k] = k == 0 ? 0.0 : rc.c.to_double();
  }
  return r;
}

// p_0 .. p_{n-1} at z
void eval_all(const KernelCoeffs& k, cplx z, std::vector<cplx>& p, std::size_t n) {
  p.resize(n);
  if (n == 0) return;
  p[0] = 1.0;
  if (n > 1) p[1] = z - k.b[0];
  for (std::size_t j = 1; j + 1 < n; ++j) p[j + 1] = (z - k.b[j]) * p[j] - k.c[j] * p[j - 1];
}

// q_0 .. q_{2N-1} from p_0 .. p_{2N-1}
void to_skew(const KernelCoeffs& k, std::vector<cplx>& p) {
  for (std::size_t m = 1; 2 * m < p.size(); ++m) p[2 * m] += k.lambda[m - 1] * p[2 * m - 2];
}

cplx monomial(cplx z, int p1, int p2) {
  cplx a = 1.0, zb = std::conj(z);
  for (int i = 0; i < p1; ++i) a *= z;
  for (int i = 0; i < p2; ++i) a *= zb;
  return a;
}

double checked_real(double re, double im, const std::string& what, double scale = 1.0) {
  if (!(std::abs(im) < 1e-9 * std::max(scale, std::abs(re))))
    throw ConvergenceError(what + ": imaginary residue " + std::to_string(im), re, im);
  return re;
}

}  // namespace

LogComplex eval_planar_poly_log(const WeightFamily& f, int k, cplx z) {
  if (k < 0) throw DomainError("polynomial degree must be nonnegative");
  float_tau(f, true);
  LogComplex out{1.0, 0.0};
  if (k == 0) return out;
  const FloatRecurrence r = float_recurrence(f, k);
  constexpr double big = 1e100;
  const double log_big = std::log(big);
  cplx prev = 1.0, cur = z - r.b[0];
  double scale = 0;
  for (int j = 1; j < k; ++j) {
    const cplx next = (z - r.b[j]) * cur - r.c[j] * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > big) {
      cur /= big;
      prev /= big;
      scale += log_big;
    }
  }
  return {cur, scale};
}

cplx eval_planar_poly(const WeightFamily& f, int k, cplx z) { return eval_planar_poly_log(f, k, z).value(); }

double absolute_norm(const WeightFamily& f, int k) {
  const double tau = float_tau(f, false);
  const double s = std::sqrt(1 - tau * tau);
  double h0 = 0;
  switch (f.kind()) {
    case FamilyKind::hermite: h0 = s; break;
    case FamilyKind::laguerre: h0 = 0.5 * (1 - tau * tau) * std::tgamma(f.nu().to_double() + 1); break;
    case FamilyKind::gegenbauer: h0 = s / (2 * (1 + f.a().to_double())); break;
  }
  return h0 * norm_ratio(f, k, 0).to_double();
}

double weight(const WeightFamily& f, cplx z) {
  const double tau = float_tau(f, false);
  const double x = z.real(), y = z.imag(), one_m = 1 - tau * tau;
  switch (f.kind()) {
    case FamilyKind::hermite: return std::exp(-(x * x + y * y - tau * (x * x - y * y)) / one_m);
    case FamilyKind::laguerre: {
      const double nu = f.nu().to_double(), r = std::abs(z);
      if (r == 0) {
        if (nu <= 0) return HUGE_VAL;
        return std::tgamma(nu) * std::pow(2.0, nu - 1) * std::pow(one_m / 2, nu);
      }
      const double X = 2 * r / one_m;
      return std::pow(r, nu) * bessel_k_scaled(nu, X) * std::exp(2 * tau * x / one_m - X);
    }
    case FamilyKind::gegenbauer: {
      const double s = 1 - 2 * x * x / (1 + tau) - 2 * y * y / (1 - tau);
      if (s < 0) return 0;
      return std::pow(s, f.a().to_double());
    }
  }
  return 0;
}

int density_degree(int N, Component c) { return c == Component::complex ? N - 1 : 2 * N - 1; }

DensityEval::DensityEval(const WeightFamily& f, int N, Component component)
    : family_(f), N_(N), component_(component) {
  if (N < 1) throw DomainError("N must be positive");
  float_tau(f, false);
  const int deg = density_degree(N, component);
  const FloatRecurrence rec = float_recurrence(f, deg + 1);
  coeffs_.N = N;
  coeffs_.b = rec.b;
  coeffs_.c = rec.c;
  h_.resize(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k <= deg; ++k) h_[k] = absolute_norm(f, k);
  coeffs_.inv_norm.resize(static_cast<std::size_t>(N));
  if (component == Component::complex) {
    for (int k = 0; k < N; ++k) coeffs_.inv_norm[k] = 1.0 / h_[k];
  } else {
    const SkewData S = skew_data(f);
    const double r0 = 2 * (h_[1] - rec.c[1] * h_[0]);
    r_.resize(static_cast<std::size_t>(N));
    coeffs_.lambda.resize(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) {
      r_[k] = r0 * S.skew_norm_ratio(k, 0).to_double();
      coeffs_.inv_norm[k] = 1.0 / r_[k];
      coeffs_.lambda[k] = k + 1 < N ? S.lambda(k).to_double() : 0.0;
    }
  }
}

double DensityEval::density(cplx z) const {
  const double w = weight(family_, z);
  const std::size_t n = static_cast<std::size_t>(density_degree(N_, component_)) + 1;
  std::vector<cplx> pz, pzb;
  eval_all(coeffs_, z, pz, n);
  eval_all(coeffs_, std::conj(z), pzb, n);
  cplx sum = 0;
  double mag = 0;
  if (component_ == Component::complex) {
    for (int k = 0; k < N_; ++k) {
      const cplx t = pz[k] * pzb[k] / h_[k];
      sum += t;
      mag += std::abs(t);
    }
  } else {
    to_skew(coeffs_, pz);
    to_skew(coeffs_, pzb);
    for (int k = 0; k < N_; ++k) {
      const cplx t = (pz[2 * k + 1] * pzb[2 * k] - pz[2 * k] * pzb[2 * k + 1]) / r_[k];
      sum += t;
      mag += std::abs(t);
    }
    sum *= std::conj(z) - z;
    mag *= 2 * std::abs(z.imag());
  }
  if (std::abs(sum.imag()) > 1e-10 * std::max(mag, 1e-300))
    throw ConvergenceError("density has a non-negligible imaginary part", sum.real(), sum.imag());
  return w * sum.real();
}

std::vector<double> DensityEval::kernel_on(const QuadratureGrid& g) const {
  std::vector<double> out(g.size());
  if (component_ == Component::complex)
    complex_kernel(g.x.data(), g.y.data(), g.size(), coeffs_, out.data());
  else
    symplectic_kernel(g.x.data(), g.y.data(), g.size(), coeffs_, out.data());
  return out;
}

std::vector<double> quadrature_moments(const DensityEval& d, const std::vector<std::pair<int, int>>& ps,
                                       const QuadratureGrid& g) {
  const std::vector<double> K = d.kernel_on(g);
  std::vector<double> re(g.size()), im(g.size()), out;
  out.reserve(ps.size());
  for (auto [p1, p2] : ps) {
    if (p1 < 0 || p2 < 0) throw DomainError("moment indices must be nonnegative");
    for (std::size_t i = 0; i < g.size(); ++i) {
      const cplx v = g.w[i] * K[i] * monomial({g.x[i], g.y[i]}, p1, p2);
      re[i] = v.real();
      im[i] = v.imag();
    }
    out.push_back(checked_real(pairwise_sum(re), pairwise_sum(im), "quadrature moment"));
  }
  return out;
}

double quadrature_moment(const DensityEval& d, int p1, int p2, const QuadratureGrid& g) {
  return quadrature_moments(d, {{p1, p2}}, g).front();
}

double quadrature_moment(const WeightFamily& f, int p1, int p2, int N, Component c, const QuadratureGrid& g) {
  return quadrature_moment(DensityEval(f, N, c), p1, p2, g);
}

std::vector<double> quadrature_moments_checked(const WeightFamily& f, int N, Component c,
                                               const std::vector<std::pair<int, int>>& ps, double rel_tol) {
  int p_max = 0;
  for (auto [p1, p2] : ps) p_max = std::max(p_max, p1 + p2);
  const DensityEval d(f, N, c);
  const int deg = density_degree(N, c);
  const auto coarse = quadrature_moments(d, ps, weighted_grid(f, deg, p_max, 1));
  const auto fine = quadrature_moments(d, ps, weighted_grid(f, deg, p_max, 2));
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (!(std::abs(coarse[i] - fine[i]) <= rel_tol * std::max(1.0, std::abs(fine[i]))))
      throw ConvergenceError("grid refinement changed moment (" + std::to_string(ps[i].first) + "," +
                                 std::to_string(ps[i].second) + ")",
                             coarse[i], fine[i]);
  return fine;
}

double quadrature_orthogonality(const WeightFamily& f, int j, int k, const QuadratureGrid& g) {
  if (j < 0 || k < 0) throw DomainError("degrees must be nonnegative");
  float_tau(f, false);
  const FloatRecurrence rec = float_recurrence(f, std::max(j, k) + 1);
  KernelCoeffs kc;
  kc.b = rec.b;
  kc.c = rec.c;
  const std::size_t n = static_cast<std::size_t>(std::max(j, k)) + 1;
  std::vector<double> re(g.size()), im(g.size());
  std::vector<cplx> p;
  double mag = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    eval_all(kc, {g.x[i], g.y[i]}, p, n);
    const cplx v = g.w[i] * p[j] * std::conj(p[k]);
    re[i] = v.real();
    im[i] = v.imag();
    mag += std::abs(v);
  }
  const double r = pairwise_sum(re), s = pairwise_sum(im);
  return checked_real(r, s, "orthogonality", std::max(1.0, mag));
}

double quadrature_skew_product(const DensityEval& d, int j, int k, const QuadratureGrid& g) {
  const int n = 2 * d.N();
  if (d.component() != Component::symplectic) throw DomainError("skew product needs a symplectic DensityEval");
  if (j < 0 || k < 0 || j >= n || k >= n) throw DomainError("skew index out of range");
  std::vector<double> v(g.size());
  std::vector<cplx> q;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const cplx z{g.x[i], g.y[i]};
    eval_all(d.coeffs(), z, q, static_cast<std::size_t>(n));
    to_skew(d.coeffs(), q);
    v[i] = g.w[i] * 4 * g.y[i] * (q[j] * std::conj(q[k])).imag();
  }
  return pairwise_sum(v);
}

double mp_law_moment_quadrature(int p1, int p2, double tau, double alpha, const QuadratureGrid& g) {
  if (p1 < 0 || p2 < 0) throw DomainError("moment indices must be nonnegative");
  (void)tau, (void)alpha;
  std::vector<double> re(g.size()), im(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const cplx v = g.w[i] * monomial({g.x[i], g.y[i]}, p1, p2);
    re[i] = v.real();
    im[i] = v.imag();
  }
  return checked_real(pairwise_sum(re), pairwise_sum(im), "MP law moment");
}

double mp_law_moment_quadrature(int p1, int p2, double tau, double alpha) {
  const double coarse = mp_law_moment_quadrature(p1, p2, tau, alpha, mp_law_grid(tau, alpha, 1));
  const double fine = mp_law_moment_quadrature(p1, p2, tau, alpha, mp_law_grid(tau, alpha, 2));
  if (!(std::abs(coarse - fine) <= 1e-9 * std::max(1.0, std::abs(fine))))
    throw ConvergenceError("MP law quadrature did not converge", coarse, fine);
  return fine;
}

}  // namespace planar::numeric
