#include "planar/numeric/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "planar/errors.hpp"
#include "planar/numeric/bessel.hpp"

namespace planar::numeric {

namespace {

// Gauss rule from the monic recurrence pi_{k+1} = (x - alpha_k) pi_k - beta_k pi_{k-1}:
// Golub-Welsch nodes polished by Newton; Christoffel weights 1 / sum phi_k(x)^2.
QuadratureRule golub_welsch(const std::vector<double>& alpha, const std::vector<double>& beta, double mu0) {
  const int n = static_cast<int>(alpha.size());
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) diag[i] = alpha[i];
  for (int i = 1; i < n; ++i) sub[i - 1] = std::sqrt(beta[i]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  QuadratureRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()[i];
    for (int it = 0; it < 3; ++it) {
      double p0 = 1, p1 = x - alpha[0], d0 = 0, d1 = 1;
      for (int k = 1; k < n; ++k) {
        const double p2 = (x - alpha[k]) * p1 - beta[k] * p0;
        const double d2 = p1 + (x - alpha[k]) * d1 - beta[k] * d0;
        p0 = p1, p1 = p2, d0 = d1, d1 = d2;
      }
      if (n == 1) p1 = x - alpha[0], d1 = 1;
      const double dx = p1 / d1;
      x -= dx;
      if (std::abs(dx) < 1e-17 * std::max(1.0, std::abs(x))) break;
    }
    // orthonormal phi_k = pi_k / sqrt(mu0 beta_1 ... beta_k)
    double s = 1, phi_prev = 0, phi = 1;
    for (int k = 0; k + 1 < n; ++k) {
      const double nb = std::sqrt(beta[k + 1]);
      const double next = ((x - alpha[k]) * phi - (k > 0 ? std::sqrt(beta[k]) : 0.0) * phi_prev) / nb;
      phi_prev = phi, phi = next;
      s += phi * phi;
    }
    r.nodes[i] = x;
    r.weights[i] = mu0 / s;
  }
  return r;
}

std::mutex rule_mu;

}  // namespace

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw DomainError("quadrature needs at least one node");
  static std::map<int, QuadratureRule> cache;
  QuadratureRule base;
  {
    std::lock_guard lock(rule_mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
      std::vector<double> a(n, 0.0), b(n, 0.0);
      for (int k = 1; k < n; ++k) b[k] = double(k) * k / (4.0 * k * k - 1.0);
      it = cache.emplace(n, golub_welsch(a, b, 2.0)).first;
    }
    base = it->second;
  }
  const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
  for (int i = 0; i < n; ++i) {
    base.nodes[i] = mid + half * base.nodes[i];
    base.weights[i] *= half;
  }
  return base;
}

QuadratureRule gauss_jacobi01(int n, double a) {
  if (n < 1) throw DomainError("quadrature needs at least one node");
  if (!(a > -1)) throw DomainError("jacobi exponent must exceed -1");
  static std::map<std::pair<int, double>, QuadratureRule> cache;
  std::lock_guard lock(rule_mu);
  auto key = std::make_pair(n, a);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  // Jacobi (1-x)^a on [-1, 1], then s = (1 + x)/2
  std::vector<double> al(n), be(n, 0.0);
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * k + a;
    al[k] = k == 0 ? -a / (a + 2.0) : -a * a / (t * (t + 2.0));
    if (k >= 1) be[k] = 4.0 * k * k * (k + a) * (k + a) / (t * t * (t + 1.0) * (t - 1.0));
  }
  const double mu0 = std::pow(2.0, a + 1.0) / (a + 1.0);
  QuadratureRule r = golub_welsch(al, be, mu0);
  const double scale = std::pow(2.0, -a - 1.0);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = 0.5 * (1.0 + r.nodes[i]);
    r.weights[i] *= scale;
  }
  return cache.emplace(key, r).first->second;
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 32) {
    double s = 0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t h = v.size() / 2;
  return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

namespace {

constexpr double pi = std::numbers::pi;

struct FloatParams {
  double tau, nu, a;
};

FloatParams float_params(const WeightFamily& f) {
  if (f.symbolic()) throw DomainError("quadrature needs a rational tau");
  const Rational& t = f.tau().rational();
  if (!(t < Rational(1))) throw DomainError("quadrature needs tau < 1");
  if (f.kind() == FamilyKind::laguerre && f.nu() < Rational(0)) throw DomainError("laguerre oracle needs nu >= 0");
  if (f.kind() == FamilyKind::gegenbauer && f.a() < Rational(0)) throw DomainError("gegenbauer oracle needs a >= 0");
  return {t.to_double(), f.nu().to_double(), f.a().to_double()};
}

// Composite Gauss-Legendre with unit-length panels on [lo, hi].
QuadratureRule panels(double lo, double hi, int per_panel, double width) {
  QuadratureRule out;
  const int count = std::max(1, static_cast<int>(std::ceil((hi - lo) / width)));
  const double step = (hi - lo) / count;
  for (int i = 0; i < count; ++i) {
    const auto g = gauss_legendre(per_panel, lo + i * step, lo + (i + 1) * step);
    out.nodes.insert(out.nodes.end(), g.nodes.begin(), g.nodes.end());
    out.weights.insert(out.weights.end(), g.weights.begin(), g.weights.end());
  }
  return out;
}

// Geometric panels [hi 2^{-j-1}, hi 2^{-j}] for j < levels plus [0, hi 2^{-levels}].
QuadratureRule geometric_panels(double hi, int levels, int per_panel) {
  QuadratureRule out;
  double right = hi;
  for (int j = 0; j <= levels; ++j) {
    const double left = j == levels ? 0.0 : 0.5 * right;
    const auto g = gauss_legendre(per_panel, left, right);
    out.nodes.insert(out.nodes.end(), g.nodes.begin(), g.nodes.end());
    out.weights.insert(out.weights.end(), g.weights.begin(), g.weights.end());
    right = left;
  }
  return out;
}

void append_polar(QuadratureGrid& g, const QuadratureRule& radial, int M, auto&& point) {
  g.radial_nodes = static_cast<int>(radial.nodes.size());
  g.angular_nodes = M;
  g.x.reserve(radial.nodes.size() * M);
  g.y.reserve(radial.nodes.size() * M);
  g.w.reserve(radial.nodes.size() * M);
  for (std::size_t i = 0; i < radial.nodes.size(); ++i)
    for (int j = 0; j < M; ++j) {
      const double theta = 2.0 * pi * j / M;
      double x, y, w;
      point(radial.nodes[i], radial.weights[i], theta, x, y, w);
      g.x.push_back(x);
      g.y.push_back(y);
      g.w.push_back(w * (2.0 / M));  // (2 pi / M) / pi
    }
}

int even_at_least(int m) { return m + (m % 2); }

}  // namespace

QuadratureGrid weighted_grid(const WeightFamily& f, int max_degree, int p_max, int refine) {
  if (refine < 1 || max_degree < 0 || p_max < 0) throw DomainError("invalid grid request");
  const FloatParams fp = float_params(f);
  const double tau = fp.tau;
  const int D = 2 * max_degree + p_max + 1;
  QuadratureGrid g;
  switch (f.kind()) {
    case FamilyKind::hermite: {
      // x = sqrt(1+tau) rho cos, y = sqrt(1-tau) rho sin, omega = exp(-rho^2)
      g.scheme = "hermite-elliptic-polar";
      const double R = std::sqrt(2.0 * (max_degree + 1) + p_max + 40.0);
      g.extent = R;
      const auto radial = panels(0.0, R, 20 * refine, 1.0);
      const int M = even_at_least(std::max(32, D + 8)) * refine;
      const double sp = std::sqrt(1 + tau), sm = std::sqrt(1 - tau), jac = std::sqrt(1 - tau * tau);
      append_polar(g, radial, M, [&](double rho, double qw, double th, double& x, double& y, double& w) {
        x = sp * rho * std::cos(th);
        y = sm * rho * std::sin(th);
        w = qw * jac * rho * std::exp(-rho * rho);
      });
      break;
    }
    case FamilyKind::gegenbauer: {
      // s = rho^2 on [0,1] with Gauss-Jacobi weight (1-s)^a
      g.scheme = "gegenbauer-jacobi-polar";
      g.extent = 1.0;
      const auto radial = gauss_jacobi01(std::max(32, max_degree + p_max + 8) * refine, fp.a);
      const int M = even_at_least(std::max(32, D + 8)) * refine;
      const double sp = std::sqrt((1 + tau) / 2), sm = std::sqrt((1 - tau) / 2), jac = std::sqrt(1 - tau * tau) / 4;
      append_polar(g, radial, M, [&](double s, double qw, double th, double& x, double& y, double& w) {
        const double rho = std::sqrt(s);
        x = sp * rho * std::cos(th);
        y = sm * rho * std::sin(th);
        w = qw * jac;
      });
      break;
    }
    case FamilyKind::laguerre: {
      // polar about 0; omega = rho^nu [e^X K_nu(X)] exp(kappa rho cos - X), X = 2 rho/(1-tau^2)
      g.scheme = "laguerre-polar";
      const double one_m = 1 - tau * tau, kappa = 2 * tau / one_m, nu = fp.nu;
      auto log_env = [&](double rho) {
        const double X = 2 * rho / one_m;
        return (1 + D + nu) * std::log(rho) + std::log(bessel_k_scaled(nu, X)) - 2 * rho / (1 + tau);
      };
      double best = -1e300, R = 0.5;
      for (double rho = 0.5;; rho += 0.5) {
        const double v = log_env(rho);
        best = std::max(best, v);
        if (v < best - 36.0) {
          R = rho;
          break;
        }
      }
      g.extent = R;
      const double inner = std::min(1.0, R);
      QuadratureRule radial = geometric_panels(inner, 30, 12 * refine);
      if (R > inner) {
        const auto outer = panels(inner, R, 20 * refine, 1.0);
        radial.nodes.insert(radial.nodes.end(), outer.nodes.begin(), outer.nodes.end());
        radial.weights.insert(radial.weights.end(), outer.weights.begin(), outer.weights.end());
      }
      const double a = kappa * R;
      const int M = even_at_least(static_cast<int>(std::ceil(1.5 * a + 9 * std::sqrt(a) + 2 * D + 32))) * refine;
      std::vector<double> radial_part(radial.nodes.size());
      for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        const double rho = radial.nodes[i];
        radial_part[i] = rho * std::pow(rho, nu) * bessel_k_scaled(nu, 2 * rho / one_m);
      }
      std::size_t idx = 0;
      int j = 0;
      append_polar(g, radial, M, [&](double rho, double qw, double th, double& x, double& y, double& w) {
        x = rho * std::cos(th);
        y = rho * std::sin(th);
        w = qw * radial_part[idx] * std::exp((kappa * std::cos(th) - 2 / one_m) * rho);
        if (++j == M) j = 0, ++idx;
      });
      break;
    }
  }
  return g;
}

QuadratureGrid mp_law_grid(double tau, double alpha, int refine) {
  if (!(tau >= 0 && tau < 1) || !(alpha >= 0) || refine < 1) throw DomainError("MP law needs 0 <= tau < 1, alpha >= 0");
  const double one_m = 1 - tau * tau;
  const double c0 = tau * (2 + alpha);
  const double A = (1 + tau * tau) * std::sqrt(1 + alpha), B = one_m * std::sqrt(1 + alpha);
  const double eps = one_m * alpha;
  auto density = [&](double x, double y) { return 1.0 / (one_m * std::sqrt(4 * (x * x + y * y) + eps * eps)); };
  QuadratureGrid g;
  const int M = 256 * refine;
  if (c0 < A) {
    // polar about the origin, which lies inside the support
    g.scheme = "mp-origin-polar";
    g.extent = c0 + A;
    const auto unit = geometric_panels(1.0, 24, 16 * refine);
    g.radial_nodes = static_cast<int>(unit.nodes.size());
    g.angular_nodes = M;
    for (int j = 0; j < M; ++j) {
      const double th = 2.0 * pi * j / M, c = std::cos(th), s = std::sin(th);
      const double qa = c * c / (A * A) + s * s / (B * B), qb = c0 * c / (A * A), qc = c0 * c0 / (A * A) - 1;
      const double rmax = (qb + std::sqrt(qb * qb - qa * qc)) / qa;
      for (std::size_t i = 0; i < unit.nodes.size(); ++i) {
        const double r = rmax * unit.nodes[i];
        const double x = r * c, y = r * s;
        g.x.push_back(x);
        g.y.push_back(y);
        g.w.push_back(unit.weights[i] * rmax * r * density(x, y) * (2.0 / M));
      }
    }
  } else {
    g.scheme = "mp-center-elliptic";
    g.extent = 1.0;
    const auto radial = panels(0.0, 1.0, 24 * refine, 0.25);
    append_polar(g, radial, M, [&](double rho, double qw, double th, double& x, double& y, double& w) {
      x = c0 + A * rho * std::cos(th);
      y = B * rho * std::sin(th);
      w = qw * A * B * rho * density(x, y);
    });
  }
  return g;
}

}  // namespace planar::numeric
