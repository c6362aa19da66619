#include "planar/numeric/bessel.hpp"

#include <algorithm>
#include <cmath>

#include "planar/errors.hpp"

namespace planar::numeric {

// e^x K_nu(x) = int_0^inf exp(-x (cosh t - 1)) cosh(nu t) dt, trapezoid rule (the integrand
// is entire and decays double-exponentially, so the rule converges geometrically in 1/h).
double bessel_k_scaled(double nu, double x) {
  if (!(x > 0)) throw DomainError("bessel_k requires x > 0");
  nu = std::abs(nu);
  auto log_f = [&](double t) {
    const double s = std::sinh(0.5 * t);
    return -2.0 * x * s * s + nu * t;
  };
  const double h = std::min(0.1, 0.5 / std::sqrt(x));
  const double t_peak = std::asinh(nu / x);
  const double log_peak = log_f(t_peak);
  auto f = [&](double t) { return std::exp(log_f(t) - log_peak) * 0.5 * (1.0 + std::exp(-2.0 * nu * t)); };
  double sum = 0.5 * f(0.0);
  for (long j = 1;; ++j) {
    const double t = static_cast<double>(j) * h;
    const double v = f(t);
    sum += v;
    if (t > t_peak && log_f(t) - log_peak < -40.0) break;
  }
  return sum * h * std::exp(log_peak);
}

double bessel_k(double nu, double x) {
  const double s = bessel_k_scaled(nu, x);
  return x > 700 ? s * std::exp(-x) : std::exp(-x) * s;
}

}  // namespace planar::numeric
