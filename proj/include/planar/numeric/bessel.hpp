#pragma once

namespace planar::numeric {

// e^x K_nu(x) for x > 0, nu >= 0, relative accuracy ~1e-14.
double bessel_k_scaled(double nu, double x);
// K_nu(x); underflows to 0 for x beyond ~700.
double bessel_k(double nu, double x);

}  // namespace planar::numeric
