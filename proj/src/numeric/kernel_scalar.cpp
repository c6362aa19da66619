#include <complex>

#include "planar/numeric/kernels.hpp"

namespace planar::numeric::detail {

// Real recurrence coefficients give p_k(zb) = conj p_k(z).
void complex_kernel_scalar(const double* x, const double* y, std::size_t n, const KernelCoeffs& k, double* out) {
  const int N = k.N;
  for (std::size_t i = 0; i < n; ++i) {
    double pr = 1, pi = 0, qr = 0, qi = 0;
    double acc = k.inv_norm[0];
    for (int j = 0; j + 1 < N; ++j) {
      const double u = x[i] - k.b[j];
      const double c = k.c[j];
      const double nr = u * pr - y[i] * pi - c * qr;
      const double ni = u * pi + y[i] * pr - c * qi;
      qr = pr, qi = pi, pr = nr, pi = ni;
      acc += (pr * pr + pi * pi) * k.inv_norm[j + 1];
    }
    out[i] = acc;
  }
}

void symplectic_kernel_scalar(const double* x, const double* y, std::size_t n, const KernelCoeffs& k, double* out) {
  const int N = k.N;
  for (std::size_t i = 0; i < n; ++i) {
    double pr = 1, pi = 0, qr = 0, qi = 0;
    double er = 1, ei = 0;  // q_{2m}
    double acc = 0;
    for (int j = 0; j < 2 * N - 1; ++j) {
      const double u = x[i] - k.b[j];
      const double c = k.c[j];
      const double nr = u * pr - y[i] * pi - c * qr;
      const double ni = u * pi + y[i] * pr - c * qi;
      qr = pr, qi = pi, pr = nr, pi = ni;
      const int d = j + 1;
      if (d % 2 == 1) {
        acc += (pi * er - pr * ei) * k.inv_norm[d / 2];
      } else {
        const double l = k.lambda[d / 2 - 1];
        er = pr + l * er;
        ei = pi + l * ei;
      }
    }
    out[i] = 4.0 * y[i] * acc;
  }
}

}  // namespace planar::numeric::detail
