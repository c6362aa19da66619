#include <immintrin.h>

#include "planar/numeric/kernels.hpp"

namespace planar::numeric::detail {

void complex_kernel_avx2(const double* x, const double* y, std::size_t n, const KernelCoeffs& k, double* out) {
  const int N = k.N;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i), vy = _mm256_loadu_pd(y + i);
    __m256d pr = _mm256_set1_pd(1.0), pi = _mm256_setzero_pd();
    __m256d qr = _mm256_setzero_pd(), qi = _mm256_setzero_pd();
    __m256d acc = _mm256_set1_pd(k.inv_norm[0]);
    for (int j = 0; j + 1 < N; ++j) {
      const __m256d u = _mm256_sub_pd(vx, _mm256_set1_pd(k.b[j]));
      const __m256d c = _mm256_set1_pd(k.c[j]);
      const __m256d nr = _mm256_fnmadd_pd(c, qr, _mm256_fnmadd_pd(vy, pi, _mm256_mul_pd(u, pr)));
      const __m256d ni = _mm256_fnmadd_pd(c, qi, _mm256_fmadd_pd(vy, pr, _mm256_mul_pd(u, pi)));
      qr = pr, qi = pi, pr = nr, pi = ni;
      const __m256d mag = _mm256_fmadd_pd(pr, pr, _mm256_mul_pd(pi, pi));
      acc = _mm256_fmadd_pd(mag, _mm256_set1_pd(k.inv_norm[j + 1]), acc);
    }
    _mm256_storeu_pd(out + i, acc);
  }
  if (i < n) complex_kernel_scalar(x + i, y + i, n - i, k, out + i);
}

void symplectic_kernel_avx2(const double* x, const double* y, std::size_t n, const KernelCoeffs& k, double* out) {
  const int N = k.N;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i), vy = _mm256_loadu_pd(y + i);
    __m256d pr = _mm256_set1_pd(1.0), pi = _mm256_setzero_pd();
    __m256d qr = _mm256_setzero_pd(), qi = _mm256_setzero_pd();
    __m256d er = _mm256_set1_pd(1.0), ei = _mm256_setzero_pd();
    __m256d acc = _mm256_setzero_pd();
    for (int j = 0; j < 2 * N - 1; ++j) {
      const __m256d u = _mm256_sub_pd(vx, _mm256_set1_pd(k.b[j]));
      const __m256d c = _mm256_set1_pd(k.c[j]);
      const __m256d nr = _mm256_fnmadd_pd(c, qr, _mm256_fnmadd_pd(vy, pi, _mm256_mul_pd(u, pr)));
      const __m256d ni = _mm256_fnmadd_pd(c, qi, _mm256_fmadd_pd(vy, pr, _mm256_mul_pd(u, pi)));
      qr = pr, qi = pi, pr = nr, pi = ni;
      const int d = j + 1;
      if (d % 2 == 1) {
        const __m256d im = _mm256_fmsub_pd(pi, er, _mm256_mul_pd(pr, ei));
        acc = _mm256_fmadd_pd(im, _mm256_set1_pd(k.inv_norm[d / 2]), acc);
      } else {
        const __m256d l = _mm256_set1_pd(k.lambda[d / 2 - 1]);
        er = _mm256_fmadd_pd(l, er, pr);
        ei = _mm256_fmadd_pd(l, ei, pi);
      }
    }
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(4.0), vy), acc));
  }
  if (i < n) symplectic_kernel_scalar(x + i, y + i, n - i, k, out + i);
}

}  // namespace planar::numeric::detail
