#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace planar::numeric {

enum class KernelIsa { scalar, avx2 };

// Real-coefficient recurrence data for the polynomial part of a 1-point density.
struct KernelCoeffs {
  int N = 0;
  std::vector<double> b, c;        // z p_k = p_{k+1} + b_k p_k + c_k p_{k-1}
  std::vector<double> inv_norm;    // 1/h_k (complex) or 1/r_k (symplectic), size N
  std::vector<double> lambda;      // symplectic only, size N
};

bool avx2_supported();
KernelIsa active_isa();
// nullopt restores runtime selection; forcing avx2 on an unsupported CPU throws.
void set_isa_override(std::optional<KernelIsa> isa);
std::string_view isa_name(KernelIsa isa);

// out_i = sum_{k<N} |p_k(z_i)|^2 / h_k
void complex_kernel(const double* x, const double* y, std::size_t n, const KernelCoeffs& k, double* out,
                    KernelIsa isa);
// out_i = 4 y_i sum_{k<N} Im(q_{2k+1}(z_i) conj q_{2k}(z_i)) / r_k, q_{2k} = p_{2k} + lambda_{k-1} q_{2k-2}
void symplectic_kernel(const double* x, const double* y, std::size_t n, const KernelCoeffs& k, double* out,
                       KernelIsa isa);
inline void complex_kernel(const double* x, const double* y, std::size_t n, const KernelCoeffs& k, double* out) {
  complex_kernel(x, y, n, k, out, active_isa());
}
inline void symplectic_kernel(const double* x, const double* y, std::size_t n, const KernelCoeffs& k, double* out) {
  symplectic_kernel(x, y, n, k, out, active_isa());
}

namespace detail {
void complex_kernel_scalar(const double* x, const double* y, std::size_t n, const KernelCoeffs& k, double* out);
void symplectic_kernel_scalar(const double* x, const double* y, std::size_t n, const KernelCoeffs& k, double* out);
void complex_kernel_avx2(const double* x, const double* y, std::size_t n, const KernelCoeffs& k, double* out);
void symplectic_kernel_avx2(const double* x, const double* y, std::size_t n, const KernelCoeffs& k, double* out);
}  // namespace detail

}  // namespace planar::numeric
