#include "planar/numeric/kernels.hpp"

#include <atomic>

#include "planar/errors.hpp"

namespace planar::numeric {

namespace {
// -1: runtime selection; otherwise a KernelIsa value
std::atomic<int> isa_override{-1};
}  // namespace

bool avx2_supported() {
#if defined(PLANAR_ENABLE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

KernelIsa active_isa() {
  const int o = isa_override.load();
  if (o >= 0) return static_cast<KernelIsa>(o);
  return avx2_supported() ? KernelIsa::avx2 : KernelIsa::scalar;
}

void set_isa_override(std::optional<KernelIsa> isa) {
  if (isa && *isa == KernelIsa::avx2 && !avx2_supported()) throw DomainError("avx2 kernels unavailable on this CPU");
  isa_override.store(isa ? static_cast<int>(*isa) : -1);
}

std::string_view isa_name(KernelIsa isa) { return isa == KernelIsa::avx2 ? "avx2" : "scalar"; }

void complex_kernel(const double* x, const double* y, std::size_t n, const KernelCoeffs& k, double* out,
                    KernelIsa isa) {
#ifdef PLANAR_ENABLE_AVX2
  if (isa == KernelIsa::avx2 && avx2_supported()) return detail::complex_kernel_avx2(x, y, n, k, out);
#endif
  (void)isa;
  detail::complex_kernel_scalar(x, y, n, k, out);
}

void symplectic_kernel(const double* x, const double* y, std::size_t n, const KernelCoeffs& k, double* out,
                       KernelIsa isa) {
#ifdef PLANAR_ENABLE_AVX2
  if (isa == KernelIsa::avx2 && avx2_supported()) return detail::symplectic_kernel_avx2(x, y, n, k, out);
#endif
  (void)isa;
  detail::symplectic_kernel_scalar(x, y, n, k, out);
}

}  // namespace planar::numeric
