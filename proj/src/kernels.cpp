#include "steincq/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "steincq/errors.hpp"

namespace steincq::kernels {

namespace {

Isa detect() {
#if defined(__x86_64__) || defined(_M_X64)
  if (const char* env = std::getenv("STEINCQ_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
    if (std::strcmp(env, "avx2") == 0) return Isa::avx2;
  }
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::avx2;
#endif
  return Isa::scalar;
}

Isa& current() {
  static Isa isa = detect();
  return isa;
}

}  // namespace

Isa active() { return current(); }

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

void force(Isa isa) {
  if (isa == Isa::avx2 && !avx2_supported())
    fail(Errc::unsupported_dimension, "AVX2 not available on this host");
  current() = isa;
}

void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
  if (current() == Isa::avx2) {
    detail::gemm_avx2(a, b, c, m, k, n);
    return;
  }
#endif
  detail::gemm_scalar(a, b, c, m, k, n);
}

void kron(const cplx* a, std::size_t ar, std::size_t ac, const cplx* b, std::size_t br,
          std::size_t bc, cplx* out) {
#if defined(__x86_64__) || defined(_M_X64)
  if (current() == Isa::avx2) {
    detail::kron_avx2(a, ar, ac, b, br, bc, out);
    return;
  }
#endif
  detail::kron_scalar(a, ar, ac, b, br, bc, out);
}

void axpby(cplx alpha, const cplx* x, cplx beta, cplx* y, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
  if (current() == Isa::avx2) {
    detail::axpby_avx2(alpha, x, beta, y, n);
    return;
  }
#endif
  detail::axpby_scalar(alpha, x, beta, y, n);
}

cplx dotc(const cplx* x, const cplx* y, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
  if (current() == Isa::avx2) return detail::dotc_avx2(x, y, n);
#endif
  return detail::dotc_scalar(x, y, n);
}

}  // namespace steincq::kernels
