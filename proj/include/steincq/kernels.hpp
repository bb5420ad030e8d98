#pragma once

#include <complex>
#include <cstddef>

// Low-level complex array kernels backing the matrix layer. Every kernel has a
// scalar reference implementation and (on x86-64) an AVX2+FMA variant selected
// at runtime. The two variants are equivalence-tested against each other.
//
// Arrays are interleaved std::complex<double> (re, im pairs), row-major for
// matrices. Output ranges never alias inputs.

namespace steincq::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

// Instruction set in use. Auto-detected on first call; the STEINCQ_KERNELS
// environment variable ("scalar" / "avx2") overrides detection.
Isa active();

// Test hook: force a specific variant. Throws if the ISA is unsupported here.
void force(Isa isa);
bool avx2_supported();

// c(m x n) = a(m x k) * b(k x n), c overwritten.
void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n);

// out((ar*br) x (ac*bc)) = a((ar x ac)) kron b((br x bc)).
void kron(const cplx* a, std::size_t ar, std::size_t ac, const cplx* b, std::size_t br,
          std::size_t bc, cplx* out);

// y = alpha*x + beta*y, n complex elements.
void axpby(cplx alpha, const cplx* x, cplx beta, cplx* y, std::size_t n);

// sum_i conj(x_i) * y_i.
cplx dotc(const cplx* x, const cplx* y, std::size_t n);

namespace detail {
void gemm_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
                 std::size_t n);
void kron_scalar(const cplx* a, std::size_t ar, std::size_t ac, const cplx* b, std::size_t br,
                 std::size_t bc, cplx* out);
void axpby_scalar(cplx alpha, const cplx* x, cplx beta, cplx* y, std::size_t n);
cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
void gemm_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k, std::size_t n);
void kron_avx2(const cplx* a, std::size_t ar, std::size_t ac, const cplx* b, std::size_t br,
               std::size_t bc, cplx* out);
void axpby_avx2(cplx alpha, const cplx* x, cplx beta, cplx* y, std::size_t n);
cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n);
#endif
}  // namespace detail

}  // namespace steincq::kernels
