#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "steincq/kernels.hpp"

// AVX2+FMA variants. Complex numbers stay interleaved; a ymm register holds
// two complex doubles [re0, im0, re1, im1]. Complex scalar * vector uses the
// fmaddsub identity: even lanes ar*br - ai*bi, odd lanes ar*bi + ai*br.

namespace steincq::kernels::detail {

namespace {

// acc += s * v for two complex lanes.
inline __m256d cmul_acc(__m256d acc, __m256d s_re, __m256d s_im, __m256d v) {
  const __m256d vswap = _mm256_permute_pd(v, 0x5);
  return _mm256_add_pd(acc, _mm256_fmaddsub_pd(v, s_re, _mm256_mul_pd(vswap, s_im)));
}

inline __m256d cmul(__m256d s_re, __m256d s_im, __m256d v) {
  const __m256d vswap = _mm256_permute_pd(v, 0x5);
  return _mm256_fmaddsub_pd(v, s_re, _mm256_mul_pd(vswap, s_im));
}

}  // namespace

void gemm_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
               std::size_t n) {
  double* cd = reinterpret_cast<double*>(c);
  for (std::size_t i = 0; i < m * n; ++i) c[i] = cplx(0.0, 0.0);
  const std::size_t n2 = n & ~std::size_t(1);
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = a + i * k;
    double* crow = cd + 2 * i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const double ar = arow[l].real(), ai = arow[l].imag();
      if (ar == 0.0 && ai == 0.0) continue;
      const __m256d s_re = _mm256_set1_pd(ar);
      const __m256d s_im = _mm256_set1_pd(ai);
      const double* brow = reinterpret_cast<const double*>(b + l * n);
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, cmul_acc(cv, s_re, s_im, bv));
      }
      if (j < n) {
        const cplx av(ar, ai);
        c[i * n + j] += av * b[l * n + j];
      }
    }
  }
}

void kron_avx2(const cplx* a, std::size_t ar, std::size_t ac, const cplx* b, std::size_t br,
               std::size_t bc, cplx* out) {
  const std::size_t oc = ac * bc;
  const std::size_t bc2 = bc & ~std::size_t(1);
  for (std::size_t i1 = 0; i1 < ar; ++i1)
    for (std::size_t i2 = 0; i2 < br; ++i2) {
      cplx* orow = out + (i1 * br + i2) * oc;
      const double* brow = reinterpret_cast<const double*>(b + i2 * bc);
      for (std::size_t j1 = 0; j1 < ac; ++j1) {
        const cplx av = a[i1 * ac + j1];
        double* oblk = reinterpret_cast<double*>(orow + j1 * bc);
        const __m256d s_re = _mm256_set1_pd(av.real());
        const __m256d s_im = _mm256_set1_pd(av.imag());
        std::size_t j2 = 0;
        for (; j2 < bc2; j2 += 2) {
          const __m256d bv = _mm256_loadu_pd(brow + 2 * j2);
          _mm256_storeu_pd(oblk + 2 * j2, cmul(s_re, s_im, bv));
        }
        if (j2 < bc) orow[j1 * bc + j2] = av * b[i2 * bc + j2];
      }
    }
}

void axpby_avx2(cplx alpha, const cplx* x, cplx beta, cplx* y, std::size_t n) {
  const __m256d a_re = _mm256_set1_pd(alpha.real());
  const __m256d a_im = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const std::size_t n2 = n & ~std::size_t(1);
  std::size_t i = 0;
  if (beta == cplx(1.0, 0.0)) {
    for (; i < n2; i += 2) {
      const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
      const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
      _mm256_storeu_pd(yd + 2 * i, cmul_acc(yv, a_re, a_im, xv));
    }
    if (i < n) y[i] += alpha * x[i];
  } else {
    const __m256d b_re = _mm256_set1_pd(beta.real());
    const __m256d b_im = _mm256_set1_pd(beta.imag());
    for (; i < n2; i += 2) {
      const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
      const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
      _mm256_storeu_pd(yd + 2 * i, cmul_acc(cmul(b_re, b_im, yv), a_re, a_im, xv));
    }
    if (i < n) y[i] = alpha * x[i] + beta * y[i];
  }
}

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const __m256d negmask = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
  const std::size_t n2 = n & ~std::size_t(1);
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    const __m256d xswap = _mm256_permute_pd(xv, 0x5);
    acc_im = _mm256_add_pd(acc_im, _mm256_xor_pd(_mm256_mul_pd(xswap, yv), negmask));
  }
  alignas(32) double tmp[4];
  _mm256_store_pd(tmp, acc_re);
  double re = tmp[0] + tmp[1] + tmp[2] + tmp[3];
  _mm256_store_pd(tmp, acc_im);
  double im = tmp[0] + tmp[1] + tmp[2] + tmp[3];
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace steincq::kernels::detail

#endif  // x86-64
