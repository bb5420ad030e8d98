#include "steincq/kernels.hpp"

namespace steincq::kernels::detail {

void gemm_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
                 std::size_t n) {
  for (std::size_t i = 0; i < m * n; ++i) c[i] = cplx(0.0, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = a + i * k;
    cplx* crow = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const cplx av = arow[l];
      if (av.real() == 0.0 && av.imag() == 0.0) continue;
      const cplx* brow = b + l * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void kron_scalar(const cplx* a, std::size_t ar, std::size_t ac, const cplx* b, std::size_t br,
                 std::size_t bc, cplx* out) {
  const std::size_t oc = ac * bc;
  for (std::size_t i1 = 0; i1 < ar; ++i1)
    for (std::size_t i2 = 0; i2 < br; ++i2) {
      cplx* orow = out + (i1 * br + i2) * oc;
      const cplx* brow = b + i2 * bc;
      for (std::size_t j1 = 0; j1 < ac; ++j1) {
        const cplx av = a[i1 * ac + j1];
        cplx* oblk = orow + j1 * bc;
        for (std::size_t j2 = 0; j2 < bc; ++j2) oblk[j2] = av * brow[j2];
      }
    }
}

void axpby_scalar(cplx alpha, const cplx* x, cplx beta, cplx* y, std::size_t n) {
  if (beta == cplx(1.0, 0.0)) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
  } else {
    for (std::size_t i = 0; i < n; ++i) y[i] = alpha * x[i] + beta * y[i];
  }
}

cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

}  // namespace steincq::kernels::detail
