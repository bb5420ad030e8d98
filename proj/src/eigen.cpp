#include "steincq/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "steincq/errors.hpp"

#include <lapacke.h>

namespace steincq {

namespace {

EigResult eigh_impl(const Matrix& a, bool vectors) {
  if (!a.square()) fail(Errc::dimension_mismatch, "eigh needs a square matrix");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  EigResult r;
  r.values.resize(a.rows());
  if (n == 0) return r;
  if (!vectors && a.is_exactly_diagonal()) {
    r.values = a.real_diagonal();
    std::sort(r.values.begin(), r.values.end());
    return r;
  }
  Matrix work = a;
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_ROW_MAJOR, vectors ? 'V' : 'N', 'L', n,
      reinterpret_cast<lapack_complex_double*>(work.data()), n, r.values.data());
  if (info != 0) fail(Errc::convergence_failure, "zheevd failed, info=" + std::to_string(info));
  if (vectors) r.vectors = std::move(work);
  return r;
}

}  // namespace

std::vector<cplx> EigResult::vector(std::size_t j) const {
  std::vector<cplx> v(vectors.rows());
  for (std::size_t i = 0; i < vectors.rows(); ++i) v[i] = vectors(i, j);
  return v;
}

EigResult eigh(const Matrix& a) { return eigh_impl(a, true); }

std::vector<double> eigvalsh(const Matrix& a) { return eigh_impl(a, false).values; }

Matrix map_eigenvalues(const EigResult& e, const std::function<double(double)>& f) {
  const std::size_t n = e.values.size();
  Matrix scaled(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double fj = f(e.values[j]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) = e.vectors(i, j) * fj;
  }
  return scaled * e.vectors.adjoint();
}

Matrix eigenspace_projector(const EigResult& e, const std::vector<std::size_t>& idx) {
  const std::size_t n = e.values.size();
  Matrix cols(n, idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) cols(i, c) = e.vectors(i, idx[c]);
  return cols * cols.adjoint();
}

double trace_norm(const Matrix& a) {
  if (a.max_abs() == 0.0) return 0.0;
  double s = 0.0;
  for (double v : eigvalsh(a)) s += std::abs(v);
  return s;
}

Matrix positive_part(const Matrix& a) {
  const EigResult e = eigh(a);
  return map_eigenvalues(e, [](double v) { return v > 0.0 ? v : 0.0; });
}

double min_eigenvalue(const Matrix& a) { return eigvalsh(a).front(); }

double max_eigenvalue(const Matrix& a) { return eigvalsh(a).back(); }

}  // namespace steincq
