#include "steincq/state.hpp"

#include <cmath>

#include "steincq/eigen.hpp"
#include "steincq/errors.hpp"

namespace steincq {

DensityMatrix::DensityMatrix(Matrix m) : m_(std::make_shared<const Matrix>(std::move(m))) {}

const Matrix& DensityMatrix::matrix() const {
  static const Matrix empty;
  return m_ ? *m_ : empty;
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
  Matrix m = Matrix::identity(d);
  m *= cplx(1.0 / static_cast<double>(d), 0.0);
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const std::vector<cplx>& v) {
  double norm2 = 0.0;
  for (const cplx& c : v) norm2 += std::norm(c);
  if (norm2 <= 0.0) fail(Errc::not_psd, "zero vector cannot define a pure state");
  Matrix m = Matrix::outer(v);
  m *= cplx(1.0 / norm2, 0.0);
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::classical(const std::vector<double>& p) {
  double s = 0.0;
  for (double v : p) {
    if (v < -kPsdTol) fail(Errc::not_psd, "negative probability");
    s += v;
  }
  if (std::abs(s - 1.0) > kTraceTol) fail(Errc::trace_mismatch, "probabilities must sum to 1");
  return DensityMatrix(Matrix::diagonal(p));
}

DensityMatrix DensityMatrix::basis_state(std::size_t d, std::size_t i) {
  if (i >= d) fail(Errc::dimension_mismatch, "basis index out of range");
  Matrix m(d, d);
  m(i, i) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::trusted(Matrix m) { return DensityMatrix(std::move(m)); }

DensityMatrix DensityMatrix::tensor(const DensityMatrix& o) const {
  return DensityMatrix(matrix().kron(o.matrix()));
}

DensityMatrix validate_density(const Matrix& raw) {
  if (!raw.square()) fail(Errc::dimension_mismatch, "density matrix must be square");
  const double herm_dev = raw.hermitian_deviation();
  if (herm_dev > kHermitianTol)
    fail(Errc::not_hermitian, "hermitian deviation " + std::to_string(herm_dev));

  Matrix sym = raw;
  if (herm_dev > 0.0) {
    Matrix adj = raw.adjoint();
    sym += adj;
    sym *= cplx(0.5, 0.0);
  }

  const EigResult e = eigh(sym);
  for (double v : e.values)
    if (v < -kPsdTol) fail(Errc::not_psd, "eigenvalue " + std::to_string(v));

  // clamping rewrites the matrix only when a repair is actually needed, so
  // clean inputs round-trip bit-exactly
  Matrix out = e.values.front() < 0.0
                   ? map_eigenvalues(e, [](double v) { return v < 0.0 ? 0.0 : v; })
                   : std::move(sym);
  const double tr = out.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol)
    fail(Errc::trace_mismatch, "trace " + std::to_string(tr));
  return DensityMatrix::trusted(std::move(out));
}

}  // namespace steincq
