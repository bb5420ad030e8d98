#include "steincq/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "steincq/errors.hpp"

namespace steincq {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::outer(const std::vector<cplx>& v) {
  const std::size_t n = v.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

cplx Matrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const cplx& v : data_) m = std::max(m, std::max(std::abs(v.real()), std::abs(v.imag())));
  return m;
}

double Matrix::hermitian_deviation() const {
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

bool Matrix::is_exactly_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != cplx(0.0, 0.0)) return false;
  return true;
}

std::vector<double> Matrix::real_diagonal() const {
  std::vector<double> d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i).real();
  return d;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::dimension_mismatch, "matrix add shape");
  kernels::axpby(1.0, o.data(), 1.0, data(), size());
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::dimension_mismatch, "matrix sub shape");
  kernels::axpby(-1.0, o.data(), 1.0, data(), size());
  return *this;
}

Matrix& Matrix::operator*=(cplx s) {
  kernels::axpby(0.0, data(), s, data(), size());
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(Errc::dimension_mismatch, "matmul shape");
  Matrix c(a.rows(), b.cols());
  kernels::gemm(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
  return c;
}

Matrix Matrix::kron(const Matrix& b) const {
  Matrix out(rows_ * b.rows_, cols_ * b.cols_);
  kernels::kron(data(), rows_, cols_, b.data(), b.rows_, b.cols_, out.data());
  return out;
}

cplx hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::dimension_mismatch, "hs_inner shape");
  return kernels::dotc(a.data(), b.data(), a.size());
}

double trace_product(const Matrix& a, const Matrix& b) {
  // Tr[a b] = sum_ij a_ij conj(b_ij) when b is Hermitian.
  return hs_inner(b, a).real();
}

std::vector<cplx> matvec(const Matrix& a, const std::vector<cplx>& v) {
  if (a.cols() != v.size()) fail(Errc::dimension_mismatch, "matvec shape");
  std::vector<cplx> out(a.rows());
  kernels::gemm(a.data(), v.data(), out.data(), a.rows(), a.cols(), 1);
  return out;
}

Matrix partial_trace_second(const Matrix& m, std::size_t da, std::size_t db) {
  if (m.rows() != da * db || !m.square()) fail(Errc::dimension_mismatch, "partial trace shape");
  Matrix out(da, da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < db; ++k) s += m(i * db + k, j * db + k);
      out(i, j) = s;
    }
  return out;
}

Matrix partial_trace_first(const Matrix& m, std::size_t da, std::size_t db) {
  if (m.rows() != da * db || !m.square()) fail(Errc::dimension_mismatch, "partial trace shape");
  Matrix out(db, db);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < da; ++k) s += m(k * db + i, k * db + j);
      out(i, j) = s;
    }
  return out;
}

Matrix partial_transpose_second(const Matrix& m, std::size_t da, std::size_t db) {
  if (m.rows() != da * db || !m.square()) fail(Errc::dimension_mismatch, "partial transpose shape");
  Matrix out(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = m(i * db + l, j * db + k);
  return out;
}

}  // namespace steincq
