#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "steincq/kernels.hpp"

namespace steincq {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Arithmetic hot paths go through
// steincq::kernels.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  static Matrix diagonal(const std::vector<double>& d);
  // |v><v| for a (not necessarily normalized) column vector v.
  static Matrix outer(const std::vector<cplx>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  Matrix adjoint() const;
  Matrix transpose() const;
  cplx trace() const;
  double max_abs() const;
  double hermitian_deviation() const;  // max |a_ij - conj(a_ji)|
  bool is_exactly_diagonal() const;
  std::vector<double> real_diagonal() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cplx s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);  // matmul

  Matrix kron(const Matrix& b) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> data_;
};

// Tr[a^dagger b].
cplx hs_inner(const Matrix& a, const Matrix& b);

// Re Tr[a b] for Hermitian a, b.
double trace_product(const Matrix& a, const Matrix& b);

// a v for a column vector v.
std::vector<cplx> matvec(const Matrix& a, const std::vector<cplx>& v);

// Partial trace over the second (dims = da x db) or first factor.
Matrix partial_trace_second(const Matrix& m, std::size_t da, std::size_t db);
Matrix partial_trace_first(const Matrix& m, std::size_t da, std::size_t db);

// Partial transpose on the second factor of a (da*db) x (da*db) matrix.
Matrix partial_transpose_second(const Matrix& m, std::size_t da, std::size_t db);

}  // namespace steincq
