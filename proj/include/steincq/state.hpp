#pragma once

#include <memory>
#include <vector>

#include "steincq/matrix.hpp"

namespace steincq {

// Validated Hermitian PSD unit-trace matrix. Construction goes through
// validate_density (symmetrization + eigenvalue clamping) or, for matrices
// that are valid by construction, through trusted(). Immutable after
// construction; copies share storage.
class DensityMatrix {
 public:
  DensityMatrix() = default;

  const Matrix& matrix() const;
  std::size_t dim() const { return m_ ? m_->rows() : 0; }
  bool shares_storage(const DensityMatrix& o) const { return m_ == o.m_; }
  const void* storage_key() const { return m_.get(); }

  static DensityMatrix maximally_mixed(std::size_t d);
  static DensityMatrix pure(const std::vector<cplx>& v);  // normalizes v
  static DensityMatrix classical(const std::vector<double>& p);
  static DensityMatrix basis_state(std::size_t d, std::size_t i);

  // No validation; for outputs of operations that preserve validity.
  static DensityMatrix trusted(Matrix m);

  DensityMatrix tensor(const DensityMatrix& o) const;

 private:
  explicit DensityMatrix(Matrix m);
  std::shared_ptr<const Matrix> m_;
};

// Symmetrizes, clamps eigenvalues in [-1e-10, 0] to 0, and checks the
// DensityMatrix invariants. Throws NotHermitian / NotPSD / TraceMismatch.
DensityMatrix validate_density(const Matrix& raw);

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kSupportRelTol = 1e-12;  // eigenvalues below this x lambda_max: off support

}  // namespace steincq
