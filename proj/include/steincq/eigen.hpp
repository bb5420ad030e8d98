#pragma once

#include <functional>
#include <vector>

#include "steincq/matrix.hpp"

namespace steincq {

struct EigResult {
  std::vector<double> values;  // ascending
  Matrix vectors;              // eigenvector j = column j; empty when values-only

  std::vector<cplx> vector(std::size_t j) const;
};

// Hermitian eigendecomposition (LAPACK zheevd). The strict upper triangle is
// ignored; callers pass matrices that are Hermitian up to round-off.
EigResult eigh(const Matrix& a);

// Eigenvalues only, ascending.
std::vector<double> eigvalsh(const Matrix& a);

// U f(diag) U^dagger from a decomposition.
Matrix map_eigenvalues(const EigResult& e, const std::function<double(double)>& f);

// Projector onto the span of eigenvectors with the given indices.
Matrix eigenspace_projector(const EigResult& e, const std::vector<std::size_t>& idx);

// sum of |eigenvalues|.
double trace_norm(const Matrix& a);

// Positive part (A)_+ = sum_{lambda>0} lambda |v><v|.
Matrix positive_part(const Matrix& a);

double min_eigenvalue(const Matrix& a);
double max_eigenvalue(const Matrix& a);

}  // namespace steincq
