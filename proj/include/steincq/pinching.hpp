#pragma once

#include <vector>

#include "steincq/eigen.hpp"
#include "steincq/state.hpp"

namespace steincq {

// Dephasing with respect to a family of mutually orthogonal projectors that
// sum to the identity. E(rho) = sum_j P_j rho P_j.
class PinchingMap {
 public:
  PinchingMap() = default;
  explicit PinchingMap(std::vector<Matrix> projectors);

  std::size_t dim() const { return projectors_.empty() ? 0 : projectors_[0].rows(); }
  std::size_t cluster_count() const { return projectors_.size(); }  // k
  const std::vector<Matrix>& projectors() const { return projectors_; }

  Matrix apply(const Matrix& rho) const;

 private:
  std::vector<Matrix> projectors_;
};

inline constexpr double kClusterTol = 1e-9;

// Pinching with respect to sigma's eigenprojectors; eigenvalues whose gap is
// below cluster_tol (relative to the spectral range) merge into one cluster.
PinchingMap pinching_of(const DensityMatrix& sigma, double cluster_tol = kClusterTol);

// Cluster boundaries of an ascending value list under the same rule; returns
// the cluster id per entry and the number of clusters.
std::vector<std::size_t> cluster_ascending(const std::vector<double>& sorted_values,
                                           double cluster_tol, std::size_t* k_out);

}  // namespace steincq
