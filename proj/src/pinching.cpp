#include "steincq/pinching.hpp"

#include <cmath>

#include "steincq/errors.hpp"

namespace steincq {

PinchingMap::PinchingMap(std::vector<Matrix> projectors) : projectors_(std::move(projectors)) {
  if (projectors_.empty()) fail(Errc::shape_mismatch, "pinching needs at least one projector");
}

Matrix PinchingMap::apply(const Matrix& rho) const {
  if (rho.rows() != dim() || !rho.square())
    fail(Errc::dimension_mismatch, "pinching dimension mismatch");
  Matrix out(dim(), dim());
  for (const Matrix& p : projectors_) out += p * rho * p;
  return out;
}

std::vector<std::size_t> cluster_ascending(const std::vector<double>& sorted_values,
                                           double cluster_tol, std::size_t* k_out) {
  std::vector<std::size_t> id(sorted_values.size(), 0);
  if (sorted_values.empty()) {
    if (k_out) *k_out = 0;
    return id;
  }
  double scale = std::abs(sorted_values.back());
  for (double v : sorted_values) scale = std::max(scale, std::abs(v));
  const double gap = cluster_tol * std::max(scale, 1e-300);
  std::size_t k = 0;
  for (std::size_t i = 1; i < sorted_values.size(); ++i) {
    if (sorted_values[i] - sorted_values[i - 1] > gap) ++k;
    id[i] = k;
  }
  if (k_out) *k_out = k + 1;
  return id;
}

PinchingMap pinching_of(const DensityMatrix& sigma, double cluster_tol) {
  const EigResult e = eigh(sigma.matrix());
  std::size_t k = 0;
  const std::vector<std::size_t> id = cluster_ascending(e.values, cluster_tol, &k);
  std::vector<std::vector<std::size_t>> groups(k);
  for (std::size_t i = 0; i < id.size(); ++i) groups[id[i]].push_back(i);
  std::vector<Matrix> projectors;
  projectors.reserve(k);
  for (const auto& g : groups) projectors.push_back(eigenspace_projector(e, g));
  return PinchingMap(std::move(projectors));
}

}  // namespace steincq
