#include "steincq/random.hpp"

#include <cmath>
#include <complex>

namespace steincq {

Matrix random_ginibre(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  const Matrix g = random_ginibre(dim, dim, rng);
  Matrix rho = g * g.adjoint();
  rho *= cplx(1.0 / rho.trace().real(), 0.0);
  // exact Hermiticity; the product carries ~1e-17 rounding asymmetry
  for (std::size_t i = 0; i < dim; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < dim; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return DensityMatrix::trusted(std::move(rho));
}

DensityMatrix random_pure(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> v(dim);
  for (cplx& c : v) c = cplx(g(rng), g(rng));
  return DensityMatrix::pure(v);
}

Matrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  Matrix g = random_ginibre(dim, dim, rng);
  // Gram-Schmidt on columns
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      cplx ip = 0.0;
      for (std::size_t i = 0; i < dim; ++i) ip += std::conj(g(i, k)) * g(i, j);
      for (std::size_t i = 0; i < dim; ++i) g(i, j) -= ip * g(i, k);
    }
    double n2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) n2 += std::norm(g(i, j));
    const double inv = 1.0 / std::sqrt(n2);
    for (std::size_t i = 0; i < dim; ++i) g(i, j) *= inv;
  }
  return g;
}

std::vector<double> random_distribution(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> p(n);
  double s = 0.0;
  for (double& v : p) {
    v = u(rng);
    s += v;
  }
  for (double& v : p) v /= s;
  return p;
}

void random_commuting_pair(std::size_t dim, std::mt19937_64& rng, DensityMatrix* rho,
                           DensityMatrix* sigma) {
  const Matrix u = random_unitary(dim, rng);
  const std::vector<double> p = random_distribution(dim, rng);
  const std::vector<double> q = random_distribution(dim, rng);
  *rho = DensityMatrix::trusted(u * Matrix::diagonal(p) * u.adjoint());
  *sigma = DensityMatrix::trusted(u * Matrix::diagonal(q) * u.adjoint());
}

CqChannel random_channel(std::size_t alphabet, std::size_t out_dim, std::mt19937_64& rng) {
  std::vector<DensityMatrix> outs;
  outs.reserve(alphabet);
  for (std::size_t x = 0; x < alphabet; ++x) outs.push_back(random_density(out_dim, rng));
  return CqChannel(alphabet, out_dim, std::move(outs));
}

}  // namespace steincq
