#pragma once

#include <limits>

#include "steincq/state.hpp"

namespace steincq {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Umegaki relative entropy Tr(rho log rho - rho log sigma), natural log.
// +inf when rho is not supported inside sigma.
double rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

// Sandwiched Renyi divergence, alpha > 1.
double sandwiched_renyi(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha);

// Max-relative entropy log inf{lambda : rho <= lambda sigma}. The PSD overload
// accepts subnormalized operators.
double dmax(const DensityMatrix& rho, const DensityMatrix& sigma);
double dmax_psd(const Matrix& rho, const Matrix& sigma);

// (1/2)||rho - sigma||_1.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Optimized binary test for D_H^eps with a duality certificate.
struct TestResult {
  double value = 0.0;       // -log beta*, nats; +inf when a test off supp(sigma) suffices
  Matrix optimal_test;      // M with 0 <= M <= 1
  double dual_multiplier = 0.0;
  double duality_gap = 0.0;
};

// D_H^eps(rho||sigma) by supergradient bisection on the concave dual
// g(mu) = mu(1-eps) - Tr[(mu rho - sigma)_+]; the optimal test mixes the
// zero eigenspace so Tr(M rho) = 1 - eps exactly.
TestResult hypothesis_test(const DensityMatrix& rho, const DensityMatrix& sigma, double eps);

// gap = D(rho||sigma) - D(E(rho)||sigma) for the pinching E of sigma;
// bound = log k. 0 <= gap <= bound.
struct PinchingGap {
  double gap = 0.0;
  double bound = 0.0;
};
PinchingGap pinching_entropy_gap(const DensityMatrix& rho, const DensityMatrix& sigma);

// Tr[(1 - Pi_sigma) rho]: the rho-mass outside sigma's support.
double mass_off_support(const Matrix& rho, const Matrix& sigma);

}  // namespace steincq
