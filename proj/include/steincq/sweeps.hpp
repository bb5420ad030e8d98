#pragma once

#include <vector>

#include "steincq/channel_divergences.hpp"

namespace steincq {

struct SweepRow {
  std::size_t n = 0;
  double dh_over_n = 0.0;    // classical-input lower bound on (1/n) D_H^eps
  double d_over_n = 0.0;     // (1/n) of the relative-entropy distance to the set
  double upper_bound = 0.0;  // the Renyi strong-converse bound at the chosen alpha
  double wall_ms = 0.0;
};

// D_H^eps(rho||sigma) <= renyi_alpha(rho||sigma) + (alpha/(alpha-1)) log(1/(1-eps)).
double renyi_dh_bound_offset(double alpha, double eps);

enum class SweepFamily { singleton, replacer };

// One row per n in 1..n_max for the IID channel e^{(x)n} against the family's
// n-fold set. Singleton families pair e against f_base^{(x)n}. The Renyi
// bound column evaluates the per-letter additive bound at the base level.
std::vector<SweepRow> sweep_gqsl(const CqChannel& e_base, SweepFamily family,
                                 const CqChannel* f_base, double eps, double alpha,
                                 std::size_t n_max, double tol = 1e-8);

// State-level Stein rows: (1/n) D_H^eps(rho^n || sigma^n) against the flat
// D(rho||sigma) line and the Renyi bound.
std::vector<SweepRow> sweep_stein(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  double eps, double alpha, std::size_t n_max);

}  // namespace steincq
