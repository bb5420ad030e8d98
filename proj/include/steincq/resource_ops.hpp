#pragma once

#include <optional>

#include "steincq/channel_divergences.hpp"

namespace steincq {

// E = (1+r) F - r E' with F free: the convex split certifying the robustness.
struct RobustnessDecomposition {
  CqChannel free_channel;  // F
  CqChannel complement;    // E'
  double r = 0.0;
};

RobustnessDecomposition robustness_decompose(const CqChannel& e, const FreeSetDescriptor& s);

// D_max-smoothed IID channel: per-letter projection onto the complement of the
// bad eigenspace of the pinched Choi state, with a free compensator restoring
// trace preservation.
struct SmoothedChannel {
  CqChannel channel;               // smoothed E over X^{km}
  std::vector<Matrix> projectors;  // per-letter cut projectors P_k^(x)
  double dmax_bound = 0.0;         // kmR + log|spec J(F_m^k)|
  std::size_t spec_count = 0;      // |spec J(F_m^k)|
  std::size_t copies = 0;          // km
};

// e: single-copy channel; f_m: free channel over X^m (m inferred); R > 0 the
// target rate; k tensor copies of f_m. The compensator defaults to f_m itself
// when its Choi has full rank (m = 1), else to the completely depolarizing
// channel.
SmoothedChannel smooth_channel(const CqChannel& e, const CqChannel& f_m, double R, std::size_t k,
                               std::optional<CqChannel> compensator = std::nullopt);

// Measure-and-prepare superchannel: probe the tested channel classically, test
// the output against Lambda, output one of two fixed channels.
struct SuperchannelRecipe {
  Matrix test_operator;  // Lambda on the tested channel's output space
  std::size_t probe_letter = 0;
  CqChannel channel_if_pass;
  CqChannel channel_if_fail;
};

SuperchannelRecipe build_superchannel(Matrix lambda, std::size_t probe_letter, CqChannel pass,
                                      CqChannel fail);

// Theta(N) = Tr[Lambda N(probe)] pass + (1 - Tr[Lambda N(probe)]) fail.
CqChannel apply_superchannel(const SuperchannelRecipe& theta, const CqChannel& n);

// Robustness generated on a free input, with the bound
// log((1-t)/(1-e^{-s})), s = D_max(pass||S), t = Tr[Lambda F(probe)]. The
// bound is absent when pass/fail are not a robustness-decomposition pair.
struct ArngDeficit {
  double deficit = 0.0;
  std::optional<double> bound;
};

ArngDeficit arng_deficit(const SuperchannelRecipe& theta, const CqChannel& f,
                         const FreeSetDescriptor& s);

// lhs = (1/2)||rho - sqrt(L) rho sqrt(L)||_1, rhs = sqrt(eps) + eps/2 with
// eps = 1 - Tr(L rho).
struct GentleMeasurement {
  double lhs = 0.0;
  double rhs = 0.0;
};

GentleMeasurement gentle_measurement_check(const DensityMatrix& rho, const Matrix& lambda_op);

}  // namespace steincq
