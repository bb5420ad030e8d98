#pragma once

#include <optional>

#include "steincq/free_sets.hpp"

namespace steincq {

enum class DivKind { umegaki, renyi, dmax };

struct ChannelDivergenceResult {
  double value = 0.0;
  std::size_t arg_input = 0;      // maximizing classical letter
  bool lower_bound_only = false;  // set for classical-input D_H enumeration
  std::optional<CqChannel> witness;
};

// Channel divergence via the classical-input reduction: for jointly
// quasi-convex, additive, faithful divergences the entangled-input supremum is
// attained at a classical letter.
ChannelDivergenceResult channel_divergence(DivKind kind, const CqChannel& e, const CqChannel& f,
                                           double alpha = 2.0);

// Diamond distance between c-q channels: max over letters of the full trace
// norm of the output difference. Range [0, 2].
double diamond_distance(const CqChannel& e, const CqChannel& f);

// ||J(E) - J(F)||_1 of the normalized Choi states, computed blockwise.
double choi_trace_distance(const CqChannel& e, const CqChannel& f);

// inf over the free set of the channel divergence, by the set-specific
// certified routine. tol drives the replacer Blahut-Arimoto bracket.
ChannelDivergenceResult divergence_to_set(DivKind kind, const CqChannel& e,
                                          const FreeSetDescriptor& s, double alpha = 2.0,
                                          double tol = 1e-8);

enum class InputMode { classical_exhaustive, classical_types };

// max over enumerated classical inputs of inf_{F in S} D_H^eps. The classical
// enumeration is a lower bound on the entangled-input quantity; the result is
// flagged accordingly.
ChannelDivergenceResult hypothesis_test_channel(const CqChannel& e, const FreeSetDescriptor& s,
                                                double eps, InputMode mode);

// |inf-sup - sup-inf| for set kinds with both optimization orders implemented.
double minimax_gap(const CqChannel& e, const FreeSetDescriptor& s, double tol = 1e-6);

}  // namespace steincq
