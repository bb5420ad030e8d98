#pragma once

#include "steincq/resource_ops.hpp"

namespace steincq {

// The fixed two-letter qubit channels used throughout the worked examples:
// e1 sends 0 to |0><0| and 1 to the maximally mixed state; e2 sends every
// letter to |0><0|; f is the completely depolarizing channel.
CqChannel example_channel_e1();
CqChannel example_channel_e2();
CqChannel example_channel_depolarizing();

// Relative entropy of resource vs the singleton depolarizing set, both
// channel-level (R) and Choi-level (R~), for e1 and e2.
struct ResourceQuartet {
  double r_e1 = 0.0;
  double rtilde_e1 = 0.0;
  double r_e2 = 0.0;
  double rtilde_e2 = 0.0;
};
ResourceQuartet resource_quartet();

// n-copy channels whose outputs differ only at the all-ones input, plus the
// superchannel forcing that input. Their Choi distance decays as 2^{1-n}
// while the diamond distance stays 2; the superchannel restores Choi
// distance 2 without ever generating resource.
CqChannel orthogonal_pair_first(std::size_t n);   // all letters -> |0..0>
CqChannel orthogonal_pair_second(std::size_t n);  // all-ones letter -> |1..1>

// Theta_n(N) = N composed with the all-ones replacer pre-processing,
// expressed as a measure-and-prepare recipe for the given tested channel.
SuperchannelRecipe force_all_ones_superchannel(const CqChannel& tested);

struct SuperchannelSeparationRow {
  std::size_t n = 0;
  double choi_dist = 0.0;       // 2^{1-n}
  double diamond_dist = 0.0;    // 2
  double post_choi_dist = 0.0;  // 2
  double deficit = 0.0;         // 0
};
SuperchannelSeparationRow superchannel_separation_row(std::size_t n);

}  // namespace steincq
