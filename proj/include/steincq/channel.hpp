#pragma once

#include <vector>

#include "steincq/permutation.hpp"
#include "steincq/state.hpp"

namespace steincq {

// Classical-quantum channel: one output state per classical letter.
class CqChannel {
 public:
  CqChannel() = default;
  CqChannel(std::size_t alphabet_size, std::size_t out_dim, std::vector<DensityMatrix> outputs);

  std::size_t alphabet_size() const { return alphabet_; }
  std::size_t out_dim() const { return out_dim_; }
  const Matrix& output(std::size_t x) const { return outputs_[x].matrix(); }
  const DensityMatrix& output_state(std::size_t x) const { return outputs_[x]; }

  // Output state is sigma for every letter.
  static CqChannel replacer(std::size_t alphabet_size, const DensityMatrix& sigma);
  // Replacer onto the maximally mixed state.
  static CqChannel depolarizing(std::size_t alphabet_size, std::size_t out_dim);

  bool same_shape(const CqChannel& o) const {
    return alphabet_ == o.alphabet_ && out_dim_ == o.out_dim_;
  }

 private:
  std::size_t alphabet_ = 0, out_dim_ = 0;
  std::vector<DensityMatrix> outputs_;
};

// Channel action on a state on R (x) X; ref_dim = 1 means no reference.
// Output lives on R (x) A.
DensityMatrix cq_apply(const CqChannel& channel, const DensityMatrix& input, std::size_t ref_dim);

CqChannel tensor_channel(const CqChannel& a, const CqChannel& b);
CqChannel tensor_power(const CqChannel& a, std::size_t n);

// (pi . F)(|x><x|) = P_A(pi)^dagger F(|pi x><pi x|) P_A(pi) for a channel over
// X^n -> A^n with the given single-copy dimensions.
CqChannel permute_channel(const Permutation& pi, const CqChannel& channel,
                          std::size_t base_alphabet, std::size_t base_out_dim);

// Orbit average (1/n!) sum_pi (pi . F); permutation covariant. n > 8 rejected.
CqChannel symmetrize_channel(const CqChannel& channel, std::size_t base_alphabet,
                             std::size_t base_out_dim);

// Convex mixture of two channels with the same shape.
CqChannel mix_channels(double w, const CqChannel& a, const CqChannel& b);

// Block-structured Choi state of a c-q channel:
//   J = sum_x (1/|X|) |x><x| (x) omega_x.
// Kept blockwise; the dense matrix is materialized on demand (guarded).
class ChoiState {
 public:
  ChoiState() = default;
  ChoiState(std::size_t in_dim, std::size_t out_dim, std::vector<Matrix> blocks);

  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }
  double classical_weight() const { return 1.0 / static_cast<double>(in_dim_); }
  // Block x = (1/|X|) omega_x.
  const Matrix& block(std::size_t x) const { return blocks_[x]; }

  // Guarded at in_dim*out_dim <= 4096.
  Matrix dense() const;

 private:
  std::size_t in_dim_ = 0, out_dim_ = 0;
  std::vector<Matrix> blocks_;
};

ChoiState choi(const CqChannel& channel);

// Rebuild the channel from the Choi blocks.
CqChannel channel_from_choi(const ChoiState& j);

// Extract the c-q Choi blocks of a dense matrix on X (x) A; off-block mass
// above tol throws ShapeMismatch.
ChoiState choi_from_dense(const Matrix& m, std::size_t in_dim, std::size_t out_dim,
                          double off_block_tol = 1e-12);

}  // namespace steincq
