#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "steincq/matrix.hpp"

namespace steincq {

// Permutation pi of {0..n-1} acting on n tensor factors. The induced unitary
// P(pi) sends |x_1..x_n> to |y_1..y_n> with y_{pi(j)} = x_j, i.e. factor j
// moves to slot pi(j).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> map);

  static Permutation identity(std::size_t n);
  static Permutation swap_two(std::size_t n, std::size_t a, std::size_t b);
  static Permutation random(std::size_t n, std::mt19937_64& rng);
  // All n! elements; guarded at n <= 8.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const { return map_.size(); }
  std::size_t operator()(std::size_t j) const { return map_[j]; }

  Permutation inverse() const;
  // Apply this first, then other (left-to-right composition).
  Permutation then(const Permutation& other) const;
  bool is_identity() const;

  std::vector<std::size_t> apply_to_string(const std::vector<std::size_t>& s) const;

  // Basis-index action of P(pi) on (C^d)^{tensor n}: index of P(pi)|I>.
  std::size_t apply_to_index(std::size_t index, std::size_t local_dim) const;

  // P(pi) rho P(pi)^dagger via index remapping.
  Matrix conjugate(const Matrix& rho, std::size_t local_dim) const;

 private:
  std::vector<std::size_t> map_;  // map_[j] = pi(j)
};

// Digits of index in base `dim`, most significant factor first; length n.
std::vector<std::size_t> index_to_string(std::size_t index, std::size_t dim, std::size_t n);
std::size_t string_to_index(const std::vector<std::size_t>& s, std::size_t dim);

// n with d = base^n exactly; throws otherwise.
std::size_t exact_log(std::size_t d, std::size_t base);

}  // namespace steincq
