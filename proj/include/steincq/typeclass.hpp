#pragma once

#include <cstdint>
#include <vector>

namespace steincq {

// Occupation signature of a classical string of length n over a k-letter
// alphabet. Permutation symmetry reduces enumeration over k^n strings to
// enumeration over types.
struct TypeClass {
  std::size_t n = 0;
  std::vector<std::size_t> counts;  // one entry per letter, sums to n
  std::uint64_t multiplicity = 0;   // multinomial(n; counts)

  // A string with the given occupation, letters sorted ascending.
  std::vector<std::size_t> representative() const;
};

// All compositions of n into k parts with multiplicities. Guarded:
// C(n+k-1, k-1) > 1e6 compositions or multinomial overflow throw.
std::vector<TypeClass> enumerate_types(std::size_t n, std::size_t k);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);  // overflow-checked

}  // namespace steincq
