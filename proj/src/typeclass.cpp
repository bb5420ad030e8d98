#include "steincq/typeclass.hpp"

#include "steincq/errors.hpp"

namespace steincq {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(Errc::combinatorial_overflow, "multinomial overflow");
  return r;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  // r * (n-k+i) is divisible by i at every step
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = checked_mul(r, n - k + i);
    r /= i;
  }
  return r;
}

std::vector<std::size_t> TypeClass::representative() const {
  std::vector<std::size_t> s;
  s.reserve(n);
  for (std::size_t letter = 0; letter < counts.size(); ++letter)
    for (std::size_t c = 0; c < counts[letter]; ++c) s.push_back(letter);
  return s;
}

std::vector<TypeClass> enumerate_types(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1) fail(Errc::dimension_mismatch, "need n >= 1, k >= 1");
  const std::uint64_t count = binomial(n + k - 1, k - 1);
  if (count > 1000000) fail(Errc::combinatorial_overflow, "too many compositions");

  std::vector<TypeClass> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> counts(k, 0);
  counts[0] = n;
  while (true) {
    TypeClass t;
    t.n = n;
    t.counts = counts;
    std::uint64_t mult = 1, rem = n;
    for (std::size_t c : counts) {
      mult = checked_mul(mult, binomial(rem, c));
      rem -= c;
    }
    t.multiplicity = mult;
    out.push_back(std::move(t));

    // next composition in colex order: move one unit from the leftmost
    // positive prefix into the next slot
    std::size_t i = 0;
    while (i + 1 < k && counts[i] == 0) ++i;
    if (i + 1 >= k) break;
    const std::size_t head = counts[i];
    counts[i] = 0;
    counts[0] = head - 1;
    counts[i + 1] += 1;
  }
  return out;
}

}  // namespace steincq
