#include "steincq/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "steincq/errors.hpp"

namespace steincq {

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t v : map_) {
    if (v >= map_.size() || seen[v]) fail(Errc::dimension_mismatch, "not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return Permutation(std::move(m));
}

Permutation Permutation::swap_two(std::size_t n, std::size_t a, std::size_t b) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  std::swap(m[a], m[b]);
  return Permutation(std::move(m));
}

Permutation Permutation::random(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  std::shuffle(m.begin(), m.end(), rng);
  return Permutation(std::move(m));
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  if (n > 8) fail(Errc::enumeration_too_large, "n! enumeration capped at n = 8");
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t j = 0; j < map_.size(); ++j) inv[map_[j]] = j;
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.size() != size()) fail(Errc::dimension_mismatch, "permutation size mismatch");
  std::vector<std::size_t> m(size());
  for (std::size_t j = 0; j < size(); ++j) m[j] = other.map_[map_[j]];
  return Permutation(std::move(m));
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < map_.size(); ++j)
    if (map_[j] != j) return false;
  return true;
}

std::vector<std::size_t> Permutation::apply_to_string(const std::vector<std::size_t>& s) const {
  if (s.size() != map_.size()) fail(Errc::dimension_mismatch, "string length mismatch");
  std::vector<std::size_t> out(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) out[map_[j]] = s[j];
  return out;
}

std::size_t Permutation::apply_to_index(std::size_t index, std::size_t local_dim) const {
  return string_to_index(apply_to_string(index_to_string(index, local_dim, map_.size())),
                         local_dim);
}

Matrix Permutation::conjugate(const Matrix& rho, std::size_t local_dim) const {
  std::size_t dim = 1;
  for (std::size_t j = 0; j < map_.size(); ++j) dim *= local_dim;
  if (rho.rows() != dim || !rho.square())
    fail(Errc::dimension_mismatch, "matrix does not match permutation space");
  std::vector<std::size_t> idx(dim);
  for (std::size_t i = 0; i < dim; ++i) idx[i] = apply_to_index(i, local_dim);
  Matrix out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out(idx[i], idx[j]) = rho(i, j);
  return out;
}

std::vector<std::size_t> index_to_string(std::size_t index, std::size_t dim, std::size_t n) {
  std::vector<std::size_t> s(n);
  for (std::size_t j = n; j-- > 0;) {
    s[j] = index % dim;
    index /= dim;
  }
  return s;
}

std::size_t string_to_index(const std::vector<std::size_t>& s, std::size_t dim) {
  std::size_t idx = 0;
  for (std::size_t v : s) idx = idx * dim + v;
  return idx;
}

std::size_t exact_log(std::size_t d, std::size_t base) {
  if (base < 2) fail(Errc::dimension_mismatch, "base must be >= 2");
  std::size_t n = 0, p = 1;
  while (p < d) {
    p *= base;
    ++n;
  }
  if (p != d) fail(Errc::shape_mismatch, "dimension is not a power of the base");
  return n;
}

}  // namespace steincq
