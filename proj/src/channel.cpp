#include "steincq/channel.hpp"

#include <cmath>
#include <map>

#include "steincq/errors.hpp"

namespace steincq {

CqChannel::CqChannel(std::size_t alphabet_size, std::size_t out_dim,
                     std::vector<DensityMatrix> outputs)
    : alphabet_(alphabet_size), out_dim_(out_dim), outputs_(std::move(outputs)) {
  if (alphabet_ == 0 || out_dim_ == 0) fail(Errc::shape_mismatch, "empty channel shape");
  if (outputs_.size() != alphabet_)
    fail(Errc::shape_mismatch, "need one output state per letter");
  for (const DensityMatrix& w : outputs_)
    if (w.dim() != out_dim_) fail(Errc::shape_mismatch, "output dimension mismatch");
}

CqChannel CqChannel::replacer(std::size_t alphabet_size, const DensityMatrix& sigma) {
  std::vector<DensityMatrix> outs(alphabet_size, sigma);
  return CqChannel(alphabet_size, sigma.dim(), std::move(outs));
}

CqChannel CqChannel::depolarizing(std::size_t alphabet_size, std::size_t out_dim) {
  return replacer(alphabet_size, DensityMatrix::maximally_mixed(out_dim));
}

DensityMatrix cq_apply(const CqChannel& channel, const DensityMatrix& input,
                       std::size_t ref_dim) {
  const std::size_t ax = channel.alphabet_size();
  if (ref_dim == 0 || input.dim() != ref_dim * ax)
    fail(Errc::dimension_mismatch, "input does not factor as ref_dim x alphabet");
  const std::size_t da = channel.out_dim();
  const Matrix& nu = input.matrix();
  Matrix out(ref_dim * da, ref_dim * da);
  Matrix rblock(ref_dim, ref_dim);
  for (std::size_t x = 0; x < ax; ++x) {
    // R-block <x| nu |x> on the classical register
    for (std::size_t r = 0; r < ref_dim; ++r)
      for (std::size_t s = 0; s < ref_dim; ++s) rblock(r, s) = nu(r * ax + x, s * ax + x);
    const Matrix& wx = channel.output(x);
    Matrix contrib = rblock.kron(wx);
    out += contrib;
  }
  return DensityMatrix::trusted(std::move(out));
}

CqChannel tensor_channel(const CqChannel& a, const CqChannel& b) {
  std::vector<DensityMatrix> outs;
  outs.reserve(a.alphabet_size() * b.alphabet_size());
  // letters sharing storage produce one shared product block
  std::map<std::pair<const void*, const void*>, DensityMatrix> memo;
  for (std::size_t x = 0; x < a.alphabet_size(); ++x)
    for (std::size_t y = 0; y < b.alphabet_size(); ++y) {
      const auto key = std::make_pair(a.output_state(x).storage_key(),
                                      b.output_state(y).storage_key());
      auto it = memo.find(key);
      if (it == memo.end())
        it = memo.emplace(key, a.output_state(x).tensor(b.output_state(y))).first;
      outs.push_back(it->second);
    }
  return CqChannel(a.alphabet_size() * b.alphabet_size(), a.out_dim() * b.out_dim(),
                   std::move(outs));
}

CqChannel tensor_power(const CqChannel& a, std::size_t n) {
  if (n == 0) fail(Errc::shape_mismatch, "tensor power needs n >= 1");
  CqChannel c = a;
  for (std::size_t i = 1; i < n; ++i) c = tensor_channel(c, a);
  return c;
}

CqChannel permute_channel(const Permutation& pi, const CqChannel& channel,
                          std::size_t base_alphabet, std::size_t base_out_dim) {
  const std::size_t n = pi.size();
  std::size_t ax = 1, da = 1;
  for (std::size_t i = 0; i < n; ++i) {
    ax *= base_alphabet;
    da *= base_out_dim;
  }
  if (channel.alphabet_size() != ax || channel.out_dim() != da)
    fail(Errc::dimension_mismatch, "channel is not an n-fold product of the base shape");
  const Permutation inv = pi.inverse();
  std::vector<DensityMatrix> outs;
  outs.reserve(ax);
  for (std::size_t x = 0; x < ax; ++x) {
    const std::size_t px = pi.apply_to_index(x, base_alphabet);
    outs.push_back(DensityMatrix::trusted(inv.conjugate(channel.output(px), base_out_dim)));
  }
  return CqChannel(ax, da, std::move(outs));
}

CqChannel symmetrize_channel(const CqChannel& channel, std::size_t base_alphabet,
                             std::size_t base_out_dim) {
  const std::size_t n = exact_log(channel.alphabet_size(), base_alphabet);
  if (n > 8) fail(Errc::enumeration_too_large, "symmetrization capped at n = 8");
  const std::vector<Permutation> perms = Permutation::all(n);
  const double w = 1.0 / static_cast<double>(perms.size());
  std::vector<Matrix> acc(channel.alphabet_size(),
                          Matrix::zero(channel.out_dim()));
  for (const Permutation& pi : perms) {
    const CqChannel pc = permute_channel(pi, channel, base_alphabet, base_out_dim);
    for (std::size_t x = 0; x < channel.alphabet_size(); ++x) {
      Matrix term = pc.output(x);
      term *= cplx(w, 0.0);
      acc[x] += term;
    }
  }
  std::vector<DensityMatrix> outs;
  outs.reserve(acc.size());
  for (Matrix& m : acc) outs.push_back(DensityMatrix::trusted(std::move(m)));
  return CqChannel(channel.alphabet_size(), channel.out_dim(), std::move(outs));
}

CqChannel mix_channels(double w, const CqChannel& a, const CqChannel& b) {
  if (!a.same_shape(b)) fail(Errc::shape_mismatch, "channel mixture shape");
  std::vector<DensityMatrix> outs;
  outs.reserve(a.alphabet_size());
  for (std::size_t x = 0; x < a.alphabet_size(); ++x) {
    if (a.output_state(x).shares_storage(b.output_state(x))) {
      outs.push_back(b.output_state(x));
      continue;
    }
    // b + w (a - b)
    Matrix m = a.output(x);
    m -= b.output(x);
    m *= cplx(w, 0.0);
    m += b.output(x);
    outs.push_back(DensityMatrix::trusted(std::move(m)));
  }
  return CqChannel(a.alphabet_size(), a.out_dim(), std::move(outs));
}

ChoiState::ChoiState(std::size_t in_dim, std::size_t out_dim, std::vector<Matrix> blocks)
    : in_dim_(in_dim), out_dim_(out_dim), blocks_(std::move(blocks)) {
  if (blocks_.size() != in_dim_) fail(Errc::shape_mismatch, "need one Choi block per letter");
}

Matrix ChoiState::dense() const {
  const std::size_t d = in_dim_ * out_dim_;
  if (d > 4096) fail(Errc::dimension_guard, "dense Choi matrix capped at dimension 4096");
  Matrix m(d, d);
  for (std::size_t x = 0; x < in_dim_; ++x)
    for (std::size_t i = 0; i < out_dim_; ++i)
      for (std::size_t j = 0; j < out_dim_; ++j)
        m(x * out_dim_ + i, x * out_dim_ + j) = blocks_[x](i, j);
  return m;
}

ChoiState choi(const CqChannel& channel) {
  const double w = 1.0 / static_cast<double>(channel.alphabet_size());
  std::vector<Matrix> blocks;
  blocks.reserve(channel.alphabet_size());
  for (std::size_t x = 0; x < channel.alphabet_size(); ++x) {
    Matrix b = channel.output(x);
    b *= cplx(w, 0.0);
    blocks.push_back(std::move(b));
  }
  return ChoiState(channel.alphabet_size(), channel.out_dim(), std::move(blocks));
}

CqChannel channel_from_choi(const ChoiState& j) {
  std::vector<DensityMatrix> outs;
  outs.reserve(j.in_dim());
  for (std::size_t x = 0; x < j.in_dim(); ++x) {
    Matrix b = j.block(x);
    b *= cplx(static_cast<double>(j.in_dim()), 0.0);
    outs.push_back(DensityMatrix::trusted(std::move(b)));
  }
  return CqChannel(j.in_dim(), j.out_dim(), std::move(outs));
}

ChoiState choi_from_dense(const Matrix& m, std::size_t in_dim, std::size_t out_dim,
                          double off_block_tol) {
  if (m.rows() != in_dim * out_dim || !m.square())
    fail(Errc::shape_mismatch, "dense matrix does not match X (x) A shape");
  double off = 0.0;
  std::vector<Matrix> blocks(in_dim, Matrix(out_dim, out_dim));
  for (std::size_t x = 0; x < in_dim; ++x)
    for (std::size_t y = 0; y < in_dim; ++y)
      for (std::size_t i = 0; i < out_dim; ++i)
        for (std::size_t j = 0; j < out_dim; ++j) {
          const cplx v = m(x * out_dim + i, y * out_dim + j);
          if (x == y)
            blocks[x](i, j) = v;
          else
            off = std::max(off, std::abs(v));
        }
  if (off > off_block_tol)
    fail(Errc::shape_mismatch, "off-classical-diagonal mass " + std::to_string(off));
  return ChoiState(in_dim, out_dim, std::move(blocks));
}

}  // namespace steincq
