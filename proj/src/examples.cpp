#include "steincq/examples.hpp"

namespace steincq {

CqChannel example_channel_e1() {
  std::vector<DensityMatrix> outs{DensityMatrix::basis_state(2, 0),
                                  DensityMatrix::maximally_mixed(2)};
  return CqChannel(2, 2, std::move(outs));
}

CqChannel example_channel_e2() {
  std::vector<DensityMatrix> outs{DensityMatrix::basis_state(2, 0),
                                  DensityMatrix::basis_state(2, 0)};
  return CqChannel(2, 2, std::move(outs));
}

CqChannel example_channel_depolarizing() { return CqChannel::depolarizing(2, 2); }

ResourceQuartet resource_quartet() {
  const CqChannel f = example_channel_depolarizing();
  const FreeSetDescriptor s = FreeSetDescriptor::singleton_iid(f, 1);
  const auto choi_rel = [](const CqChannel& a, const CqChannel& b) {
    return rel_entropy(DensityMatrix::trusted(choi(a).dense()),
                       DensityMatrix::trusted(choi(b).dense()));
  };
  ResourceQuartet q;
  q.r_e1 = divergence_to_set(DivKind::umegaki, example_channel_e1(), s).value;
  q.rtilde_e1 = choi_rel(example_channel_e1(), f);
  q.r_e2 = divergence_to_set(DivKind::umegaki, example_channel_e2(), s).value;
  q.rtilde_e2 = choi_rel(example_channel_e2(), f);
  return q;
}

CqChannel orthogonal_pair_first(std::size_t n) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) dim *= 2;
  return CqChannel::replacer(dim, DensityMatrix::basis_state(dim, 0));
}

CqChannel orthogonal_pair_second(std::size_t n) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) dim *= 2;
  std::vector<DensityMatrix> outs(dim, DensityMatrix::basis_state(dim, 0));
  outs[dim - 1] = DensityMatrix::basis_state(dim, dim - 1);
  return CqChannel(dim, dim, std::move(outs));
}

SuperchannelRecipe force_all_ones_superchannel(const CqChannel& tested) {
  const std::size_t last = tested.alphabet_size() - 1;
  const CqChannel constant = CqChannel::replacer(tested.alphabet_size(),
                                                 tested.output_state(last));
  return build_superchannel(Matrix::identity(tested.out_dim()), last, constant, constant);
}

SuperchannelSeparationRow superchannel_separation_row(std::size_t n) {
  SuperchannelSeparationRow row;
  row.n = n;
  const CqChannel e1 = orthogonal_pair_first(n);
  const CqChannel e2 = orthogonal_pair_second(n);
  row.choi_dist = choi_trace_distance(e1, e2);
  row.diamond_dist = diamond_distance(e1, e2);
  const CqChannel t1 = apply_superchannel(force_all_ones_superchannel(e1), e1);
  const CqChannel t2 = apply_superchannel(force_all_ones_superchannel(e2), e2);
  row.post_choi_dist = choi_trace_distance(t1, t2);

  const CqChannel f_n = tensor_power(example_channel_depolarizing(), n);
  const FreeSetDescriptor s = FreeSetDescriptor::singleton_iid(example_channel_depolarizing(), n);
  row.deficit = arng_deficit(force_all_ones_superchannel(f_n), f_n, s).deficit;
  return row;
}

}  // namespace steincq
