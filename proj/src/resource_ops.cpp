#include "steincq/resource_ops.hpp"

#include <algorithm>
#include <cmath>

#include "steincq/eigen.hpp"
#include "steincq/errors.hpp"
#include "steincq/pinching.hpp"

namespace steincq {

RobustnessDecomposition robustness_decompose(const CqChannel& e, const FreeSetDescriptor& s) {
  const RobustnessResult rob = log_robustness(e, s);
  if (!std::isfinite(rob.value))
    fail(Errc::infinite_robustness, "the channel has no finite D_max to the set");
  if (rob.bracket_hi - rob.bracket_lo > 1e-8)
    fail(Errc::bracket_too_wide, "robustness bracket did not collapse");
  if (!rob.witness) fail(Errc::unsupported_set_kind, "robustness witness unavailable");

  RobustnessDecomposition d;
  d.free_channel = *rob.witness;
  const double lambda = std::exp(rob.value);
  d.r = lambda - 1.0;
  if (d.r <= 1e-14) {
    d.r = 0.0;
    d.complement = d.free_channel;
    return d;
  }
  std::vector<DensityMatrix> outs;
  outs.reserve(e.alphabet_size());
  for (std::size_t x = 0; x < e.alphabet_size(); ++x) {
    Matrix m = d.free_channel.output(x);
    m *= cplx(lambda, 0.0);
    m -= e.output(x);
    m *= cplx(1.0 / d.r, 0.0);
    outs.push_back(validate_density(m));
  }
  d.complement = CqChannel(e.alphabet_size(), e.out_dim(), std::move(outs));
  return d;
}

SmoothedChannel smooth_channel(const CqChannel& e, const CqChannel& f_m, double R, std::size_t k,
                               std::optional<CqChannel> compensator) {
  if (!(R > 0.0)) fail(Errc::precondition_violated, "R must be positive");
  const std::size_t m = exact_log(f_m.alphabet_size(), e.alphabet_size());
  if (exact_log(f_m.out_dim(), e.out_dim()) != m)
    fail(Errc::shape_mismatch, "free channel output is not the m-fold power of the base");
  const std::size_t km = k * m;

  // dimension guard (|X| d_A)^{km} <= 4096
  {
    double total = 1.0;
    for (std::size_t i = 0; i < km; ++i) {
      total *= static_cast<double>(e.alphabet_size() * e.out_dim());
      if (total > 4096.0) fail(Errc::dimension_guard, "(|X| d_A)^{km} exceeds 4096");
    }
  }

  const CqChannel e_km = tensor_power(e, km);
  const CqChannel f_k = k == 1 ? f_m : tensor_power(f_m, k);

  CqChannel comp_km = [&] {
    if (compensator) return tensor_power(*compensator, km);
    bool full_rank = true;
    for (std::size_t x = 0; x < f_m.alphabet_size() && full_rank; ++x)
      if (min_eigenvalue(f_m.output(x)) <= 1e-12) full_rank = false;
    if (m == 1 && full_rank) return tensor_power(f_m, km);
    return CqChannel::depolarizing(e_km.alphabet_size(), e_km.out_dim());
  }();
  if (!comp_km.same_shape(e_km)) fail(Errc::shape_mismatch, "compensator shape mismatch");

  const std::size_t letters = e_km.alphabet_size();
  const std::size_t d = e_km.out_dim();

  // Global spectrum of J(F_m^k): per-block eigendecompositions, one cluster
  // pass over all eigenvalues (the classical weight is common and drops out).
  std::vector<EigResult> feig(letters);
  std::vector<double> all_vals;
  all_vals.reserve(letters * d);
  for (std::size_t x = 0; x < letters; ++x) {
    feig[x] = eigh(f_k.output(x));
    all_vals.insert(all_vals.end(), feig[x].values.begin(), feig[x].values.end());
  }
  std::sort(all_vals.begin(), all_vals.end());
  std::size_t spec_count = 0;
  cluster_ascending(all_vals, kClusterTol, &spec_count);

  const double gate = std::exp(static_cast<double>(km) * R);
  std::vector<Matrix> projectors;
  std::vector<DensityMatrix> outs;
  projectors.reserve(letters);
  outs.reserve(letters);
  for (std::size_t x = 0; x < letters; ++x) {
    // pinch E_x with respect to the eigenclusters of F_x: zero the cross-
    // cluster entries in F_x's eigenbasis
    const EigResult& ef = feig[x];
    std::size_t kx = 0;
    const std::vector<std::size_t> cid = cluster_ascending(ef.values, kClusterTol, &kx);
    Matrix b = ef.vectors.adjoint() * e_km.output(x) * ef.vectors;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (cid[i] != cid[j]) b(i, j) = 0.0;
    Matrix a = ef.vectors * b * ef.vectors.adjoint();
    {
      Matrix fx = f_k.output(x);
      fx *= cplx(gate, 0.0);
      a -= fx;
    }
    const EigResult ea = eigh(a);
    double scale = 0.0;
    for (double v : ea.values) scale = std::max(scale, std::abs(v));
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < d; ++i)
      if (ea.values[i] > 1e-12 * std::max(scale, 1e-300)) pos.push_back(i);
    Matrix p = pos.empty() ? Matrix(d, d) : eigenspace_projector(ea, pos);

    Matrix keep = Matrix::identity(d);
    keep -= p;
    Matrix cut = keep * e_km.output(x) * keep;
    const double w = 1.0 - cut.trace().real();
    if (w > 1e-15) {
      Matrix fill = comp_km.output(x);
      fill *= cplx(w, 0.0);
      cut += fill;
    }
    outs.push_back(validate_density(cut));
    projectors.push_back(std::move(p));
  }

  SmoothedChannel out;
  out.channel = CqChannel(letters, d, std::move(outs));
  out.projectors = std::move(projectors);
  out.spec_count = spec_count;
  out.dmax_bound = static_cast<double>(km) * R + std::log(static_cast<double>(spec_count));
  out.copies = km;
  return out;
}

SuperchannelRecipe build_superchannel(Matrix lambda, std::size_t probe_letter, CqChannel pass,
                                      CqChannel fail_ch) {
  if (!pass.same_shape(fail_ch)) fail(Errc::shape_mismatch, "pass/fail channel shapes differ");
  if (!lambda.square()) fail(Errc::shape_mismatch, "test operator must be square");
  if (lambda.hermitian_deviation() > kHermitianTol)
    fail(Errc::not_hermitian, "test operator must be Hermitian");
  for (double v : eigvalsh(lambda))
    if (v < -1e-10 || v > 1.0 + 1e-10)
      fail(Errc::precondition_violated, "test operator eigenvalues must lie in [0,1]");
  SuperchannelRecipe r;
  r.test_operator = std::move(lambda);
  r.probe_letter = probe_letter;
  r.channel_if_pass = std::move(pass);
  r.channel_if_fail = std::move(fail_ch);
  return r;
}

CqChannel apply_superchannel(const SuperchannelRecipe& theta, const CqChannel& n) {
  if (theta.probe_letter >= n.alphabet_size())
    fail(Errc::shape_mismatch, "probe letter outside the tested channel's alphabet");
  if (theta.test_operator.rows() != n.out_dim())
    fail(Errc::shape_mismatch, "test operator does not match the tested channel's output");
  double w = trace_product(theta.test_operator, n.output(theta.probe_letter));
  w = std::clamp(w, 0.0, 1.0);
  return mix_channels(w, theta.channel_if_pass, theta.channel_if_fail);
}

ArngDeficit arng_deficit(const SuperchannelRecipe& theta, const CqChannel& f,
                         const FreeSetDescriptor& s) {
  ArngDeficit out;
  out.deficit = log_robustness(apply_superchannel(theta, f), s).value;

  const double s_n = log_robustness(theta.channel_if_pass, s).value;
  double t = trace_product(theta.test_operator, f.output(theta.probe_letter));
  t = std::clamp(t, 0.0, 1.0);

  // Eq 4.79 pair check: (pass + (e^s - 1) fail) / e^s must be free.
  const double es = std::exp(s_n);
  const CqChannel mix = mix_channels(1.0 / es, theta.channel_if_pass, theta.channel_if_fail);
  if (!membership(mix, s).is_member || !std::isfinite(s_n)) return out;

  if (std::exp(-s_n) < t)
    fail(Errc::precondition_violated, "bound needs e^{-s} >= t");
  const double denom = 1.0 - std::exp(-s_n);
  out.bound = denom <= 0.0 ? kInf : std::log((1.0 - t) / denom);
  return out;
}

GentleMeasurement gentle_measurement_check(const DensityMatrix& rho, const Matrix& lambda_op) {
  if (lambda_op.rows() != rho.dim() || !lambda_op.square())
    fail(Errc::dimension_mismatch, "operator does not match the state");
  const EigResult e = eigh(lambda_op);
  const Matrix root = map_eigenvalues(e, [](double v) { return std::sqrt(std::clamp(v, 0.0, 1.0)); });
  const double eps = std::max(0.0, 1.0 - trace_product(lambda_op, rho.matrix()));
  GentleMeasurement g;
  Matrix moved = root * rho.matrix() * root;
  moved -= rho.matrix();
  g.lhs = 0.5 * trace_norm(moved);
  g.rhs = std::sqrt(eps) + 0.5 * eps;
  return g;
}

}  // namespace steincq
