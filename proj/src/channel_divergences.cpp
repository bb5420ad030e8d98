#include "steincq/channel_divergences.hpp"

#include <cmath>
#include <map>

#include "steincq/eigen.hpp"
#include "steincq/errors.hpp"
#include "steincq/typeclass.hpp"

namespace steincq {

namespace {

double state_divergence(DivKind kind, const DensityMatrix& a, const DensityMatrix& b,
                        double alpha) {
  switch (kind) {
    case DivKind::umegaki:
      return rel_entropy(a, b);
    case DivKind::renyi:
      return sandwiched_renyi(a, b, alpha);
    case DivKind::dmax:
      return dmax(a, b);
  }
  fail(Errc::unsupported_set_kind, "unknown divergence kind");
}

}  // namespace

ChannelDivergenceResult channel_divergence(DivKind kind, const CqChannel& e, const CqChannel& f,
                                           double alpha) {
  if (!e.same_shape(f)) fail(Errc::shape_mismatch, "channel shapes differ");
  ChannelDivergenceResult r;
  r.value = -kInf;
  for (std::size_t x = 0; x < e.alphabet_size(); ++x) {
    const double v = state_divergence(kind, e.output_state(x), f.output_state(x), alpha);
    if (v > r.value) {
      r.value = v;
      r.arg_input = x;
    }
  }
  r.value = std::max(r.value, 0.0);
  return r;
}

namespace {

// Per-letter output trace norms; letters sharing the same storage pair are
// computed once.
std::vector<double> letterwise_trace_norms(const CqChannel& e, const CqChannel& f) {
  if (!e.same_shape(f)) fail(Errc::shape_mismatch, "channel shapes differ");
  std::map<std::pair<const void*, const void*>, double> memo;
  std::vector<double> norms(e.alphabet_size());
  for (std::size_t x = 0; x < e.alphabet_size(); ++x) {
    const auto key = std::make_pair(e.output_state(x).storage_key(),
                                    f.output_state(x).storage_key());
    const auto it = memo.find(key);
    if (it != memo.end()) {
      norms[x] = it->second;
      continue;
    }
    Matrix d = e.output(x);
    d -= f.output(x);
    norms[x] = trace_norm(d);
    memo.emplace(key, norms[x]);
  }
  return norms;
}

}  // namespace

double diamond_distance(const CqChannel& e, const CqChannel& f) {
  double best = 0.0;
  for (double v : letterwise_trace_norms(e, f)) best = std::max(best, v);
  return best;
}

double choi_trace_distance(const CqChannel& e, const CqChannel& f) {
  const double w = 1.0 / static_cast<double>(e.alphabet_size());
  double sum = 0.0;
  for (double v : letterwise_trace_norms(e, f)) sum += w * v;
  return sum;
}

ChannelDivergenceResult divergence_to_set(DivKind kind, const CqChannel& e,
                                          const FreeSetDescriptor& s, double alpha, double tol) {
  s.check_shape(e);
  switch (s.kind()) {
    case FreeSetKind::singleton_iid: {
      ChannelDivergenceResult r = channel_divergence(kind, e, s.singleton_member(), alpha);
      r.witness = s.singleton_member();
      return r;
    }
    case FreeSetKind::replacer: {
      if (kind == DivKind::umegaki) {
        const CapacityResult cap = holevo_capacity(e, tol);
        ChannelDivergenceResult r;
        // min-max order: the divergence radius bound at the optimal center
        r.value = cap.upper;
        r.witness = CqChannel::replacer(e.alphabet_size(), cap.optimal_sigma);
        double best = -kInf;
        for (std::size_t x = 0; x < e.alphabet_size(); ++x) {
          const double v = rel_entropy(e.output_state(x), cap.optimal_sigma);
          if (v > best) {
            best = v;
            r.arg_input = x;
          }
        }
        return r;
      }
      if (kind == DivKind::dmax) {
        const RobustnessResult rob = log_robustness(e, s);
        ChannelDivergenceResult r;
        r.value = rob.value;
        r.witness = rob.witness;
        if (rob.witness) {
          double best = -kInf;
          for (std::size_t x = 0; x < e.alphabet_size(); ++x) {
            const double v = dmax_psd(e.output(x), rob.witness->output(x));
            if (v > best) {
              best = v;
              r.arg_input = x;
            }
          }
        }
        return r;
      }
      fail(Errc::unsupported_set_kind, "no certified replacer routine for this divergence");
    }
    case FreeSetKind::lifted_state_set:
    case FreeSetKind::ppt_output: {
      if (kind != DivKind::umegaki)
        fail(Errc::unsupported_set_kind, "state-family sets support the Umegaki divergence");
      if (s.copies() != 1)
        fail(Errc::unsupported_dimension, "state-family sets are restricted to n = 1");
      ChannelDivergenceResult r;
      r.value = -kInf;
      std::vector<DensityMatrix> closest;
      closest.reserve(e.alphabet_size());
      for (std::size_t x = 0; x < e.alphabet_size(); ++x) {
        auto [v, sigma] = s.family().min_rel_entropy(e.output_state(x));
        closest.push_back(sigma);
        if (v > r.value) {
          r.value = v;
          r.arg_input = x;
        }
      }
      r.value = std::max(r.value, 0.0);
      r.witness = CqChannel(e.alphabet_size(), e.out_dim(), std::move(closest));
      return r;
    }
  }
  fail(Errc::unsupported_set_kind, "unknown set kind");
}

ChannelDivergenceResult hypothesis_test_channel(const CqChannel& e, const FreeSetDescriptor& s,
                                                double eps, InputMode mode) {
  s.check_shape(e);
  if (e.out_dim() > 4096)
    fail(Errc::enumeration_too_large, "output dimension exceeds the 4096 guard");

  std::vector<std::size_t> inputs;
  if (mode == InputMode::classical_exhaustive) {
    if (e.alphabet_size() > 1000000)
      fail(Errc::enumeration_too_large, "alphabet too large for exhaustive enumeration");
    inputs.resize(e.alphabet_size());
    for (std::size_t x = 0; x < inputs.size(); ++x) inputs[x] = x;
  } else {
    for (const TypeClass& t : enumerate_types(s.copies(), s.base_alphabet()))
      inputs.push_back(string_to_index(t.representative(), s.base_alphabet()));
  }

  ChannelDivergenceResult r;
  r.lower_bound_only = true;
  r.value = -kInf;
  for (std::size_t x : inputs) {
    double v;
    switch (s.kind()) {
      case FreeSetKind::singleton_iid:
        v = hypothesis_test(e.output_state(x), s.singleton_member().output_state(x), eps).value;
        break;
      case FreeSetKind::replacer:
        // inf over replacer outputs sigma of D_H^eps(rho_x || sigma) is
        // attained at sigma = rho_x: -log(1-eps)
        v = -std::log1p(-eps);
        break;
      default:
        fail(Errc::unsupported_set_kind, "no inner D_H routine for this set kind");
    }
    if (v > r.value) {
      r.value = v;
      r.arg_input = x;
    }
  }
  return r;
}

double minimax_gap(const CqChannel& e, const FreeSetDescriptor& s, double tol) {
  s.check_shape(e);
  switch (s.kind()) {
    case FreeSetKind::singleton_iid: {
      // the inner optimization is trivial; both orders coincide letterwise
      const double a = channel_divergence(DivKind::umegaki, e, s.singleton_member()).value;
      const double b = channel_divergence(DivKind::umegaki, e, s.singleton_member()).value;
      return std::abs(a - b);
    }
    case FreeSetKind::replacer: {
      // max-min = achieved mutual information, min-max = divergence radius
      const CapacityResult cap = holevo_capacity(e, tol);
      return std::abs(cap.upper - cap.lower);
    }
    default:
      fail(Errc::unsupported_set_kind, "both optimization orders need a certified routine");
  }
}

}  // namespace steincq
