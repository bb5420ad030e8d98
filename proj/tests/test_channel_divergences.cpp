#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "steincq/channel_divergences.hpp"
#include "steincq/errors.hpp"
#include "steincq/examples.hpp"
#include "steincq/random.hpp"
#include "steincq/typeclass.hpp"

using namespace steincq;

namespace {

// maximally entangled input in the basis given by the columns of u
DensityMatrix entangled_probe(const Matrix& u) {
  const std::size_t d = u.rows();
  std::vector<cplx> phi(d * d, 0.0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t x = 0; x < d; ++x) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < d; ++i) s += u(r, i) * u(x, i);
      phi[r * d + x] = s;
    }
  return DensityMatrix::pure(phi);
}

}  // namespace

TEST_CASE("channel divergences are faithful") {
  std::mt19937_64 rng(41);
  const CqChannel e = random_channel(3, 2, rng);
  CHECK(channel_divergence(DivKind::umegaki, e, e).value <= 1e-10);
  CHECK(channel_divergence(DivKind::renyi, e, e, 1.5).value <= 1e-10);
  CHECK(channel_divergence(DivKind::dmax, e, e).value <= 1e-10);
  CHECK(diamond_distance(e, e) == 0.0);
  CHECK(choi_trace_distance(e, e) == 0.0);
}

TEST_CASE("Umegaki channel divergence of the worked example") {
  const ChannelDivergenceResult r = channel_divergence(
      DivKind::umegaki, example_channel_e1(), example_channel_depolarizing());
  CHECK(r.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(r.arg_input == 0);
}

TEST_CASE("channel dmax agrees with the Choi-state dmax") {
  std::mt19937_64 rng(42);
  const double direct =
      channel_divergence(DivKind::dmax, example_channel_e2(), example_channel_depolarizing())
          .value;
  CHECK(direct == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  const double via_choi = dmax_psd(choi(example_channel_e2()).dense(),
                                   choi(example_channel_depolarizing()).dense());
  CHECK(std::abs(direct - via_choi) <= 1e-9);

  // random channels, and a maximally entangled probe in a random basis
  for (int i = 0; i < 10; ++i) {
    const CqChannel e = random_channel(3, 3, rng);
    const CqChannel f = random_channel(3, 3, rng);
    const double channel_value = channel_divergence(DivKind::dmax, e, f).value;
    CHECK(std::abs(channel_value - dmax_psd(choi(e).dense(), choi(f).dense())) <= 1e-9);
    const DensityMatrix probe = entangled_probe(random_unitary(3, rng));
    const double at_probe = dmax(cq_apply(e, probe, 3), cq_apply(f, probe, 3));
    CHECK(std::abs(channel_value - at_probe) <= 1e-9);
  }
}

TEST_CASE("diamond distance on the worked examples") {
  CHECK(diamond_distance(example_channel_e1(), example_channel_e2()) ==
        doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(diamond_distance(orthogonal_pair_first(n), orthogonal_pair_second(n)) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(choi_trace_distance(orthogonal_pair_first(n), orthogonal_pair_second(n)) ==
          doctest::Approx(std::pow(2.0, 1.0 - static_cast<double>(n))).epsilon(1e-12));
  }
}

TEST_CASE("entangled inputs never beat the best classical letter") {
  std::mt19937_64 rng(43);
  for (int pair = 0; pair < 4; ++pair) {
    const std::size_t ax = 2 + pair % 2;
    const CqChannel e = random_channel(ax, 2, rng);
    const CqChannel f = random_channel(ax, 2, rng);
    const double d_max_letter = channel_divergence(DivKind::umegaki, e, f).value;
    const double renyi_max_letter = channel_divergence(DivKind::renyi, e, f, 1.6).value;
    const double dmax_max_letter = channel_divergence(DivKind::dmax, e, f).value;
    const double diamond = diamond_distance(e, f);
    for (int i = 0; i < 50; ++i) {
      const DensityMatrix nu = random_density(ax * ax, rng);
      const DensityMatrix out_e = cq_apply(e, nu, ax);
      const DensityMatrix out_f = cq_apply(f, nu, ax);
      CHECK(rel_entropy(out_e, out_f) <= d_max_letter + 1e-9);
      CHECK(sandwiched_renyi(out_e, out_f, 1.6) <= renyi_max_letter + 1e-9);
      CHECK(dmax(out_e, out_f) <= dmax_max_letter + 1e-9);
      CHECK(2.0 * trace_distance(out_e, out_f) <= diamond + 1e-9);
    }
  }
}

TEST_CASE("divergence to a set vanishes on members") {
  std::mt19937_64 rng(44);
  const CqChannel f = random_channel(2, 2, rng);
  const FreeSetDescriptor singleton = FreeSetDescriptor::singleton_iid(f, 1);
  CHECK(divergence_to_set(DivKind::umegaki, f, singleton).value <= 1e-10);

  const CqChannel rep = CqChannel::replacer(3, random_density(2, rng));
  const FreeSetDescriptor rs = FreeSetDescriptor::replacer(3, 2, 1);
  CHECK(divergence_to_set(DivKind::umegaki, rep, rs, 2.0, 1e-9).value <= 1e-8);
  CHECK(divergence_to_set(DivKind::dmax, rep, rs).value <= 1e-10);
}

TEST_CASE("divergence to the singleton depolarizing set reproduces log 2") {
  const FreeSetDescriptor s =
      FreeSetDescriptor::singleton_iid(example_channel_depolarizing(), 1);
  const ChannelDivergenceResult r =
      divergence_to_set(DivKind::umegaki, example_channel_e1(), s);
  CHECK(r.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  REQUIRE(r.witness.has_value());
  CHECK(std::abs(rel_entropy(example_channel_e1().output_state(r.arg_input),
                             r.witness->output_state(r.arg_input)) -
                 r.value) <= 1e-9);
}

TEST_CASE("divergence to the replacer set is the Holevo capacity") {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 5; ++i) {
    const CqChannel e = random_channel(3, 2, rng);
    const FreeSetDescriptor s = FreeSetDescriptor::replacer(3, 2, 1);
    const ChannelDivergenceResult r = divergence_to_set(DivKind::umegaki, e, s, 2.0, 1e-8);
    const CapacityResult cap = holevo_capacity(e, 1e-8);
    CHECK(std::abs(r.value - cap.lower) <= 1e-6);
    REQUIRE(r.witness.has_value());
    CHECK(std::abs(rel_entropy(e.output_state(r.arg_input),
                               r.witness->output_state(r.arg_input)) -
                   r.value) <= 1e-9);
  }
}

TEST_CASE("unsupported set/divergence combinations are rejected") {
  const FreeSetDescriptor rs = FreeSetDescriptor::replacer(2, 2, 1);
  CHECK_THROWS_AS(divergence_to_set(DivKind::renyi, example_channel_e1(), rs), Error);
}

TEST_CASE("channel hypothesis test: IID commuting case against the per-type oracle") {
  std::vector<DensityMatrix> eo{DensityMatrix::classical({0.8, 0.2}),
                                DensityMatrix::classical({0.55, 0.45})};
  std::vector<DensityMatrix> fo{DensityMatrix::classical({0.4, 0.6}),
                                DensityMatrix::classical({0.5, 0.5})};
  const CqChannel e(2, 2, eo), f(2, 2, fo);
  const double eps = 0.15;
  for (std::size_t n : {1u, 2u, 3u}) {
    const CqChannel en = tensor_power(e, n);
    const CqChannel fn = tensor_power(f, n);
    const FreeSetDescriptor s = FreeSetDescriptor::singleton_iid(f, n);
    const ChannelDivergenceResult got =
        hypothesis_test_channel(en, s, eps, InputMode::classical_types);
    CHECK(got.lower_bound_only);

    double expect = -kInf;
    for (const TypeClass& t : enumerate_types(n, 2)) {
      const std::size_t x = string_to_index(t.representative(), 2);
      std::vector<double> p(en.out_dim()), q(en.out_dim());
      for (std::size_t i = 0; i < en.out_dim(); ++i) {
        p[i] = en.output(x)(i, i).real();
        q[i] = fn.output(x)(i, i).real();
      }
      expect = std::max(expect, oracles::neyman_pearson(p, q, eps));
    }
    CHECK(std::abs(got.value - expect) <= 1e-9);

    const ChannelDivergenceResult full =
        hypothesis_test_channel(en, s, eps, InputMode::classical_exhaustive);
    CHECK(std::abs(full.value - got.value) <= 1e-12);
  }
}

TEST_CASE("channel hypothesis test against the set containing the channel") {
  std::mt19937_64 rng(46);
  const CqChannel e = random_channel(2, 2, rng);
  const FreeSetDescriptor s = FreeSetDescriptor::singleton_iid(e, 1);
  for (double eps : {0.1, 0.5}) {
    const double v = hypothesis_test_channel(e, s, eps, InputMode::classical_exhaustive).value;
    CHECK(std::abs(v + std::log1p(-eps)) <= 1e-9);
  }
}

TEST_CASE("channel hypothesis test of the worked example at eps = 1/2") {
  const FreeSetDescriptor s =
      FreeSetDescriptor::singleton_iid(example_channel_depolarizing(), 1);
  const ChannelDivergenceResult r = hypothesis_test_channel(
      example_channel_e1(), s, 0.5, InputMode::classical_exhaustive);
  // optimal test (1/2)|0><0| on letter 0: beta = 1/4
  CHECK(r.value == doctest::Approx(std::log(4.0)).epsilon(1e-9));
  CHECK(r.arg_input == 0);
}

TEST_CASE("replacer inner infimum of D_H collapses to -log(1-eps)") {
  std::mt19937_64 rng(47);
  const CqChannel e = random_channel(3, 2, rng);
  const FreeSetDescriptor s = FreeSetDescriptor::replacer(3, 2, 1);
  const double v = hypothesis_test_channel(e, s, 0.3, InputMode::classical_exhaustive).value;
  CHECK(std::abs(v + std::log1p(-0.3)) <= 1e-12);
}

TEST_CASE("minimax gap closes for singleton and replacer sets") {
  std::mt19937_64 rng(48);
  const CqChannel e = random_channel(3, 2, rng);
  CHECK(minimax_gap(e, FreeSetDescriptor::singleton_iid(random_channel(3, 2, rng), 1)) <= 1e-9);
  CHECK(minimax_gap(e, FreeSetDescriptor::replacer(3, 2, 1), 1e-6) <= 1e-4);

  const CqChannel rep = CqChannel::replacer(3, random_density(2, rng));
  const CapacityResult cap = holevo_capacity(rep, 1e-9);
  CHECK(cap.lower <= 1e-9);
  CHECK(cap.upper <= 1e-9);
  CHECK(minimax_gap(rep, FreeSetDescriptor::replacer(3, 2, 1), 1e-9) <= 1e-9);

  CHECK_THROWS_AS(minimax_gap(e, FreeSetDescriptor::ppt_output(3, 1)), Error);
}

TEST_CASE("relative entropy to the replacer family is subadditive under tensor powers") {
  std::mt19937_64 rng(49);
  const CqChannel e = random_channel(2, 2, rng);
  std::vector<double> value(5, 0.0);
  for (std::size_t n = 1; n <= 4; ++n) {
    const FreeSetDescriptor s = FreeSetDescriptor::replacer(2, 2, n);
    value[n] = divergence_to_set(DivKind::umegaki, tensor_power(e, n), s, 2.0, 1e-8).value;
  }
  for (std::size_t n = 1; n <= 2; ++n)
    for (std::size_t m = 1; m + n <= 4; ++m)
      CHECK(value[n + m] <= value[n] + value[m] + 1e-6);
}

TEST_CASE("two-copy classical optimum is reached on permutation-invariant type mixtures") {
  std::mt19937_64 rng(50);
  const CqChannel e = tensor_power(random_channel(2, 2, rng), 2);
  const CqChannel f = tensor_power(random_channel(2, 2, rng), 2);

  double best_string = -kInf;
  for (std::size_t x = 0; x < 4; ++x)
    best_string = std::max(best_string, rel_entropy(e.output_state(x), f.output_state(x)));

  // permutation-invariant classical-classical inputs, evaluated through the
  // channel action on R (x) X^2
  const auto mixture_value = [&](const std::vector<double>& q) {
    Matrix nu(16, 16);
    for (std::size_t x = 0; x < 4; ++x) nu(x * 4 + x, x * 4 + x) = q[x];
    const DensityMatrix input = DensityMatrix::trusted(std::move(nu));
    return rel_entropy(cq_apply(e, input, 4), cq_apply(f, input, 4));
  };
  double best_mixture = -kInf;
  const auto types = enumerate_types(2, 2);
  for (double w0 = 0.0; w0 <= 1.0; w0 += 0.25)
    for (double w1 = 0.0; w0 + w1 <= 1.0 + 1e-12; w1 += 0.25) {
      const double w2 = 1.0 - w0 - w1;
      std::vector<double> q(4, 0.0);
      const std::vector<double> w{w0, w1, w2};
      for (std::size_t t = 0; t < types.size(); ++t)
        for (std::size_t x = 0; x < 4; ++x) {
          const std::vector<std::size_t> s = index_to_string(x, 2, 2);
          std::vector<std::size_t> counts(2, 0);
          for (std::size_t v : s) ++counts[v];
          if (counts == types[t].counts)
            q[x] += w[t] / static_cast<double>(types[t].multiplicity);
        }
      best_mixture = std::max(best_mixture, mixture_value(q));
    }
  CHECK(std::abs(best_mixture - best_string) <= 1e-9);
}

TEST_CASE("capacity is continuous in the diamond distance") {
  // |R(E1) - R(E2)| <= (1+eps) h(eps/(1+eps)) + eps log(|X| d) at
  // eps = (1/2)||E1 - E2||_diamond, against the replacer family
  std::mt19937_64 rng(51);
  const double kappa = std::log(4.0);  // -log lambda_min of the depolarizing Choi state
  for (int i = 0; i < 10; ++i) {
    const CqChannel e1 = random_channel(2, 2, rng);
    const CqChannel e2 = random_channel(2, 2, rng);
    const double eps = 0.5 * diamond_distance(e1, e2);
    const double gap =
        std::abs(holevo_capacity(e1, 1e-9).lower - holevo_capacity(e2, 1e-9).lower);
    CHECK(gap <= (1.0 + eps) * oracles::binary_entropy(eps / (1.0 + eps)) + eps * kappa + 1e-8);
  }
}

TEST_CASE("channel hypothesis test guards its enumeration") {
  // 2^21 letters with a trivial one-dimensional output: the channel is cheap
  // to hold (shared storage) but exceeds the exhaustive-enumeration guard
  const CqChannel wide =
      CqChannel::replacer(std::size_t{1} << 21, DensityMatrix::trusted(Matrix::identity(1)));
  const FreeSetDescriptor s = FreeSetDescriptor::singleton_iid(wide, 1);
  CHECK_THROWS_AS(hypothesis_test_channel(wide, s, 0.1, InputMode::classical_exhaustive), Error);
}

TEST_CASE("direct channel action matches the defining sum") {
  std::mt19937_64 rng(53);
  const CqChannel e = random_channel(3, 2, rng);
  const DensityMatrix rho = random_density(3, rng);  // general input on the classical register
  const DensityMatrix out = cq_apply(e, rho, 1);
  Matrix expect(2, 2);
  for (std::size_t x = 0; x < 3; ++x) {
    Matrix t = e.output(x);
    t *= rho.matrix()(x, x);
    expect += t;
  }
  expect -= out.matrix();
  CHECK(expect.max_abs() <= 1e-14);
}
