#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "steincq/divergences.hpp"
#include "steincq/eigen.hpp"
#include "steincq/errors.hpp"
#include "steincq/pinching.hpp"
#include "steincq/random.hpp"
#include "steincq/sweeps.hpp"

using namespace steincq;

namespace {

// rotate a pair of spectra into a common random basis
std::pair<DensityMatrix, DensityMatrix> rotated_pair(const std::vector<double>& p,
                                                     const std::vector<double>& q,
                                                     std::mt19937_64& rng) {
  const Matrix u = random_unitary(p.size(), rng);
  return {DensityMatrix::trusted(u * Matrix::diagonal(p) * u.adjoint()),
          DensityMatrix::trusted(u * Matrix::diagonal(q) * u.adjoint())};
}

DensityMatrix kron_power(const DensityMatrix& a, std::size_t n) {
  DensityMatrix out = a;
  for (std::size_t i = 1; i < n; ++i) out = out.tensor(a);
  return out;
}

}  // namespace

TEST_CASE("relative entropy is faithful") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix rho = random_density(4, rng);
    CHECK(std::abs(rel_entropy(rho, rho)) <= 1e-10);
  }
}

TEST_CASE("relative entropy of a pure state against the maximally mixed state") {
  CHECK(rel_entropy(DensityMatrix::basis_state(2, 0), DensityMatrix::maximally_mixed(2)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("relative entropy matches the classical KL oracle") {
  CHECK(rel_entropy(DensityMatrix::classical({0.75, 0.25}), DensityMatrix::classical({0.5, 0.5})) ==
        doctest::Approx(0.130812).epsilon(1e-5));
  std::mt19937_64 rng(22);
  for (int i = 0; i < 50; ++i) {
    const std::vector<double> p = random_distribution(5, rng);
    const std::vector<double> q = random_distribution(5, rng);
    const auto [rho, sigma] = rotated_pair(p, q, rng);
    CHECK(std::abs(rel_entropy(rho, sigma) - oracles::kl(p, q)) <= 1e-9);
  }
}

TEST_CASE("relative entropy diverges off the support") {
  CHECK(rel_entropy(DensityMatrix::basis_state(2, 0), DensityMatrix::basis_state(2, 1)) == kInf);
  CHECK(rel_entropy(DensityMatrix::maximally_mixed(2),
                    DensityMatrix::classical({1.0, 0.0})) == kInf);
}

TEST_CASE("sandwiched Renyi divergence basics") {
  std::mt19937_64 rng(23);
  const DensityMatrix rho = random_density(3, rng);
  for (double alpha : {1.1, 1.5, 2.0, 3.0}) {
    CHECK(std::abs(sandwiched_renyi(rho, rho, alpha)) <= 1e-10);
    CHECK(sandwiched_renyi(DensityMatrix::basis_state(2, 0), DensityMatrix::maximally_mixed(2),
                           alpha) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(sandwiched_renyi(rho, rho, 1.0), Error);
  CHECK_THROWS_AS(sandwiched_renyi(rho, rho, 0.5), Error);
  CHECK(sandwiched_renyi(DensityMatrix::basis_state(2, 0), DensityMatrix::basis_state(2, 1),
                         2.0) == kInf);
}

TEST_CASE("sandwiched Renyi approaches the relative entropy as alpha -> 1") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 20; ++i) {
    const std::vector<double> p = random_distribution(4, rng);
    const std::vector<double> q = random_distribution(4, rng);
    const auto [rho, sigma] = rotated_pair(p, q, rng);
    CHECK(std::abs(sandwiched_renyi(rho, sigma, 1.0 + 1e-5) - oracles::kl(p, q)) <= 1e-4);
  }
}

TEST_CASE("max-relative entropy matches the eigenvalue-ratio oracle") {
  std::mt19937_64 rng(25);
  const DensityMatrix rho = random_density(4, rng);
  CHECK(std::abs(dmax(rho, rho)) <= 1e-12);
  CHECK(dmax(DensityMatrix::basis_state(2, 0), DensityMatrix::maximally_mixed(2)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(dmax(DensityMatrix::classical({0.9, 0.1}), DensityMatrix::classical({0.5, 0.5})) ==
        doctest::Approx(std::log(1.8)).epsilon(1e-12));
  for (int i = 0; i < 50; ++i) {
    const std::vector<double> p = random_distribution(4, rng);
    const std::vector<double> q = random_distribution(4, rng);
    const auto [r, s] = rotated_pair(p, q, rng);
    CHECK(std::abs(dmax(r, s) - oracles::max_log_ratio(p, q)) <= 1e-9);
  }
  CHECK(dmax(DensityMatrix::maximally_mixed(2), DensityMatrix::classical({1.0, 0.0})) == kInf);
}

TEST_CASE("trace distance matches the total-variation oracle") {
  std::mt19937_64 rng(26);
  const DensityMatrix rho = random_density(3, rng);
  CHECK(trace_distance(rho, rho) == 0.0);
  CHECK(trace_distance(DensityMatrix::basis_state(2, 0), DensityMatrix::basis_state(2, 1)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trace_distance(DensityMatrix::classical({0.75, 0.25}),
                       DensityMatrix::classical({0.5, 0.5})) ==
        doctest::Approx(0.25).epsilon(1e-12));
  for (int i = 0; i < 50; ++i) {
    const std::vector<double> p = random_distribution(6, rng);
    const std::vector<double> q = random_distribution(6, rng);
    const auto [r, s] = rotated_pair(p, q, rng);
    CHECK(std::abs(trace_distance(r, s) - oracles::total_variation(p, q)) <= 1e-10);
  }
}

TEST_CASE("hypothesis test at rho = sigma gives -log(1-eps)") {
  std::mt19937_64 rng(27);
  for (double eps : {0.05, 0.2, 0.5}) {
    const DensityMatrix rho = random_density(3, rng);
    const TestResult r = hypothesis_test(rho, rho, eps);
    CHECK(std::abs(r.value + std::log1p(-eps)) <= 1e-9);
    CHECK(r.duality_gap <= 1e-8);
  }
}

TEST_CASE("hypothesis test with orthogonal supports is infinite") {
  const TestResult r =
      hypothesis_test(DensityMatrix::basis_state(2, 0), DensityMatrix::basis_state(2, 1), 0.3);
  CHECK(r.value == kInf);
  CHECK(trace_product(r.optimal_test, DensityMatrix::basis_state(2, 0).matrix()) >= 0.7 - 1e-9);
}

TEST_CASE("hypothesis test eps domain") {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
  CHECK_THROWS_AS(hypothesis_test(rho, rho, 0.0), Error);
  CHECK_THROWS_AS(hypothesis_test(rho, rho, 1.0), Error);
}

TEST_CASE("hypothesis test against the Neyman-Pearson oracle") {
  const std::vector<double> p{0.8, 0.2}, q{0.3, 0.7};
  CHECK(std::abs(hypothesis_test(DensityMatrix::classical(p), DensityMatrix::classical(q), 0.1)
                     .value -
                 oracles::neyman_pearson(p, q, 0.1)) <= 1e-10);

  std::mt19937_64 rng(28);
  for (int i = 0; i < 60; ++i) {
    const std::size_t dim = 2 + i % 5;
    const std::vector<double> pp = random_distribution(dim, rng);
    const std::vector<double> qq = random_distribution(dim, rng);
    const auto [rho, sigma] = rotated_pair(pp, qq, rng);
    for (double eps : {0.05, 0.2, 0.5}) {
      const TestResult r = hypothesis_test(rho, sigma, eps);
      CHECK(std::abs(r.value - oracles::neyman_pearson(pp, qq, eps)) <= 1e-8);
    }
  }
}

TEST_CASE("hypothesis test certificates on non-commuting pairs") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    const std::size_t dim = 2 + i % 5;
    const DensityMatrix rho = random_density(dim, rng);
    const DensityMatrix sigma = random_density(dim, rng);
    const double eps = 0.05 + 0.3 * (i % 3);
    const TestResult r = hypothesis_test(rho, sigma, eps);
    CHECK(r.duality_gap <= 1e-8);
    CHECK(trace_product(r.optimal_test, rho.matrix()) >= 1.0 - eps - 1e-9);
    const std::vector<double> ev = eigvalsh(r.optimal_test);
    CHECK(ev.front() >= -1e-10);
    CHECK(ev.back() <= 1.0 + 1e-10);
    // the dual never exceeds the primal
    const double beta = trace_product(r.optimal_test, sigma.matrix());
    const double dual = beta - r.duality_gap;
    CHECK(dual <= beta + 1e-12);
  }
}

TEST_CASE("pinching entropy gap obeys both bounds") {
  std::mt19937_64 rng(30);
  // commuting inputs: the pinching acts as the identity on rho
  {
    const std::vector<double> p = random_distribution(3, rng);
    const std::vector<double> q = random_distribution(3, rng);
    const auto [rho, sigma] = rotated_pair(p, q, rng);
    const PinchingGap g = pinching_entropy_gap(rho, sigma);
    CHECK(std::abs(g.gap) <= 1e-9);
  }
  // maximally mixed sigma: k = 1
  {
    const PinchingGap g =
        pinching_entropy_gap(random_density(2, rng), DensityMatrix::maximally_mixed(2));
    CHECK(std::abs(g.gap) <= 1e-10);
    CHECK(g.bound == 0.0);
  }
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_density(2, rng);
    const DensityMatrix sigma = random_density(2, rng);
    const PinchingGap g = pinching_entropy_gap(rho, sigma);
    CHECK(g.gap >= -1e-9);
    CHECK(g.gap <= g.bound + 1e-9);
    CHECK(g.bound <= std::log(2.0) + 1e-12);
  }
  CHECK_THROWS_AS(
      pinching_entropy_gap(DensityMatrix::maximally_mixed(2), DensityMatrix::classical({1.0, 0.0})),
      Error);
}

TEST_CASE("data processing for all five divergences") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_density(4, rng);
    const DensityMatrix sigma = random_density(4, rng);
    DensityMatrix mapped_rho, mapped_sigma;
    if (i % 2 == 0) {
      const PinchingMap e = pinching_of(random_density(4, rng));
      mapped_rho = DensityMatrix::trusted(e.apply(rho.matrix()));
      mapped_sigma = DensityMatrix::trusted(e.apply(sigma.matrix()));
    } else {
      mapped_rho = DensityMatrix::trusted(partial_trace_second(rho.matrix(), 2, 2));
      mapped_sigma = DensityMatrix::trusted(partial_trace_second(sigma.matrix(), 2, 2));
    }
    CHECK(rel_entropy(rho, sigma) >= rel_entropy(mapped_rho, mapped_sigma) - 1e-9);
    CHECK(sandwiched_renyi(rho, sigma, 1.7) >=
          sandwiched_renyi(mapped_rho, mapped_sigma, 1.7) - 1e-9);
    CHECK(dmax(rho, sigma) >= dmax(mapped_rho, mapped_sigma) - 1e-9);
    CHECK(trace_distance(rho, sigma) >= trace_distance(mapped_rho, mapped_sigma) - 1e-9);
    const double eps = 0.2;
    CHECK(hypothesis_test(rho, sigma, eps).value >=
          hypothesis_test(mapped_rho, mapped_sigma, eps).value - 1e-9);
  }
}

TEST_CASE("additivity under tensor products") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 25; ++i) {
    const DensityMatrix r1 = random_density(2, rng), r2 = random_density(3, rng);
    const DensityMatrix s1 = random_density(2, rng), s2 = random_density(3, rng);
    const DensityMatrix rr = r1.tensor(r2), ss = s1.tensor(s2);
    CHECK(std::abs(rel_entropy(rr, ss) - rel_entropy(r1, s1) - rel_entropy(r2, s2)) <= 1e-9);
    CHECK(std::abs(sandwiched_renyi(rr, ss, 1.5) - sandwiched_renyi(r1, s1, 1.5) -
                   sandwiched_renyi(r2, s2, 1.5)) <= 1e-9);
    CHECK(std::abs(dmax(rr, ss) - dmax(r1, s1) - dmax(r2, s2)) <= 1e-9);
  }
}

TEST_CASE("direct-sum property of the relative entropy") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 25; ++i) {
    const std::vector<double> w = random_distribution(2, rng);
    const DensityMatrix r1 = random_density(2, rng), r2 = random_density(2, rng);
    const DensityMatrix s1 = random_density(2, rng), s2 = random_density(2, rng);
    Matrix rho(4, 4), sigma(4, 4);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        rho(a, b) = w[0] * r1.matrix()(a, b);
        rho(2 + a, 2 + b) = w[1] * r2.matrix()(a, b);
        sigma(a, b) = w[0] * s1.matrix()(a, b);
        sigma(2 + a, 2 + b) = w[1] * s2.matrix()(a, b);
      }
    const double expect = w[0] * rel_entropy(r1, s1) + w[1] * rel_entropy(r2, s2);
    CHECK(std::abs(rel_entropy(DensityMatrix::trusted(rho), DensityMatrix::trusted(sigma)) -
                   expect) <= 1e-9);
  }
}

TEST_CASE("joint quasi-convexity of the sandwiched Renyi divergence") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 40; ++i) {
    const std::vector<double> w = random_distribution(3, rng);
    std::vector<DensityMatrix> rs, ss;
    double worst = 0.0;
    Matrix mr(3, 3), ms(3, 3);
    for (int j = 0; j < 3; ++j) {
      rs.push_back(random_density(3, rng));
      ss.push_back(random_density(3, rng));
      worst = std::max(worst, sandwiched_renyi(rs.back(), ss.back(), 2.0));
      Matrix tr = rs.back().matrix();
      tr *= cplx(w[j], 0.0);
      mr += tr;
      Matrix ts = ss.back().matrix();
      ts *= cplx(w[j], 0.0);
      ms += ts;
    }
    CHECK(sandwiched_renyi(DensityMatrix::trusted(mr), DensityMatrix::trusted(ms), 2.0) <=
          worst + 1e-9);
  }
}

TEST_CASE("divergence ordering D <= renyi <= dmax and the Renyi bound on D_H") {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix rho = random_density(3, rng);
    const DensityMatrix sigma = random_density(3, rng);
    const double d = rel_entropy(rho, sigma);
    const double dm = dmax(rho, sigma);
    for (double alpha : {1.2, 1.7, 2.0}) {
      const double da = sandwiched_renyi(rho, sigma, alpha);
      CHECK(d <= da + 1e-9);
      CHECK(da <= dm + 1e-9);
    }
    for (double eps : {0.1, 0.4}) {
      const double dh = hypothesis_test(rho, sigma, eps).value;
      for (double alpha : {1.3, 2.0})
        CHECK(dh <= sandwiched_renyi(rho, sigma, alpha) + renyi_dh_bound_offset(alpha, eps) + 1e-9);
    }
  }
}

TEST_CASE("Stein trend: the per-copy rate closes in on the relative entropy") {
  const DensityMatrix rho = DensityMatrix::classical({0.6, 0.4});
  const DensityMatrix sigma = DensityMatrix::classical({0.5, 0.5});
  const double eps = 0.05, alpha = 1.1;
  const double d = rel_entropy(rho, sigma);
  const double bound_base = sandwiched_renyi(rho, sigma, alpha);

  std::vector<double> rate(13, 0.0);
  for (std::size_t n = 1; n <= 12; ++n) {
    const DensityMatrix rn = kron_power(rho, n);
    const DensityMatrix sn = kron_power(sigma, n);
    const double a_n = hypothesis_test(rn, sn, eps).value / static_cast<double>(n);
    rate[n] = a_n;

    // sandwich: the independent classical oracle below, the Renyi bound above
    std::vector<double> p(rn.dim()), q(rn.dim());
    for (std::size_t i = 0; i < rn.dim(); ++i) {
      p[i] = rn.matrix()(i, i).real();
      q[i] = sn.matrix()(i, i).real();
    }
    const double oracle = oracles::neyman_pearson(p, q, eps) / static_cast<double>(n);
    CHECK(a_n >= oracle - 1e-9);
    CHECK(a_n <= oracle + 1e-9);
    CHECK(a_n <= bound_base + renyi_dh_bound_offset(alpha, eps) / static_cast<double>(n) + 1e-9);
  }
  CHECK(std::abs(rate[12] - d) < std::abs(rate[2] - d));
}
