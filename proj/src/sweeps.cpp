#include "steincq/sweeps.hpp"

#include <chrono>
#include <cmath>

#include "steincq/errors.hpp"
#include "steincq/typeclass.hpp"

namespace steincq {

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

}  // namespace

double renyi_dh_bound_offset(double alpha, double eps) {
  return alpha / (alpha - 1.0) * std::log(1.0 / (1.0 - eps));
}

std::vector<SweepRow> sweep_gqsl(const CqChannel& e_base, SweepFamily family,
                                 const CqChannel* f_base, double eps, double alpha,
                                 std::size_t n_max, double tol) {
  if (family == SweepFamily::singleton) {
    if (f_base == nullptr || !e_base.same_shape(*f_base))
      fail(Errc::shape_mismatch, "singleton sweeps need a base channel of matching shape");
  }

  // per-letter divergences at the base level feed the additive columns
  const std::size_t ax = e_base.alphabet_size();
  std::vector<double> d_letter(ax), renyi_letter(ax);
  if (family == SweepFamily::singleton) {
    for (std::size_t x = 0; x < ax; ++x) {
      d_letter[x] = rel_entropy(e_base.output_state(x), f_base->output_state(x));
      renyi_letter[x] = sandwiched_renyi(e_base.output_state(x), f_base->output_state(x), alpha);
    }
  } else {
    const CapacityResult cap = holevo_capacity(e_base, tol);
    for (std::size_t x = 0; x < ax; ++x)
      renyi_letter[x] = sandwiched_renyi(e_base.output_state(x), cap.optimal_sigma, alpha);
  }
  const double offset = renyi_dh_bound_offset(alpha, eps);

  std::vector<SweepRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double t0 = now_ms();
    SweepRow row;
    row.n = n;
    // enumeration guards truncate the sweep instead of failing it
    {
      double dim = 1.0;
      for (std::size_t i = 0; i < n; ++i) dim *= static_cast<double>(e_base.out_dim());
      if (dim > 4096.0) break;
    }

    if (family == SweepFamily::singleton) {
      // per-type outputs built one kron chain at a time; the full n-fold
      // channel never materializes
      double best_dh = 0.0, best_d = 0.0;
      for (const TypeClass& t : enumerate_types(n, ax)) {
        const std::vector<std::size_t> s = t.representative();
        DensityMatrix rho = e_base.output_state(s[0]);
        DensityMatrix sigma = f_base->output_state(s[0]);
        for (std::size_t j = 1; j < n; ++j) {
          rho = rho.tensor(e_base.output_state(s[j]));
          sigma = sigma.tensor(f_base->output_state(s[j]));
        }
        best_dh = std::max(best_dh, hypothesis_test(rho, sigma, eps).value);
        double sum = 0.0;
        for (std::size_t x = 0; x < ax; ++x)
          sum += static_cast<double>(t.counts[x]) * d_letter[x];
        best_d = std::max(best_d, sum);
      }
      row.dh_over_n = best_dh / static_cast<double>(n);
      row.d_over_n = best_d / static_cast<double>(n);
    } else {
      // the per-input infimum over replacer outputs collapses to -log(1-eps);
      // the distance column needs the n-fold optimization and caps earlier
      row.dh_over_n = -std::log1p(-eps) / static_cast<double>(n);
      double choi_dim = 1.0;
      for (std::size_t i = 0; i < n; ++i)
        choi_dim *= static_cast<double>(e_base.alphabet_size() * e_base.out_dim());
      if (choi_dim > 4096.0) break;
      const FreeSetDescriptor s =
          FreeSetDescriptor::replacer(e_base.alphabet_size(), e_base.out_dim(), n);
      row.d_over_n = divergence_to_set(DivKind::umegaki, tensor_power(e_base, n), s, 2.0, tol)
                         .value /
                     static_cast<double>(n);
    }

    double renyi_max = 0.0;
    for (std::size_t x = 0; x < ax; ++x) renyi_max = std::max(renyi_max, renyi_letter[x]);
    row.upper_bound = renyi_max + offset / static_cast<double>(n);
    row.wall_ms = now_ms() - t0;
    rows.push_back(row);
  }
  return rows;
}

std::vector<SweepRow> sweep_stein(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  double eps, double alpha, std::size_t n_max) {
  const double d = rel_entropy(rho, sigma);
  const double renyi = sandwiched_renyi(rho, sigma, alpha);
  const double offset = renyi_dh_bound_offset(alpha, eps);

  std::vector<SweepRow> rows;
  DensityMatrix rho_n = rho, sigma_n = sigma;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (rho_n.dim() > 4096) fail(Errc::enumeration_too_large, "state dimension exceeds 4096");
    const double t0 = now_ms();
    SweepRow row;
    row.n = n;
    row.dh_over_n = hypothesis_test(rho_n, sigma_n, eps).value / static_cast<double>(n);
    row.d_over_n = d;
    row.upper_bound = renyi + offset / static_cast<double>(n);
    row.wall_ms = now_ms() - t0;
    rows.push_back(row);
    if (n < n_max) {
      rho_n = rho_n.tensor(rho);
      sigma_n = sigma_n.tensor(sigma);
    }
  }
  return rows;
}

}  // namespace steincq
