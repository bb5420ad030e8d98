#include "steincq/divergences.hpp"

#include <algorithm>
#include <cmath>

#include "steincq/eigen.hpp"
#include "steincq/errors.hpp"
#include "steincq/pinching.hpp"

namespace steincq {

namespace {

constexpr double kOffSupportTol = 1e-10;
constexpr double kZeroEigRelTol = 1e-11;  // zero-eigenspace detection in the dual
constexpr int kBisectionCap = 200;

void check_dims(const Matrix& a, const Matrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    fail(Errc::dimension_mismatch, "states must share a dimension");
}

double support_threshold(const std::vector<double>& evals) {
  double m = 0.0;
  for (double v : evals) m = std::max(m, std::abs(v));
  return kSupportRelTol * std::max(m, 1e-300);
}

// <v_j| rho |v_j> for every eigenvector column.
std::vector<double> eigenbasis_weights(const EigResult& e, const Matrix& rho) {
  const Matrix b = rho * e.vectors;
  std::vector<double> w(e.values.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < e.vectors.rows(); ++i)
      s += std::conj(e.vectors(i, j)) * b(i, j);
    w[j] = s.real();
  }
  return w;
}

// Tensor powers of diagonal states stay exactly diagonal; the spectral
// primitives below short-circuit to the classical formulas in that case.
bool both_diagonal(const Matrix& a, const Matrix& b) {
  return a.is_exactly_diagonal() && b.is_exactly_diagonal();
}

}  // namespace

double mass_off_support(const Matrix& rho, const Matrix& sigma) {
  if (both_diagonal(rho, sigma)) {
    const std::vector<double> p = rho.real_diagonal();
    const std::vector<double> q = sigma.real_diagonal();
    const double ts = support_threshold(q);
    double off = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (q[i] <= ts) off += p[i];
    return off;
  }
  const EigResult es = eigh(sigma);
  const double ts = support_threshold(es.values);
  const std::vector<double> w = eigenbasis_weights(es, rho);
  double off = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (es.values[j] <= ts) off += w[j];
  return off;
}

double rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_dims(rho.matrix(), sigma.matrix());
  if (both_diagonal(rho.matrix(), sigma.matrix())) {
    const std::vector<double> p = rho.matrix().real_diagonal();
    const std::vector<double> q = sigma.matrix().real_diagonal();
    const double tq = support_threshold(q), tp = support_threshold(p);
    double off = 0.0, s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (q[i] <= tq) off += p[i];
      if (p[i] > tp && q[i] > tq) s += p[i] * (std::log(p[i]) - std::log(q[i]));
    }
    return off > kOffSupportTol ? kInf : s;
  }
  const EigResult es = eigh(sigma.matrix());
  const double ts = support_threshold(es.values);
  const std::vector<double> w = eigenbasis_weights(es, rho.matrix());
  double off = 0.0, cross = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (es.values[j] <= ts)
      off += w[j];
    else
      cross += w[j] * std::log(es.values[j]);
  }
  if (off > kOffSupportTol) return kInf;

  double self = 0.0;
  const std::vector<double> rv = eigvalsh(rho.matrix());
  const double tr = support_threshold(rv);
  for (double v : rv)
    if (v > tr) self += v * std::log(v);
  return self - cross;
}

double sandwiched_renyi(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
  check_dims(rho.matrix(), sigma.matrix());
  if (!(alpha > 1.0)) fail(Errc::alpha_out_of_range, "alpha must exceed 1");
  if (both_diagonal(rho.matrix(), sigma.matrix())) {
    const std::vector<double> p = rho.matrix().real_diagonal();
    const std::vector<double> q = sigma.matrix().real_diagonal();
    const double tq = support_threshold(q), tp = support_threshold(p);
    double off = 0.0, tr = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (q[i] <= tq) off += p[i];
      if (p[i] > tp && q[i] > tq) tr += std::pow(p[i], alpha) * std::pow(q[i], 1.0 - alpha);
    }
    return off > kOffSupportTol ? kInf : std::log(tr) / (alpha - 1.0);
  }
  const EigResult es = eigh(sigma.matrix());
  const double ts = support_threshold(es.values);
  {
    const std::vector<double> w = eigenbasis_weights(es, rho.matrix());
    double off = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (es.values[j] <= ts) off += w[j];
    if (off > kOffSupportTol) return kInf;
  }
  const double p = (1.0 - alpha) / (2.0 * alpha);
  const Matrix b = map_eigenvalues(es, [&](double v) { return v > ts ? std::pow(v, p) : 0.0; });
  const Matrix g = b * rho.matrix() * b;
  double tr = 0.0;
  for (double v : eigvalsh(g))
    if (v > 0.0) tr += std::pow(v, alpha);
  return std::log(tr) / (alpha - 1.0);
}

double dmax_psd(const Matrix& rho, const Matrix& sigma) {
  check_dims(rho, sigma);
  {
    Matrix d = rho;
    d -= sigma;
    if (d.max_abs() == 0.0) return 0.0;
  }
  if (both_diagonal(rho, sigma)) {
    const std::vector<double> p = rho.real_diagonal();
    const std::vector<double> q = sigma.real_diagonal();
    const double tq = support_threshold(q);
    double off = 0.0, ratio = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (q[i] <= tq)
        off += p[i];
      else
        ratio = std::max(ratio, p[i] / q[i]);
    }
    return off > kOffSupportTol ? kInf : std::log(ratio);
  }
  const EigResult es = eigh(sigma);
  const double ts = support_threshold(es.values);
  const std::vector<double> w = eigenbasis_weights(es, rho);
  double off = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (es.values[j] <= ts) off += w[j];
  if (off > kOffSupportTol) return kInf;
  const Matrix isq =
      map_eigenvalues(es, [&](double v) { return v > ts ? 1.0 / std::sqrt(v) : 0.0; });
  const Matrix g = isq * rho * isq;
  return std::log(max_eigenvalue(g));
}

double dmax(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return dmax_psd(rho.matrix(), sigma.matrix());
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_dims(rho.matrix(), sigma.matrix());
  Matrix d = rho.matrix();
  d -= sigma.matrix();
  return 0.5 * trace_norm(d);
}

namespace {

// One bisection step's view of mu*rho - sigma.
struct DualPoint {
  double tr_plus = 0.0;    // Tr[P_+ rho]
  double tr_zero = 0.0;    // Tr[P_0 rho]
  double pos_sum = 0.0;    // Tr[(mu rho - sigma)_+]
  std::vector<std::size_t> plus_idx, zero_idx;
  EigResult eig;           // dense path only
};

}  // namespace

TestResult hypothesis_test(const DensityMatrix& rho, const DensityMatrix& sigma, double eps) {
  check_dims(rho.matrix(), sigma.matrix());
  if (!(eps > 0.0 && eps < 1.0)) fail(Errc::eps_out_of_range, "eps must lie in (0,1)");
  const std::size_t d = rho.dim();
  const Matrix& rm = rho.matrix();
  const Matrix& sm = sigma.matrix();

  const bool diagonal = rm.is_exactly_diagonal() && sm.is_exactly_diagonal();
  const std::vector<double> pd = diagonal ? rm.real_diagonal() : std::vector<double>{};
  const std::vector<double> qd = diagonal ? sm.real_diagonal() : std::vector<double>{};

  // A test supported off supp(sigma) already reaches type-I error <= eps.
  {
    double off;
    Matrix off_proj;
    if (diagonal) {
      double qmax = 0.0;
      for (double v : qd) qmax = std::max(qmax, std::abs(v));
      const double tq = kSupportRelTol * std::max(qmax, 1e-300);
      off = 0.0;
      off_proj = Matrix(d, d);
      for (std::size_t i = 0; i < d; ++i)
        if (qd[i] <= tq) {
          off += pd[i];
          off_proj(i, i) = 1.0;
        }
    } else {
      const EigResult es = eigh(sm);
      const double ts = support_threshold(es.values);
      const std::vector<double> w = eigenbasis_weights(es, rm);
      std::vector<std::size_t> idx;
      off = 0.0;
      for (std::size_t j = 0; j < d; ++j)
        if (es.values[j] <= ts) {
          off += w[j];
          idx.push_back(j);
        }
      off_proj = idx.empty() ? Matrix(d, d) : eigenspace_projector(es, idx);
    }
    if (off >= 1.0 - eps) {
      TestResult r;
      r.value = kInf;
      r.optimal_test = std::move(off_proj);
      r.dual_multiplier = kInf;
      r.duality_gap = 0.0;
      return r;
    }
  }

  // Zero-eigenvalue detection scale: |mu rho - sigma| collapses when rho and
  // sigma coincide near the kink, so the input scale enters the max.
  const double rho_scale = rm.max_abs();
  const double sigma_scale = sm.max_abs();

  const auto evaluate = [&](double mu) {
    DualPoint pt;
    const double input_scale = mu * rho_scale + sigma_scale;
    if (diagonal) {
      std::vector<double> lam(d);
      double scale = input_scale;
      for (std::size_t i = 0; i < d; ++i) {
        lam[i] = mu * pd[i] - qd[i];
        scale = std::max(scale, std::abs(lam[i]));
      }
      const double tau = kZeroEigRelTol * std::max(scale, 1e-300);
      for (std::size_t i = 0; i < d; ++i) {
        if (lam[i] > tau) {
          pt.plus_idx.push_back(i);
          pt.tr_plus += pd[i];
          pt.pos_sum += lam[i];
        } else if (lam[i] >= -tau) {
          pt.zero_idx.push_back(i);
          pt.tr_zero += pd[i];
        }
      }
    } else {
      Matrix a = rm;
      a *= cplx(mu, 0.0);
      a -= sm;
      pt.eig = eigh(a);
      double scale = input_scale;
      for (double v : pt.eig.values) scale = std::max(scale, std::abs(v));
      const double tau = kZeroEigRelTol * std::max(scale, 1e-300);
      const std::vector<double> w = eigenbasis_weights(pt.eig, rm);
      for (std::size_t j = 0; j < d; ++j) {
        if (pt.eig.values[j] > tau) {
          pt.plus_idx.push_back(j);
          pt.tr_plus += w[j];
          pt.pos_sum += pt.eig.values[j];
        } else if (pt.eig.values[j] >= -tau) {
          pt.zero_idx.push_back(j);
          pt.tr_zero += w[j];
        }
      }
    }
    return pt;
  };

  const double target = 1.0 - eps;

  // Bracket: g'(mu) = (1-eps) - Tr[P_+ rho] is positive at 0; grow the top end
  // until it turns negative.
  double lo = 0.0;
  double hi;
  {
    const double dm = dmax(rho, sigma);
    hi = std::isfinite(dm) ? std::exp(dm) + 1.0 : 2.0;
    int grow = 0;
    while (evaluate(hi).tr_plus <= target) {
      hi *= 2.0;
      if (++grow > kBisectionCap)
        fail(Errc::convergence_failure, "dual bracket expansion failed");
    }
  }
  for (int it = 0; it < kBisectionCap; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating resolution
    if (evaluate(mid).tr_plus <= target)
      lo = mid;
    else
      hi = mid;
  }

  const double mu = lo;  // largest tested mu with Tr[P_+ rho] <= 1-eps
  DualPoint pt = evaluate(mu);
  double s = 0.0;
  if (pt.tr_zero > 1e-300) s = std::clamp((target - pt.tr_plus) / pt.tr_zero, 0.0, 1.0);

  TestResult r;
  r.dual_multiplier = mu;
  if (diagonal) {
    Matrix m(d, d);
    for (std::size_t i : pt.plus_idx) m(i, i) = 1.0;
    for (std::size_t i : pt.zero_idx) m(i, i) = s;
    r.optimal_test = std::move(m);
  } else {
    Matrix m = pt.plus_idx.empty() ? Matrix(d, d) : eigenspace_projector(pt.eig, pt.plus_idx);
    if (!pt.zero_idx.empty()) {
      Matrix z = eigenspace_projector(pt.eig, pt.zero_idx);
      z *= cplx(s, 0.0);
      m += z;
    }
    r.optimal_test = std::move(m);
  }
  const double beta = trace_product(r.optimal_test, sm);
  const double dual = mu * target - pt.pos_sum;
  r.duality_gap = std::abs(beta - dual);
  r.value = beta > 0.0 ? -std::log(beta) : kInf;
  return r;
}

PinchingGap pinching_entropy_gap(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_dims(rho.matrix(), sigma.matrix());
  if (mass_off_support(rho.matrix(), sigma.matrix()) > kOffSupportTol)
    fail(Errc::support_violation, "rho is not supported inside sigma");
  const PinchingMap e = pinching_of(sigma);
  const DensityMatrix pinched = DensityMatrix::trusted(e.apply(rho.matrix()));
  PinchingGap g;
  g.gap = rel_entropy(rho, sigma) - rel_entropy(pinched, sigma);
  g.bound = std::log(static_cast<double>(e.cluster_count()));
  return g;
}

}  // namespace steincq
