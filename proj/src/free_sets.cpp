#include "steincq/free_sets.hpp"

#include <algorithm>
#include <cmath>

#include "steincq/eigen.hpp"
#include "steincq/errors.hpp"
#include "steincq/pinching.hpp"

namespace steincq {

namespace {

std::size_t ipow(std::size_t b, std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= b;
  return r;
}

// ---- PPT family on a 2x2 cut ----

Matrix project_psd(const Matrix& m) {
  return positive_part(m);
}

Matrix project_ppt(const Matrix& m) {
  Matrix t = partial_transpose_second(m, 2, 2);
  t = positive_part(t);
  return partial_transpose_second(t, 2, 2);
}

Matrix project_trace_one(const Matrix& m) {
  Matrix out = m;
  const double tr = m.trace().real();
  const double shift = (1.0 - tr) / static_cast<double>(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) += shift;
  return out;
}

// Dykstra's alternating projections onto PSD cap PPT cap {Tr = 1}.
Matrix project_ppt_set(const Matrix& m, int cycles = 60) {
  Matrix x = m;
  Matrix p1(m.rows(), m.cols()), p2(m.rows(), m.cols()), p3(m.rows(), m.cols());
  for (int c = 0; c < cycles; ++c) {
    Matrix y = project_psd(x + p1);
    p1 = x + p1 - y;
    Matrix z = project_ppt(y + p2);
    p2 = y + p2 - z;
    Matrix w = project_trace_one(z + p3);
    p3 = z + p3 - w;
    const double delta = (w - x).max_abs();
    x = std::move(w);
    if (delta < 1e-14) break;
  }
  return x;
}

// Gradient of -Tr[rho log sigma] with respect to sigma (Frechet derivative of
// the log, regularized at the spectral floor).
Matrix neg_log_gradient(const Matrix& rho, const Matrix& sigma) {
  const EigResult e = eigh(sigma);
  const std::size_t d = sigma.rows();
  const double floor_ = 1e-12;
  Matrix rho_t = e.vectors.adjoint() * rho * e.vectors;
  const double scale = rho_t.max_abs();
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cplx r = rho_t(i, j);
      if (std::abs(r) < 1e-13 * scale) r = 0.0;
      const double a = std::max(e.values[i], floor_);
      const double b = std::max(e.values[j], floor_);
      const double phi =
          std::abs(a - b) < 1e-14 * std::max(a, b) ? 1.0 / a : (std::log(a) - std::log(b)) / (a - b);
      g(i, j) = -r * phi;
    }
  return e.vectors * g * e.vectors.adjoint();
}

class Ppt2x2Family final : public StateFamily {
 public:
  std::string name() const override { return "ppt_2x2"; }
  std::size_t dim() const override { return 4; }

  double membership_violation(const DensityMatrix& state) const override {
    if (state.dim() != 4) fail(Errc::unsupported_dimension, "ppt family needs a 2x2 cut");
    const double lmin = min_eigenvalue(partial_transpose_second(state.matrix(), 2, 2));
    return std::abs(std::min(0.0, lmin));
  }

  std::pair<double, DensityMatrix> min_rel_entropy(const DensityMatrix& rho) const override {
    if (rho.dim() != 4) fail(Errc::unsupported_dimension, "ppt family needs a 2x2 cut");
    // projected gradient descent on -Tr[rho log sigma]
    Matrix sigma = Matrix::identity(4);
    sigma *= cplx(0.25, 0.0);
    {
      // warm start: the pinched (classically dephased) input is always PPT
      Matrix start = rho.matrix();
      Matrix diag(4, 4);
      for (std::size_t i = 0; i < 4; ++i) diag(i, i) = start(i, i);
      sigma = 0.5 * (sigma + diag);
    }
    double step = 0.2;
    double best_val = kInf;
    Matrix best = sigma;
    for (int it = 0; it < 4000; ++it) {
      const Matrix g = neg_log_gradient(rho.matrix(), sigma);
      const double gn = std::sqrt(std::abs(hs_inner(g, g).real()));
      Matrix cand = project_ppt_set(sigma - (step / std::max(gn, 1e-12)) * g);
      const double val = rel_entropy(rho, DensityMatrix::trusted(project_psd(cand)));
      if (val <= best_val + 1e-15) {
        if (val < best_val) {
          best_val = val;
          best = cand;
        }
        sigma = std::move(cand);
      } else {
        step *= 0.7;
        if (step < 1e-9) break;
      }
    }
    return {best_val, DensityMatrix::trusted(project_psd(best))};
  }
};

double stationarity_certificate(const Matrix& rho, const Matrix& sigma) {
  const double eta = 1e-3;
  const Matrix g = neg_log_gradient(rho, sigma);
  const Matrix moved = project_ppt_set(sigma - eta * g);
  const Matrix diff = sigma - moved;
  return std::sqrt(std::abs(hs_inner(diff, diff).real())) / eta;
}

}  // namespace

std::shared_ptr<const StateFamily> ppt_2x2_family() {
  static const std::shared_ptr<const StateFamily> f = std::make_shared<Ppt2x2Family>();
  return f;
}

double ppt_stationarity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return stationarity_certificate(rho.matrix(), sigma.matrix());
}

// ---- FreeSetDescriptor ----

FreeSetDescriptor FreeSetDescriptor::singleton_iid(CqChannel base, std::size_t n) {
  FreeSetDescriptor d;
  d.kind_ = FreeSetKind::singleton_iid;
  d.n_ = n;
  d.base_alphabet_ = base.alphabet_size();
  d.base_out_dim_ = base.out_dim();
  d.base_ = std::move(base);
  return d;
}

FreeSetDescriptor FreeSetDescriptor::replacer(std::size_t base_alphabet,
                                              std::size_t base_out_dim, std::size_t n) {
  FreeSetDescriptor d;
  d.kind_ = FreeSetKind::replacer;
  d.n_ = n;
  d.base_alphabet_ = base_alphabet;
  d.base_out_dim_ = base_out_dim;
  return d;
}

FreeSetDescriptor FreeSetDescriptor::lifted(std::size_t base_alphabet,
                                            std::shared_ptr<const StateFamily> family,
                                            std::size_t n) {
  FreeSetDescriptor d;
  d.kind_ = FreeSetKind::lifted_state_set;
  d.n_ = n;
  d.base_alphabet_ = base_alphabet;
  d.family_ = std::move(family);
  d.base_out_dim_ = d.family_->dim();
  return d;
}

FreeSetDescriptor FreeSetDescriptor::ppt_output(std::size_t base_alphabet, std::size_t n) {
  FreeSetDescriptor d = lifted(base_alphabet, ppt_2x2_family(), n);
  d.kind_ = FreeSetKind::ppt_output;
  return d;
}

std::size_t FreeSetDescriptor::alphabet_size() const { return ipow(base_alphabet_, n_); }
std::size_t FreeSetDescriptor::out_dim() const { return ipow(base_out_dim_, n_); }

const CqChannel& FreeSetDescriptor::singleton_member() const {
  if (kind_ != FreeSetKind::singleton_iid)
    fail(Errc::unsupported_set_kind, "not a singleton set");
  if (!member_) member_ = tensor_power(*base_, n_);
  return *member_;
}

const CqChannel& FreeSetDescriptor::singleton_base() const {
  if (kind_ != FreeSetKind::singleton_iid)
    fail(Errc::unsupported_set_kind, "not a singleton set");
  return *base_;
}

const StateFamily& FreeSetDescriptor::family() const {
  if (!family_) fail(Errc::unsupported_set_kind, "set has no state family");
  return *family_;
}

CqChannel FreeSetDescriptor::full_rank_member() const {
  if (kind_ == FreeSetKind::singleton_iid) return singleton_member();
  return CqChannel::depolarizing(alphabet_size(), out_dim());
}

void FreeSetDescriptor::check_shape(const CqChannel& e) const {
  if (e.alphabet_size() != alphabet_size() || e.out_dim() != out_dim())
    fail(Errc::shape_mismatch, "channel does not match the free set's shape");
}

FreeSetDescriptor::AxiomReport FreeSetDescriptor::check_axioms() const {
  AxiomReport r;
  if (kind_ == FreeSetKind::singleton_iid) {
    // Tensor closure across n is the IID structure itself; axiom (4) needs the
    // base member's Choi to have full rank.
    double lmin = kInf;
    const ChoiState j = choi(*base_);
    for (std::size_t x = 0; x < j.in_dim(); ++x)
      lmin = std::min(lmin, min_eigenvalue(j.block(x)));
    r.choi_min_eigenvalue = lmin;
    r.full_rank_member = lmin > 1e-12;
  } else {
    const std::size_t d = base_alphabet_ * base_out_dim_;
    r.choi_min_eigenvalue = 1.0 / static_cast<double>(d);
    r.full_rank_member = true;  // completely depolarizing member
  }
  return r;
}

// ---- membership ----

MembershipResult membership(const CqChannel& f, const FreeSetDescriptor& s) {
  s.check_shape(f);
  double violation = 0.0;
  switch (s.kind()) {
    case FreeSetKind::replacer: {
      for (std::size_t x = 1; x < f.alphabet_size(); ++x) {
        Matrix d = f.output(x);
        d -= f.output(0);
        violation = std::max(violation, trace_norm(d));
      }
      break;
    }
    case FreeSetKind::singleton_iid: {
      const CqChannel& m = s.singleton_member();
      for (std::size_t x = 0; x < f.alphabet_size(); ++x) {
        Matrix d = f.output(x);
        d -= m.output(x);
        violation = std::max(violation, trace_norm(d));
      }
      break;
    }
    case FreeSetKind::lifted_state_set:
    case FreeSetKind::ppt_output: {
      if (s.copies() != 1)
        fail(Errc::unsupported_dimension, "state-family membership is restricted to n = 1");
      for (std::size_t x = 0; x < f.alphabet_size(); ++x)
        violation = std::max(violation, s.family().membership_violation(f.output_state(x)));
      break;
    }
  }
  return {violation <= 1e-9, violation};
}

// ---- Blahut-Arimoto ----

CapacityResult holevo_capacity(const CqChannel& e, double tol, std::size_t max_iterations,
                               std::vector<double>* lower_trace) {
  if (!(tol > 0.0)) fail(Errc::eps_out_of_range, "tol must be positive");
  const std::size_t m = e.alphabet_size();
  const std::size_t d = e.out_dim();

  // letter self-entropies Tr[omega log omega]
  std::vector<double> self(m, 0.0);
  for (std::size_t x = 0; x < m; ++x) {
    const std::vector<double> ev = eigvalsh(e.output(x));
    double thr = 0.0;
    for (double v : ev) thr = std::max(thr, std::abs(v));
    thr *= kSupportRelTol;
    for (double v : ev)
      if (v > thr) self[x] += v * std::log(v);
  }

  CapacityResult r;
  r.optimal_p.assign(m, 1.0 / static_cast<double>(m));
  std::vector<double> dx(m, 0.0);
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    Matrix sigma(d, d);
    for (std::size_t x = 0; x < m; ++x) {
      if (r.optimal_p[x] == 0.0) continue;
      Matrix t = e.output(x);
      t *= cplx(r.optimal_p[x], 0.0);
      sigma += t;
    }
    const EigResult es = eigh(sigma);
    double thr = 0.0;
    for (double v : es.values) thr = std::max(thr, std::abs(v));
    thr *= kSupportRelTol;
    const Matrix logs =
        map_eigenvalues(es, [&](double v) { return v > thr ? std::log(v) : 0.0; });

    double lower = 0.0, upper = -kInf;
    for (std::size_t x = 0; x < m; ++x) {
      const double off = mass_off_support(e.output(x), sigma);
      dx[x] = off > 1e-10 ? kInf : self[x] - trace_product(e.output(x), logs);
      lower += r.optimal_p[x] == 0.0 || !std::isfinite(dx[x]) ? 0.0 : r.optimal_p[x] * dx[x];
      upper = std::max(upper, dx[x]);
    }
    r.lower = lower;
    r.upper = upper;
    r.iterations = it;
    if (lower_trace) lower_trace->push_back(lower);
    r.optimal_sigma = DensityMatrix::trusted(map_eigenvalues(
        es, [](double v) { return v < 0.0 ? 0.0 : v; }));
    if (upper - lower <= tol) return r;

    // p(x) <- p(x) exp(D_x), normalized; tiny letters freeze at zero
    double maxd = -kInf;
    for (std::size_t x = 0; x < m; ++x)
      if (r.optimal_p[x] > 0.0 && std::isfinite(dx[x])) maxd = std::max(maxd, dx[x]);
    double z = 0.0;
    for (std::size_t x = 0; x < m; ++x) {
      if (r.optimal_p[x] == 0.0) continue;
      r.optimal_p[x] *= std::exp(dx[x] - maxd);
      z += r.optimal_p[x];
    }
    for (double& p : r.optimal_p) {
      p /= z;
      if (p < 1e-15) p = 0.0;
    }
  }
  fail(Errc::non_convergence, "Blahut-Arimoto did not close the bracket");
}

// ---- inner state-set minimization ----

MinRelEntropyResult min_relative_entropy_to_set(const DensityMatrix& rho, StateSetKind kind,
                                                std::size_t ref_dim) {
  MinRelEntropyResult r;
  switch (kind) {
    case StateSetKind::product_with_fixed_marginal: {
      if (ref_dim == 0 || rho.dim() % ref_dim != 0)
        fail(Errc::dimension_mismatch, "state does not factor over the reference");
      const std::size_t da = rho.dim() / ref_dim;
      const Matrix rho_r = partial_trace_second(rho.matrix(), ref_dim, da);
      const Matrix rho_a = partial_trace_first(rho.matrix(), ref_dim, da);
      r.closest = DensityMatrix::trusted(rho_a);
      const DensityMatrix product = DensityMatrix::trusted(rho_r.kron(rho_a));
      r.value = rel_entropy(rho, product);
      r.stationarity = 0.0;
      break;
    }
    case StateSetKind::ppt_2x2: {
      auto [value, closest] = ppt_2x2_family()->min_rel_entropy(rho);
      r.value = value;
      r.closest = closest;
      r.stationarity = stationarity_certificate(rho.matrix(), closest.matrix());
      if (r.stationarity > 1e-6)
        fail(Errc::non_convergence, "ppt projection did not reach stationarity");
      break;
    }
  }
  return r;
}

// ---- joint diagonalization ----

std::optional<Matrix> joint_eigenbasis(const std::vector<Matrix>& mats, double tol) {
  if (mats.empty()) return std::nullopt;
  const std::size_t d = mats[0].rows();
  Matrix u = Matrix::identity(d);
  std::vector<std::vector<std::size_t>> blocks{std::vector<std::size_t>(d)};
  for (std::size_t i = 0; i < d; ++i) blocks[0][i] = i;

  for (const Matrix& m : mats) {
    std::vector<std::vector<std::size_t>> next;
    const Matrix mt = u.adjoint() * m * u;
    for (const auto& b : blocks) {
      if (b.size() == 1) {
        next.push_back(b);
        continue;
      }
      Matrix sub(b.size(), b.size());
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) sub(i, j) = mt(b[i], b[j]);
      const EigResult es = eigh(sub);
      // rotate the block's columns of u
      Matrix cols(d, b.size());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < b.size(); ++j) cols(i, j) = u(i, b[j]);
      const Matrix rotated = cols * es.vectors;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < b.size(); ++j) u(i, b[j]) = rotated(i, j);
      std::size_t k = 0;
      const std::vector<std::size_t> id = cluster_ascending(es.values, 1e-9, &k);
      std::vector<std::vector<std::size_t>> sub_blocks(k);
      for (std::size_t j = 0; j < b.size(); ++j) sub_blocks[id[j]].push_back(b[j]);
      for (auto& sb : sub_blocks) next.push_back(std::move(sb));
    }
    blocks = std::move(next);
  }

  // verify
  double scale = 0.0;
  for (const Matrix& m : mats) scale = std::max(scale, m.max_abs());
  for (const Matrix& m : mats) {
    const Matrix mt = u.adjoint() * m * u;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (i != j && std::abs(mt(i, j)) > tol * std::max(scale, 1e-300)) return std::nullopt;
  }
  return u;
}

// ---- log robustness ----

RobustnessResult log_robustness(const CqChannel& e, const FreeSetDescriptor& s) {
  s.check_shape(e);
  RobustnessResult r;
  switch (s.kind()) {
    case FreeSetKind::singleton_iid: {
      const CqChannel& f = s.singleton_member();
      r.value = -kInf;
      for (std::size_t x = 0; x < e.alphabet_size(); ++x) {
        const double v = dmax_psd(e.output(x), f.output(x));
        if (v > r.value) {
          r.value = v;
          r.witness_letter = x;
        }
      }
      r.value = std::max(r.value, 0.0);
      r.bracket_lo = r.bracket_hi = r.value;
      r.witness = f;
      break;
    }
    case FreeSetKind::replacer: {
      const std::size_t m = e.alphabet_size();
      std::vector<Matrix> outs;
      outs.reserve(m);
      for (std::size_t x = 0; x < m; ++x) outs.push_back(e.output(x));
      double lambda_lo = 1.0, lambda_hi = 1.0;
      Matrix sigma_prime;
      if (m == 2) {
        // exact: Tr sigma' = 1 + (1/2)||omega_0 - omega_1||_1
        sigma_prime = outs[1] + positive_part(outs[0] - outs[1]);
        lambda_lo = lambda_hi = sigma_prime.trace().real();
      } else if (auto u = joint_eigenbasis(outs)) {
        // commuting family: elementwise max in the joint eigenbasis
        const std::size_t d = e.out_dim();
        std::vector<double> mx(d, 0.0);
        for (const Matrix& w : outs) {
          const Matrix wt = u->adjoint() * w * *u;
          for (std::size_t i = 0; i < d; ++i) mx[i] = std::max(mx[i], wt(i, i).real());
        }
        double lam = 0.0;
        for (double v : mx) lam += v;
        sigma_prime = *u * Matrix::diagonal(mx) * u->adjoint();
        lambda_lo = lambda_hi = lam;
      } else {
        // certified bracket: PGM dual below, pairwise-max feasible point above
        sigma_prime = outs[0];
        for (std::size_t x = 1; x < m; ++x) sigma_prime += positive_part(outs[x] - outs[0]);
        lambda_hi = sigma_prime.trace().real();
        Matrix sum(e.out_dim(), e.out_dim());
        for (const Matrix& w : outs) sum += w;
        const EigResult es = eigh(sum);
        double thr = 0.0;
        for (double v : es.values) thr = std::max(thr, std::abs(v));
        thr *= kSupportRelTol;
        const Matrix w =
            map_eigenvalues(es, [&](double v) { return v > thr ? 1.0 / std::sqrt(v) : 0.0; });
        double dual = 0.0;
        for (const Matrix& wx : outs) {
          const Matrix mx = w * wx * w;
          dual += trace_product(mx, wx);
        }
        lambda_lo = std::max(1.0, dual);
      }
      r.value = std::log(std::max(lambda_hi, 1.0));
      r.bracket_lo = std::log(std::max(lambda_lo, 1.0));
      r.bracket_hi = r.value;
      sigma_prime *= cplx(1.0 / lambda_hi, 0.0);
      r.witness = CqChannel::replacer(m, DensityMatrix::trusted(sigma_prime));
      break;
    }
    default:
      fail(Errc::unsupported_set_kind, "no certified robustness routine for this set kind");
  }
  return r;
}

}  // namespace steincq
