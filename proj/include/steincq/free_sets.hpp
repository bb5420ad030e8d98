#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "steincq/channel.hpp"
#include "steincq/divergences.hpp"

namespace steincq {

// Pluggable family of free output states for lifted sets. Shipped instance:
// PPT states on a 2x2 output cut (where PPT = SEP).
struct StateFamily {
  virtual ~StateFamily() = default;
  virtual std::string name() const = 0;
  virtual std::size_t dim() const = 0;
  // 0 for members; a trace-norm-scale distance otherwise.
  virtual double membership_violation(const DensityMatrix& state) const = 0;
  // inf_{sigma in family} D(rho || sigma) with the closest state.
  virtual std::pair<double, DensityMatrix> min_rel_entropy(const DensityMatrix& rho) const = 0;
};

std::shared_ptr<const StateFamily> ppt_2x2_family();

enum class FreeSetKind { singleton_iid, replacer, lifted_state_set, ppt_output };

// One of the Definition-3.1 families of free c-q channel sets at copy count n.
class FreeSetDescriptor {
 public:
  static FreeSetDescriptor singleton_iid(CqChannel base, std::size_t n);
  static FreeSetDescriptor replacer(std::size_t base_alphabet, std::size_t base_out_dim,
                                    std::size_t n);
  static FreeSetDescriptor lifted(std::size_t base_alphabet,
                                  std::shared_ptr<const StateFamily> family, std::size_t n);
  // PPT-output channels with a 2 (x) 2 output cut per copy.
  static FreeSetDescriptor ppt_output(std::size_t base_alphabet, std::size_t n);

  FreeSetKind kind() const { return kind_; }
  std::size_t copies() const { return n_; }
  std::size_t base_alphabet() const { return base_alphabet_; }
  std::size_t base_out_dim() const { return base_out_dim_; }
  std::size_t alphabet_size() const;  // base_alphabet^n
  std::size_t out_dim() const;        // base_out_dim^n

  // The single member F^{(x)n} of a singleton set.
  const CqChannel& singleton_member() const;
  const CqChannel& singleton_base() const;
  const StateFamily& family() const;

  // Designated full-rank-Choi member F_*^{(x)n} (Definition 3.1(4)): the
  // completely depolarizing channel, except for singleton sets where it is the
  // member itself.
  CqChannel full_rank_member() const;

  void check_shape(const CqChannel& e) const;

  struct AxiomReport {
    bool convex_closed = true;       // structural for all four kinds
    bool permutation_closed = true;  // structural
    bool tensor_closed = true;       // structural
    bool full_rank_member = false;   // checked numerically
    double choi_min_eigenvalue = 0.0;
  };
  AxiomReport check_axioms() const;

 private:
  FreeSetKind kind_;
  std::size_t n_ = 1, base_alphabet_ = 0, base_out_dim_ = 0;
  std::optional<CqChannel> base_;            // singleton
  mutable std::optional<CqChannel> member_;  // cached F^{(x)n}
  std::shared_ptr<const StateFamily> family_;
};

struct MembershipResult {
  bool is_member = false;
  double violation = 0.0;
};
MembershipResult membership(const CqChannel& f, const FreeSetDescriptor& s);

// Blahut-Arimoto bracket for the Holevo capacity of a c-q channel.
struct CapacityResult {
  double lower = 0.0;  // achieved mutual information
  double upper = 0.0;  // divergence radius bound max_x D(omega_x || sigma)
  std::size_t iterations = 0;
  std::vector<double> optimal_p;
  DensityMatrix optimal_sigma;
};
CapacityResult holevo_capacity(const CqChannel& e, double tol,
                               std::size_t max_iterations = 100000,
                               std::vector<double>* lower_trace = nullptr);

enum class StateSetKind { product_with_fixed_marginal, ppt_2x2 };

// Inner minimization of the relative entropy over a state set. The replacer
// inner problem has the closed-form minimizer sigma = Tr_R rho with value
// I(R:A); ppt_2x2 runs projected gradient descent with Dykstra projections.
struct MinRelEntropyResult {
  double value = 0.0;
  DensityMatrix closest;
  double stationarity = 0.0;  // first-order certificate (ppt path)
};
MinRelEntropyResult min_relative_entropy_to_set(const DensityMatrix& rho, StateSetKind kind,
                                                std::size_t ref_dim = 0);

// First-order certificate for the ppt_2x2 problem at a candidate sigma:
// the scaled distance between sigma and its projected-gradient update.
double ppt_stationarity(const DensityMatrix& rho, const DensityMatrix& sigma);

// inf_{F in S} D_max(E || F) with certificates.
struct RobustnessResult {
  double value = 0.0;  // log(1 + r); +inf when unreachable
  double bracket_lo = 0.0, bracket_hi = 0.0;
  std::optional<CqChannel> witness;   // achieving / feasible free channel
  std::size_t witness_letter = 0;     // singleton: argmax letter
};
RobustnessResult log_robustness(const CqChannel& e, const FreeSetDescriptor& s);

// Simultaneously diagonalizes pairwise-commuting Hermitian matrices; returns
// the common unitary or nullopt if they fail to commute within tol.
std::optional<Matrix> joint_eigenbasis(const std::vector<Matrix>& mats, double tol = 1e-10);

}  // namespace steincq
