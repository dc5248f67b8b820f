#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "voaforge/field.hpp"
#include "voaforge/lie.hpp"
#include "voaforge/linalg.hpp"
#include "voaforge/mode.hpp"

namespace voaforge {

struct NotAModuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ObstructionNonzeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnboundedBlockError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotPrimaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInvariantError : std::runtime_error {
  NotInvariantError(std::string msg, int a, long n)
      : std::runtime_error(std::move(msg)), gen(a), mode(n) {}
  int gen;
  long mode;
};

/// ----- Chevalley-Eilenberg complex (finite-dimensional oracle) ----------

struct CEComplex {
  int dim_g = 0;
  int dim_w = 0;
  std::vector<std::size_t> chain_dims;  // per exterior degree 0..dim_g
  std::vector<std::size_t> h_dims;      // cohomology dimensions per degree
};

/// Build Lambda g* (x) W with differential Q = q + theta; validates the
/// module axioms (NotAModuleError) and that Q^2 = 0.
CEComplex ce_build(const LieAlgebra& g, const std::vector<Matrix>& action);

/// dim W^g, independently from the kernel of the stacked action matrices.
std::size_t invariants_dim(const LieAlgebra& g, const std::vector<Matrix>& action);

/// Verify [J,q] = q, J theta = theta, [q,q] = 0, q theta + [theta,theta]/2
/// = 0 on the exterior algebra model; nullopt on success. The raw overload
/// takes an unvalidated structure tensor (for negative controls).
std::optional<std::string> jq_relations_check(const LieAlgebra& g);
std::optional<std::string> jq_relations_check_raw(
    int dim, const std::vector<std::vector<std::vector<Rational>>>& c);

/// ----- Feigin complex ----------------------------------------------------

/// Ghosts D^ch(Pi g) for the BRST algebra g, tensored with an affine matter
/// sector. The hat-g action on matter is either "inner" (via the matter
/// currents themselves; requires matter algebra = g) or trivial (level 0).
class FeiginComplex {
 public:
  FeiginComplex(const LieAlgebra& g, const LieAlgebra& matter_g,
                const BilinearForm& matter_level, bool inner_action);

  const LieAlgebra& g() const { return g_; }
  const ModeEngine& engine() const { return *eng_; }
  bool inner() const { return inner_; }
  /// Level form of the hat-g action on matter.
  BilinearForm action_level() const;

  /// t_{a,n} acting on the matter sector (zero map when the action is
  /// trivial).
  State matter_act(int a, long n, const State& s) const;
  State q0(const State& s) const;      // Q_0 = q_0 + theta_0
  OpFamily ghost_virasoro() const;     // L^{Pi g}_n, central charge -2 dim g
  int ghost_number(const Term& t) const { return eng_->ghost_number(t); }

 private:
  LieAlgebra g_;
  LieAlgebra matter_g_;
  BilinearForm matter_level_;
  bool inner_;
  std::unique_ptr<ModeEngine> eng_;
  Field qf_;  // ghost BRST current q
};

/// Q_0^2 versus the displayed obstruction operator
/// (lambda_ad + lambda)(t_a,t_b)/2 * sum_n n phi^a_{-n} phi^b_n
/// on all states of weight <= wmax; nullopt when they agree.
std::optional<std::string> q0_square_check(const FeiginComplex& fx, int wmax);
/// true iff Q_0^2 = 0 on all states of weight <= wmax.
bool q0_square_zero(const FeiginComplex& fx, int wmax);

struct CohomologyEntry {
  int weight = 0;
  int degree = 0;
  std::size_t chain_dim = 0;
  std::size_t dim_ker = 0;
  std::size_t dim_im = 0;  // image of the incoming differential
  std::size_t dim_h = 0;
};

struct CohomologyReport {
  std::vector<CohomologyEntry> entries;
  std::map<int, long> euler;  // per weight; equals alternating chain sum
  bool euler_ok = true;
  std::size_t weight0_invariants = 0;  // dim W_0^g from the CE oracle
  bool weight0_crosscheck_ok = false;
};

/// Exact blockwise semi-infinite cohomology for weights <= w_max. Requires
/// the action level to be exactly -lambda_ad (ObstructionNonzeroError);
/// every (weight, degree) block must fit in the column budget
/// (UnboundedBlockError). The weight-0 row is cross-checked against the
/// finite Chevalley-Eilenberg complex on W_0. permutation_seed != 0
/// shuffles the chain bases first (the dimensions must not change).
CohomologyReport semiinf_cohomology(const FeiginComplex& fx,
                                    const std::vector<Matrix>& w0_action,
                                    int w_max, std::size_t budget = 5000,
                                    unsigned permutation_seed = 0);

struct InducedVirasoroReport {
  bool pass = true;
  bool commutes_with_q0 = true;
  VirasoroReport diagonal;
  std::string witness;
};

/// Lemma on induced structures: given the matter Virasoro family (verified
/// primary against the action currents; NotPrimaryError otherwise), check
/// [Q_0, L^{ghost}_n + L^W_n] = 0 and that the diagonal family is Virasoro
/// at central charge c_W - 2 dim g.
InducedVirasoroReport induced_virasoro_check(const FeiginComplex& fx,
                                             const OpFamily& matter_L,
                                             const Rational& c_matter, int N,
                                             int wmax);

/// J_0 eigenvalues on the weight-k chains lie in [-k, dim g + k].
bool grading_bound_check(const FeiginComplex& fx, int k);

/// Lemma on the centralizer map: u (a matter state) must satisfy
/// t_{a,n} u = 0 for all a and n >= 0 (NotInvariantError with witness
/// otherwise); then 1 (x) u is Q_0-closed.
bool centralizer_map_check(const FeiginComplex& fx, const State& u);

}  // namespace voaforge
