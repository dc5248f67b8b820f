#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "voaforge/lie.hpp"
#include "voaforge/mode.hpp"
#include "voaforge/poly.hpp"

namespace voaforge {

/// A state-valued field: app(k, s) returns u_(k) s in the standard index
/// convention where u_(k) lowers weight by k + 1 - wt(u). The depth-style
/// label u_[n] of a weight-w field is u_(n + w - 1).
struct Field {
  Rational wt;
  int par = 0;
  std::function<State(long, const State&)> app;

  State paren(long k, const State& s) const { return app(k, s); }
  /// u_[n] = u_(n + wt - 1); requires integer weight.
  State shift(long n, const State& s) const;
};

/// Family of operators indexed by a depth label n, e.g. Virasoro modes L_n.
using OpFamily = std::function<State(long, const State&)>;

long floor_rat(const Rational& r);

Field vacuum_field();
/// The generator field of one registered generator (weight 0 for b and phi,
/// weight 1 for a, del, currents and one-form generators).
Field gen_field(const ModeEngine& eng, GenId g);
Field fadd(const Field& a, const Field& b);
Field fscale(const Scalar& k, const Field& f);
/// Tu with (Tu)_(k) = -k u_(k-1).
Field fderive(const Field& f);
/// The field of the state a_(m) b, via the Borcherds iterate formula.
Field compose(const ModeEngine& eng, const Field& a, long m, const Field& b);

/// Field of a polynomial f(b) in the Weyl zero modes (weight 0), built by
/// iterated normal-ordered products b_i(-1)....
Field poly_field(const ModeEngine& eng, const Poly& f);
/// The state f(b_0)|0>.
State poly_state(const ModeEngine& eng, const Poly& f);

OpFamily shift_family(const Field& f);

/// ----- Virasoro verification -------------------------------------------

struct VirasoroReport {
  bool pass = true;
  bool zero_mode_ok = true;   // nu_[0] acts as the weight grading
  bool translation_ok = true; // nu_[-1] matches the translation operator
  bool relations_ok = true;   // [L_n, L_m] bracket table at the claimed c
  bool c_ok = true;           // measured central charge equals the claim
  Scalar c_measured;
  std::string witness;  // first violating identity, human-readable
};

struct NotWeightTwoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Check the Virasoro relations [L_n,L_m] = (n-m)L_{n+m} + c/12 (n^3-n)
/// delta_{n,-m} for |n|,|m| <= N on all states of excitation weight <= wmax,
/// and measure c from ([L_2, L_{-2}] - 4 L_0) on the ground states.
VirasoroReport virasoro_relations_check(const ModeEngine& eng, const OpFamily& L,
                                        const Rational& c_claim, int N, int wmax,
                                        int polydeg);

/// Full conformal-vector check for a field nu: weight-two state, nu_[0] =
/// weight grading, nu_[-1] = T on generator one-mode states, Virasoro
/// relations and measured central charge.
VirasoroReport virasoro_check(const ModeEngine& eng, const Field& nu,
                              const Rational& c_claim, int N, int wmax,
                              int polydeg);

struct CriticalLevelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sugawara conformal field 1/2 sum_a (X^a)_{(-1)} X_a with dual bases taken
/// with respect to level + killing/2; throws CriticalLevelError when that
/// form is singular (k = -h v for simple g).
Field sugawara_field(const ModeEngine& eng, const LieAlgebra& g,
                     const BilinearForm& level);

/// Expected Sugawara central charge k dim g / (k + hv) for simple g.
Rational sugawara_central_charge(const LieAlgebra& g, const Rational& k);

/// Check [L_n, A_m] = -m A_{n+m} (primary of weight one) for a family of
/// current-like operators; returns a witness string on failure.
std::optional<std::string> primary_weight_one_check(
    const ModeEngine& eng, const OpFamily& L,
    const std::vector<OpFamily>& currents, int N, int wmax, int polydeg);

std::string describe_state(const ModeEngine& eng, const State& s);

}  // namespace voaforge
