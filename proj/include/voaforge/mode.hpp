#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "voaforge/lie.hpp"
#include "voaforge/scalar.hpp"

namespace voaforge {

/// Generator families of the free-field mode algebras. The enum order is the
/// tie-break used inside canonical monomials; at mode index 0 the weight-zero
/// creators (b, phi) must sort before the annihilating families.
enum class Family : std::uint8_t {
  WeylB = 0,    // b^i_n          even, [a_{i,n}, b^j_m] = delta delta
  BcPhi = 1,    // phi^a_n        odd
  CliffE = 2,   // e_{i,n}        odd,  [e,e]_+ = -2 delta delta
  WeylA = 3,    // a_{i,n}        even
  BcDel = 4,    // del_{a,n}      odd,  [del, phi]_+ = delta delta
  Current = 5,  // X_n for X in a T-basis (affine modes when Omega = 0)
  OmegaGen = 6  // alpha_n for alpha in an Omega-basis
};

struct GenId {
  Family fam;
  int idx;
  auto operator<=>(const GenId&) const = default;
};

struct Mode {
  GenId g;
  int n;
  /// Canonical order: ascending mode index, ties by family then index.
  friend bool operator<(const Mode& x, const Mode& y) {
    if (x.n != y.n) return x.n < y.n;
    return x.g < y.g;
  }
  friend bool operator==(const Mode&, const Mode&) = default;
};

/// A word of creator modes in canonical (PBW) order, leftmost = lowest mode.
struct Monomial {
  std::vector<Mode> ms;
  auto operator<=>(const Monomial&) const = default;
};

/// One basis ket: a canonical monomial applied to a ground vector.
struct Term {
  Monomial mono;
  int ground = 0;
  auto operator<=>(const Term&) const = default;
};

/// Sparse rational combination of basis kets.
class State {
 public:
  std::map<Term, Scalar> terms;

  State() = default;
  static State ket(Term t, Scalar c = Scalar(1)) {
    State s;
    if (!c.is_zero()) s.terms.emplace(std::move(t), std::move(c));
    return s;
  }

  bool is_zero() const { return terms.empty(); }
  void add(const Term& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
      terms.emplace(t, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  State& operator+=(const State& o) {
    for (const auto& [t, c] : o.terms) add(t, c);
    return *this;
  }
  State& operator-=(const State& o) {
    for (const auto& [t, c] : o.terms) add(t, -c);
    return *this;
  }
  State& operator*=(const Scalar& k) {
    if (k.is_zero()) {
      terms.clear();
      return *this;
    }
    for (auto& [t, c] : terms) c *= k;
    return *this;
  }
  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(const Scalar& k, State s) { return s *= k; }
  friend bool operator==(const State&, const State&) = default;
};

/// A finite formal sum of mode words with scalar coefficients
/// (the carrier for finitely presented operators).
struct OperatorExpr {
  std::vector<std::pair<std::vector<Mode>, Scalar>> terms;
};

struct UnknownGeneratorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structure data for the Current/Omega sector: either an affine algebra
/// (Omega = 0, brace = level form) or the currents of an A = C vertex
/// algebroid with nontrivial Omega.
struct CurrentSector {
  int t_dim = 0;
  int om_dim = 0;
  // [X_a, X_b] over the T-basis.
  std::vector<std::vector<std::vector<Scalar>>> bracket_t;
  // {X_a, X_b} scalars (the level form on an affine sector).
  std::vector<std::vector<Scalar>> brace;
  // {X_a, X_b}_Omega over the Omega-basis.
  std::vector<std::vector<std::vector<Scalar>>> brace_om;
  // L_{X_a} omega_w over the Omega-basis.
  std::vector<std::vector<std::vector<Scalar>>> lie_der;
  // omega_w(X_a).
  std::vector<std::vector<Scalar>> pairing;

  static CurrentSector affine(const LieAlgebra& g, const BilinearForm& level);
};

/// One mode algebra together with its induced module: the rewriting engine.
///
/// Registered families act on a common ground space (vacuum, or the
/// 2^{d'}-dimensional spinor ground when cliff_half_dim > 0). All relation
/// algebra — normal ordering, Koszul signs, contractions, ground actions —
/// happens in apply_mode.
class ModeEngine {
 public:
  struct Config {
    int weyl_dim = 0;
    int bc_dim = 0;
    int cliff_dim = 0;       // number of e_i generators
    int cliff_half_dim = 0;  // d' > 0 => spinor ground of dimension 2^{d'}
    std::optional<CurrentSector> current;
  };

  explicit ModeEngine(Config cfg);

  const Config& config() const { return cfg_; }
  int ground_count() const { return ground_count_; }
  Rational ground_weight() const { return ground_weight_; }
  int ground_parity(int ground) const;

  bool knows(GenId g) const;
  int parity(GenId g) const;  // 0 even, 1 odd
  bool is_creator(const Mode& m) const;

  /// Normal-form application of a single mode (left multiplication).
  State apply_mode(const Mode& m, const State& s) const;
  /// word[0] applied last: apply_word({x,y}, s) = x (y s).
  State apply_word(const std::vector<Mode>& word, const State& s) const;
  State apply_expr(const OperatorExpr& op, const State& s) const;

  /// Super-bracket [x,y] (anticommutator iff both odd), as a finite sum of
  /// single modes plus a scalar.
  struct BracketTerm {
    std::optional<Mode> mode;
    Scalar c;
  };
  std::vector<BracketTerm> bracket(const Mode& x, const Mode& y) const;

  /// Weight of one ket (ground weight + sum of |n|).
  Rational term_weight(const Term& t) const;
  /// Common weight of all terms, or nullopt for mixed/zero states.
  std::optional<Rational> weight_of(const State& s) const;
  /// Ghost number: #phi - #del factors.
  int ghost_number(const Term& t) const;
  int term_parity(const Term& t) const;

  /// All kets of excitation weight w above the ground, with at most
  /// max_poly_deg weight-zero (b_0) factors; phi_0 factors are always
  /// admitted. Pass max_poly_deg < 0 for "no b_0 cap" (only valid when
  /// weyl_dim == 0).
  std::vector<Term> basis(int w, int max_poly_deg = -1) const;

  /// Canonical serialization, also the DSL surface syntax.
  std::string term_key(const Term& t) const;
  std::string mode_symbol(const Mode& m) const;

  State vacuum(int ground = 0) const { return State::ket(Term{{}, ground}); }

 private:
  void mul_term(const Mode& x, std::vector<Mode> mono, std::size_t at,
                int ground, const Scalar& c, State& out) const;
  void ground_apply(const Mode& m, int ground,
                    std::vector<std::pair<int, Scalar>>& out) const;
  void mul_term_free(const Mode& x, const std::vector<Mode>& mono, int ground,
                     const Scalar& c, State& out) const;

  Config cfg_;
  int ground_count_ = 1;
  Rational ground_weight_ = Rational(0);
};

}  // namespace voaforge
