#pragma once

#include "voaforge/algebroid.hpp"
#include "voaforge/field.hpp"
#include "voaforge/mode.hpp"

namespace voaforge {

struct SplittingInvalidError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TruncationInconclusiveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The vertex algebra freely generated by a vertex algebroid, exposed
/// through a mode engine: a Weyl engine on A^d for polynomial algebroids,
/// a current engine for A = C ones.
class FreeVOA {
 public:
  FreeVOA(VertexAlgebroid v, int wmax);

  const VertexAlgebroid& algebroid() const { return v_; }
  const ModeEngine& engine() const { return *eng_; }
  int wmax() const { return wmax_; }
  bool weyl_backend() const { return v_.nvars > 0; }

  // Fields attached to elements of A, Omega, T (the T-field is the
  // canonical splitting).
  Field field_a(const Poly& f) const;
  Field field_om(const OmElem& a) const;
  Field field_t(const TElem& X) const;
  State state_a(const Poly& f) const;
  State state_om(const OmElem& a) const;
  State state_t(const TElem& X) const;

  /// Inverse maps on low weights; throw std::invalid_argument when the
  /// state is not of the expected shape.
  Poly poly_of(const State& s) const;
  void split_weight_one(const State& s, TElem& t_part, OmElem& om_part) const;

  /// PBW layer of weight w (for polynomial A, restricted to total
  /// b-degree <= deg_cap across all b-modes).
  std::vector<Term> layer(int w) const;
  std::size_t dim(int w) const { return layer(w).size(); }

 private:
  VertexAlgebroid v_;
  std::unique_ptr<ModeEngine> eng_;
  int wmax_;
};

using Splitting = std::function<Field(const TElem&)>;

Splitting canonical_splitting(const FreeVOA& V);
/// s'(X) = s(X) + Delta(X) for a C-linear Delta : T -> Omega.
Splitting shifted_splitting(const FreeVOA& V,
                            const std::function<OmElem(const TElem&)>& Delta);

/// Recover the vertex algebroid structure maps from mode operations of the
/// weight <= 1 layers through a splitting; throws SplittingInvalidError when
/// s composed with the quotient V_1 -> T is not the identity on the T-basis.
VertexAlgebroid extract_algebroid(const FreeVOA& V, const Splitting& s);

struct OneFormReport {
  bool pass = true;
  bool zero_mode_on_t_ok = true;     // alpha_0 s(X) = -i_X d(alpha)
  bool closed = false;               // d(alpha) = 0
  bool annihilation_matches = true;  // alpha_0 kills samples iff closed
  std::string witness;
};

/// Lemma on one-form zero modes: alpha_0 X = -i_X d(alpha), and alpha_0
/// annihilates states iff alpha is closed. Throws
/// TruncationInconclusiveError when the polynomial degrees exceed the cap.
OneFormReport one_form_zero_mode_check(const FreeVOA& V, const OmElem& alpha,
                                       const TElem& X);

}  // namespace voaforge
