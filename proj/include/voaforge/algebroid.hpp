#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "voaforge/lie.hpp"
#include "voaforge/poly.hpp"

namespace voaforge {

/// Elements of the three underlying modules. A-elements are polynomials
/// (constants when nvars = 0); T- and Omega-elements are coefficient vectors
/// of polynomials over the chosen module bases.
using AElem = Poly;
using TElem = std::vector<Poly>;
using OmElem = std::vector<Poly>;

struct InvalidFormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Vertex algebroid (A, Omega, T, bullet, brace, brace_Omega) over an
/// extended Lie algebroid, with all structure maps explicit. Polynomial
/// coefficient algebras are truncated at total degree deg_cap (deg_cap < 0
/// means exact, used for A = C).
struct VertexAlgebroid {
  int nvars = 0;
  int deg_cap = -1;
  int t_dim = 0;
  int om_dim = 0;
  /// Extra polynomial degree the structure maps may add beyond the total
  /// degree of their inputs (nonzero after twisting by a degree-raising
  /// Delta); widens the truncation-inconclusiveness bound.
  int deg_growth = 0;

  // extended Lie algebroid structure
  std::function<Poly(const TElem&, const Poly&)> act;        // X f
  std::function<TElem(const TElem&, const TElem&)> bracket;  // [X, Y]
  std::function<OmElem(const TElem&, const OmElem&)> lie_der;  // L_X alpha
  std::function<Poly(const OmElem&, const TElem&)> pairing;  // alpha(X)
  std::function<OmElem(const Poly&)> d;

  // vertex algebroid structure
  std::function<OmElem(const TElem&, const Poly&)> dot;       // X • f
  std::function<Poly(const TElem&, const TElem&)> brace;      // {X, Y}
  std::function<OmElem(const TElem&, const TElem&)> brace_om; // {X, Y}_Omega

  // sample bases the axiom checker quantifies over
  std::vector<Poly> a_basis;
  std::vector<TElem> t_basis;
  std::vector<OmElem> om_basis;

  Poly zero_a() const { return Poly(nvars); }
  TElem zero_t() const { return TElem(t_dim, Poly(nvars)); }
  OmElem zero_om() const { return OmElem(om_dim, Poly(nvars)); }
  Poly unit() const { return Poly::constant(nvars, Scalar(1)); }

  Poly trunc(const Poly& p) const;
  TElem mult_t(const Poly& f, const TElem& X) const;   // f X
  OmElem mult_om(const Poly& f, const OmElem& a) const;  // f alpha

  std::string str_a(const Poly& f) const { return f.str(); }
  std::string str_t(const TElem& X) const;
  std::string str_om(const OmElem& a) const;
};

/// Report of the axiom sweep: first violation (identity number 0 = extended
/// Lie algebroid layer, 1-7 = the vertex algebroid identities) with a
/// witness, plus counts of conclusive and truncation-skipped instances.
struct AxiomReport {
  bool pass = true;
  int identity = 0;
  std::string witness;
  long conclusive = 0;
  long inconclusive = 0;
};

AxiomReport algebroid_axiom_check(const VertexAlgebroid& v);

/// Polynomial vertex algebroid of chiral differential operators on A^d,
/// truncated at total degree D.
VertexAlgebroid cdo_algebroid(int d, int D);

/// (C, 0, g, 0, lambda, 0); throws InvalidFormError unless lambda is
/// symmetric and invariant.
VertexAlgebroid lie_algebroid(const LieAlgebra& g, const BilinearForm& lambda);

/// (C, C^m, g, ...) with zero action/pairing and constant antisymmetric
/// brace_om given by omega[a][b] in Omega-coordinates; g must be abelian
/// (all the cocycle conditions then hold for any antisymmetric omega).
VertexAlgebroid central_extension_algebroid(
    const LieAlgebra& g, const BilinearForm& lambda,
    const std::vector<std::vector<std::vector<Scalar>>>& omega);

/// Twist by (phi = id, Delta): the unique algebroid making (id, Delta) a
/// map of vertex algebroids out of v.
VertexAlgebroid delta_twist(const VertexAlgebroid& v,
                            const std::function<OmElem(const TElem&)>& Delta,
                            int delta_degree_growth = 0);

/// Verify the three map-of-vertex-algebroids identities for (phi = id,
/// Delta) : src -> dst on the sample bases; nullopt on success, else a
/// witness description.
std::optional<std::string> morphism_check(
    const VertexAlgebroid& src, const VertexAlgebroid& dst,
    const std::function<OmElem(const TElem&)>& Delta);

}  // namespace voaforge
