#pragma once

#include <optional>
#include <string>
#include <vector>

#include "voaforge/scalar.hpp"

namespace voaforge {

using Matrix = std::vector<std::vector<Rational>>;

/// Finite-dimensional Lie algebra given by structure constants
/// [t_b, t_c] = sum_a c^a_{bc} t_a. Antisymmetry and the Jacobi identity are
/// verified exactly at construction.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, int dim,
             std::vector<std::vector<std::vector<Rational>>> structure,
             std::vector<std::string> basis_names,
             std::optional<Rational> dual_coxeter = std::nullopt);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  int basis_index(const std::string& label) const;

  /// c^a_{bc}
  const Rational& c(int a, int b, int c) const { return c_[a][b][c]; }
  /// [t_b, t_c] as a coefficient vector over the basis.
  std::vector<Rational> bracket(int b, int c) const;
  std::vector<Rational> bracket(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;

  /// ad_x as a dim x dim matrix.
  Matrix ad(int x) const;

  std::optional<Rational> dual_coxeter() const { return dual_coxeter_; }
  bool is_abelian() const;

 private:
  std::string name_;
  int dim_;
  std::vector<std::vector<std::vector<Rational>>> c_;  // c_[a][b][c]
  std::vector<std::string> basis_names_;
  std::optional<Rational> dual_coxeter_;
};

/// Symmetric bilinear form on a Lie algebra, stored as its Gram matrix.
struct BilinearForm {
  Matrix m;

  Rational operator()(int a, int b) const { return m[a][b]; }
  Rational eval(const std::vector<Rational>& x,
                const std::vector<Rational>& y) const;
  bool is_zero() const;
  friend BilinearForm operator*(const Rational& k, const BilinearForm& f);
  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;
};

/// Representation rho: g -> gl(V) by explicit matrices; the bracket
/// compatibility rho([x,y]) = [rho x, rho y] is checked at construction.
class Representation {
 public:
  Representation(const LieAlgebra& g, std::vector<Matrix> matrices);
  int dim_v() const { return matrices_.empty() ? 0 : (int)matrices_[0].size(); }
  const Matrix& matrix(int a) const { return matrices_[a]; }

 private:
  std::vector<Matrix> matrices_;
};

/// Witness for a failed invariance check: basis triple (x, y, z).
struct InvarianceWitness {
  int x, y, z;
};

BilinearForm killing_form(const LieAlgebra& g);
BilinearForm trace_form(const LieAlgebra& g, const Representation& rho);

/// lambda_0 = killing / (2 h_vee). Throws NotSimpleError when no dual
/// Coxeter number is registered for the algebra.
BilinearForm normalized_killing(const LieAlgebra& g);

struct NotSimpleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// true iff lambda([x,y],z) + lambda(y,[x,z]) = 0 on all basis triples.
std::optional<InvarianceWitness> invariance_violation(const LieAlgebra& g,
                                                      const BilinearForm& f);
bool invariance_check(const LieAlgebra& g, const BilinearForm& f);

bool is_symmetric(const BilinearForm& f);

// --- Built-in registry -----------------------------------------------------

LieAlgebra abelian(int n);
LieAlgebra sl2();  // basis {e, h, f}
/// so_d with basis E_{ij} - E_{ji}, i < j (row-major over pairs).
LieAlgebra so(int d);
/// Standard d-dimensional representation of so(d).
Representation so_standard(const LieAlgebra& g);
/// lambda_0(A,B) = (1/2) Tr AB on so_d (matches normalized_killing where
/// the latter is defined).
BilinearForm so_lambda0(const LieAlgebra& g);

/// Look up by name: "abelian1", "sl2", "so3".."so6".
LieAlgebra registry_lookup(const std::string& name);

/// Parse the custom-algebra JSON schema
/// { "dim": n, "brackets": [[b, c, [[a, "p/q"], ...]], ...] }.
LieAlgebra lie_from_json(const std::string& json_text, const std::string& name);

}  // namespace voaforge
