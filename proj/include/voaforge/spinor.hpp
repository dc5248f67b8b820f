#pragma once

#include <optional>
#include <string>
#include <vector>

#include "voaforge/field.hpp"
#include "voaforge/lie.hpp"
#include "voaforge/mode.hpp"

namespace voaforge {

/// Ramond Clifford engine: e_1..e_{2d'} with the 2^{d'}-dimensional spinor
/// ground, ground weight d'/8.
ModeEngine spinor_engine(int dprime);
/// D^ch(A^{2d'}) (x) S: 2d' Weyl pairs sharing the spinor ground.
ModeEngine dirac_engine(int dprime);

/// A^{Cl}_n = 1/4 A_{ji} sum_r e_{i,n-r} e_{j,r} for an antisymmetric
/// matrix A (a lazy applier; the sum telescopes to a finite window on each
/// state).
OpFamily so_level1_action(const ModeEngine& eng, const Matrix& A);

/// L^{Cl}_n: the two-sum normal-ordered quadratic with the d/16 shift at
/// n = 0; central charge d/2 = d'.
OpFamily clifford_virasoro(const ModeEngine& eng);

/// Check the level-1 relation [A^{Cl}_n, B^{Cl}_{-n}] = [A,B]^{Cl}_0 +
/// n lambda_0(A,B) on all states of weight excess <= wmax, over all basis
/// pairs of so_{2d'}; nullopt on success.
std::optional<std::string> so_level1_check(int dprime, int n, int wmax);

/// [L^{Cl}_n, A^{Cl}_m] = -m A^{Cl}_{n+m} on states of weight excess
/// <= wmax (the affine action is primary for the Clifford Virasoro).
bool sugawara_consistency(const ModeEngine& eng, const Matrix& A, long n,
                          long m, int wmax);

struct SCFOperators {
  int dprime = 0;
  const ModeEngine* eng = nullptr;
  OpFamily L;     // 1/4 ((d_i + db^i)_{-1}(d_i + db^i))_n (x) 1
  OpFamily Lbar;  // -1/4 ((d_i - db^i)_{-1}(d_i - db^i))_n (x) 1 + L^{Cl}_n
  OpFamily Gbar;  // 1/2 (d_i - db^i)_{n-r} (x) e_{i,r}
};

/// The (0,1) superconformal family on the dirac_engine.
SCFOperators scf_operators(const ModeEngine& eng);

struct SCFReport {
  bool pass = true;
  Scalar c_l;     // measured from [L_2, L_{-2}] - 4 L_0 on the ground
  Scalar c_lbar;  // likewise for Lbar
  Scalar c_gbar;  // from [Gbar_1, Gbar_{-1}]_+ - 2 Lbar_0 = (c/12) * 3
  std::string witness;
};

/// Verify the five displayed (anti)commutators for |n|,|m| <= N on basis
/// states of weight excess <= wmax, polynomial degree <= polydeg, and
/// measure the central charges (expected 2d' for L and 3d' for Lbar, Gbar).
SCFReport scf_check(const SCFOperators& ops, int N, int wmax, int polydeg);

struct DiracBlock {
  int weight_excess = 0;  // weight = d'/8 + excess
  std::size_t dim = 0;
  std::size_t dim_ker = 0;
};

struct DiracReport {
  bool pass = true;
  bool square_identity_ok = true;   // Dslash^2 = 4 (Lbar_0 - d'/8) blockwise
  bool kernel_weight_ok = true;     // Lbar_0 = d'/8 on ker Dslash
  std::size_t ground_kernel = 0;    // dim ker at lowest weight, poly degree 0
  int poly_degree = 0;
  std::vector<DiracBlock> blocks;
  std::string witness;
};

/// Exact blockwise analysis of the Dirac-Ramond operator Dslash = 2 Gbar_0
/// under the stated polynomial-degree truncation.
DiracReport dirac_kernel(const SCFOperators& ops, int wmax, int poly_degree,
                         std::size_t budget = 5000);
struct UnboundedBlockSpinorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Graded dimensions dim S_{d'/8 + w} for w = 0..wmax by direct monomial
/// enumeration (to be compared with 2^{d'} prod (1+q^n)^{2d'}).
std::vector<long> spinor_character(const ModeEngine& eng, int wmax);
/// Graded dimensions of the dirac_engine at a fixed polynomial degree cap.
std::vector<long> tensor_character(const ModeEngine& eng, int wmax,
                                   int poly_degree);

}  // namespace voaforge
