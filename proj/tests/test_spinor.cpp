#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "voaforge/series.hpp"
#include "voaforge/spinor.hpp"

using namespace voaforge;

namespace {

State cliff(const ModeEngine& eng, int i, int n, const State& s) {
  return eng.apply_mode(Mode{GenId{Family::CliffE, i}, n}, s);
}

}  // namespace

TEST_CASE("spinor ground model: e_{i,0}^2 = -1, weights and layer sizes") {
  ModeEngine eng = spinor_engine(1);
  CHECK(eng.ground_count() == 2);
  CHECK(eng.ground_weight() == rat(1, 8));
  for (int g = 0; g < 2; ++g)
    for (int i = 0; i < 2; ++i) {
      State v = eng.vacuum(g);
      CHECK(cliff(eng, i, 0, cliff(eng, i, 0, v)) == Scalar(-1) * v);
    }
  // dim S_1 = 2 * 2 for d' = 1
  CHECK(eng.basis(1).size() == 4);
  // weight of e_{2,-2} e_{1,-1} s = d'/8 + 3
  State v = cliff(eng, 1, -2, cliff(eng, 0, -1, eng.vacuum()));
  REQUIRE(v.terms.size() == 1);
  CHECK(eng.term_weight(v.terms.begin()->first) == rat(1, 8) + 3);
}

TEST_CASE("so action at n = 0 restricts to the spin representation") {
  for (int dp : {1, 2}) {
    ModeEngine eng = spinor_engine(dp);
    LieAlgebra g = so(2 * dp);
    Representation rho = so_standard(g);
    for (int a = 0; a < g.dim(); ++a) {
      OpFamily A = so_level1_action(eng, rho.matrix(a));
      for (int gr = 0; gr < eng.ground_count(); ++gr)
        for (int j = 0; j < 2 * dp; ++j) {
          State v = eng.vacuum(gr);
          State lhs = A(0, cliff(eng, j, 0, v)) - cliff(eng, j, 0, A(0, v));
          State rhs;
          for (int i = 0; i < 2 * dp; ++i)
            rhs += Scalar(rho.matrix(a)[i][j]) * cliff(eng, i, 0, v);
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("level-1 relation for the so_{2d'} action") {
  for (int n : {0, 1, 2}) {
    auto w = so_level1_check(1, n, 2);
    INFO(w.value_or(""));
    CHECK(!w.has_value());
  }
  auto w = so_level1_check(2, 1, 1);
  INFO(w.value_or(""));
  CHECK(!w.has_value());
}

TEST_CASE("Clifford Virasoro: ground weight, mode shifts, relations") {
  ModeEngine eng = spinor_engine(1);
  OpFamily L = clifford_virasoro(eng);
  // L_0 on S_0 = d/16 = d'/8
  for (int g = 0; g < 2; ++g)
    CHECK(L(0, eng.vacuum(g)) == Scalar(rat(1, 8)) * eng.vacuum(g));
  // [L_n, e_{i,m}] = -(n/2 + m) e_{i,n+m}
  for (int n = -1; n <= 1; ++n)
    for (int m = -1; m <= 1; ++m)
      for (int i = 0; i < 2; ++i)
        for (int w = 0; w <= 2; ++w)
          for (const Term& t : eng.basis(w)) {
            State v = State::ket(t);
            State lhs = L(n, cliff(eng, i, m, v)) - cliff(eng, i, m, L(n, v));
            State rhs = Scalar(rat(-n, 2) - Rational(m)) * cliff(eng, i, n + m, v);
            CHECK(lhs == rhs);
          }
  // Virasoro at c = d/2 = d', measured from [L_2, L_{-2}] - 4 L_0
  VirasoroReport rep = virasoro_relations_check(eng, L, Rational(1), 2, 2, -1);
  INFO(rep.witness);
  CHECK(rep.pass);
  CHECK(rep.c_measured == Scalar(1));

  ModeEngine eng2 = spinor_engine(2);
  VirasoroReport rep2 =
      virasoro_relations_check(eng2, clifford_virasoro(eng2), Rational(2), 2, 1, -1);
  INFO(rep2.witness);
  CHECK(rep2.pass);
}

TEST_CASE("the so action is primary for the Clifford Virasoro") {
  ModeEngine eng = spinor_engine(1);
  LieAlgebra g = so(2);
  Representation rho = so_standard(g);
  const Matrix& A = rho.matrix(0);
  for (auto [n, m] : std::vector<std::pair<long, long>>{
           {0, 1}, {0, -1}, {1, -1}, {1, 1}, {-1, 2}, {2, -2}, {0, 0}, {2, 0}})
    CHECK(sugawara_consistency(eng, A, n, m, 2));
}

TEST_CASE("superconformal family: five relations and central charges (2d', 3d')") {
  ModeEngine eng = dirac_engine(1);
  SCFOperators ops = scf_operators(eng);
  SCFReport rep = scf_check(ops, 2, 1, 1);
  INFO(rep.witness);
  CHECK(rep.pass);
  CHECK(rep.c_l == Scalar(2));
  CHECK(rep.c_lbar == Scalar(3));
  CHECK(rep.c_gbar == Scalar(3));
}

TEST_CASE("superconformal family at d' = 2") {
  ModeEngine eng = dirac_engine(2);
  SCFOperators ops = scf_operators(eng);
  SCFReport rep = scf_check(ops, 2, 0, 0);
  INFO(rep.witness);
  CHECK(rep.pass);
  CHECK(rep.c_l == Scalar(4));
  CHECK(rep.c_lbar == Scalar(6));
  CHECK(rep.c_gbar == Scalar(6));
}

TEST_CASE("Gbar_0 on the degree-0 ground layer is the classical Dirac matrix") {
  // with no polynomial coefficients the derivative part vanishes: the
  // constant spinors are annihilated
  ModeEngine eng = dirac_engine(1);
  SCFOperators ops = scf_operators(eng);
  for (int g = 0; g < 2; ++g) CHECK(ops.Gbar(0, eng.vacuum(g)).is_zero());
}

TEST_CASE("Dirac-Ramond operator: square identity and kernel") {
  ModeEngine eng = dirac_engine(1);
  SCFOperators ops = scf_operators(eng);
  DiracReport rep = dirac_kernel(ops, 2, 2);
  INFO(rep.witness);
  CHECK(rep.pass);
  CHECK(rep.square_identity_ok);
  CHECK(rep.kernel_weight_ok);
  CHECK(rep.ground_kernel == 2);  // 2^{d'} constant spinors
  CHECK_THROWS_AS(dirac_kernel(ops, 2, 2, 3), UnboundedBlockSpinorError);
}

TEST_CASE("spinor character matches 2^{d'} prod (1+q^n)^{2d'}") {
  for (int dp : {1, 2}) {
    ModeEngine eng = spinor_engine(dp);
    int wmax = (dp == 1) ? 6 : 5;
    std::vector<long> dims = spinor_character(eng, wmax);
    QSeries oracle = fermionic_tower(wmax + 1, 2 * dp);
    for (int w = 0; w <= wmax; ++w)
      CHECK(dims[w] == (1L << dp) * oracle.c[w]);
  }
}

TEST_CASE("tensor character at polynomial degree 0 matches the product formula") {
  ModeEngine eng = dirac_engine(1);
  std::vector<long> dims = tensor_character(eng, 4, 0);
  QSeries oracle = bosonic_tower(5, 4) * fermionic_tower(5, 2);
  for (int w = 0; w <= 4; ++w) CHECK(dims[w] == 2 * oracle.c[w]);
}
