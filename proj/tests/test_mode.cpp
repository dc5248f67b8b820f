#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "voaforge/mode.hpp"

using namespace voaforge;

static Mode a(int i, int n) { return {{Family::WeylA, i}, n}; }
static Mode b(int i, int n) { return {{Family::WeylB, i}, n}; }
static Mode phi(int i, int n) { return {{Family::BcPhi, i}, n}; }
static Mode del(int i, int n) { return {{Family::BcDel, i}, n}; }
static Mode cl(int i, int n) { return {{Family::CliffE, i}, n}; }
static Mode cur(int i, int n) { return {{Family::Current, i}, n}; }

TEST_CASE("weyl contractions") {
  ModeEngine eng({.weyl_dim = 2});
  auto vac = eng.vacuum();
  // a_{1,1} b^1_{-1} |0> = |0>
  CHECK(eng.apply_word({a(0, 1), b(0, -1)}, vac) == vac);
  // a_{1,1} b^2_{-1} |0> = 0
  CHECK(eng.apply_word({a(0, 1), b(1, -1)}, vac).is_zero());
  // a_{1,1} (b^1_{-1})^2 |0> = 2 b^1_{-1} |0>
  auto got = eng.apply_word({a(0, 1), b(0, -1), b(0, -1)}, vac);
  auto want = Scalar(2) * eng.apply_mode(b(0, -1), vac);
  CHECK(got == want);
  // Annihilators kill the vacuum; b_0 does not.
  CHECK(eng.apply_mode(a(0, 0), vac).is_zero());
  CHECK(eng.apply_mode(b(0, 1), vac).is_zero());
  CHECK(!eng.apply_mode(b(0, 0), vac).is_zero());
  // a_{1,0} b^1_0 |0> = |0> (zero-mode pairing).
  CHECK(eng.apply_word({a(0, 0), b(0, 0)}, vac) == vac);
  CHECK_THROWS_AS(eng.apply_mode(cl(0, -1), vac), UnknownGeneratorError);
}

TEST_CASE("bc contractions and signs") {
  ModeEngine eng({.bc_dim = 2});
  auto vac = eng.vacuum();
  CHECK(eng.apply_word({del(0, 1), phi(0, -1)}, vac) == vac);
  CHECK(eng.apply_word({del(0, 0), phi(0, 0)}, vac) == vac);
  // Odd square is zero.
  CHECK(eng.apply_word({phi(0, -1), phi(0, -1)}, vac).is_zero());
  // Reordering two distinct odd creators flips the sign.
  auto s1 = eng.apply_word({phi(0, -1), phi(1, -1)}, vac);
  auto s2 = eng.apply_word({phi(1, -1), phi(0, -1)}, vac);
  CHECK(s1 == Scalar(-1) * s2);
  CHECK(!s1.is_zero());
  // del_{1,1} phi^1_{-1} phi^2_{-1} |0> = phi^2_{-1}|0>;
  // del_{2,1} phi^1_{-1} phi^2_{-1} |0> = -phi^1_{-1}|0>.
  auto w = eng.apply_word({phi(0, -1), phi(1, -1)}, vac);
  CHECK(eng.apply_mode(del(0, 1), w) == eng.apply_mode(phi(1, -1), vac));
  CHECK(eng.apply_mode(del(1, 1), w) ==
        Scalar(-1) * eng.apply_mode(phi(0, -1), vac));
}

TEST_CASE("clifford algebra on the spinor ground") {
  ModeEngine eng({.cliff_dim = 4, .cliff_half_dim = 2});
  CHECK(eng.ground_count() == 4);
  CHECK(eng.ground_weight() == rat(2, 8));
  for (int g = 0; g < 4; ++g) {
    auto s = eng.vacuum(g);
    for (int i = 0; i < 4; ++i) {
      // e_{i,0}^2 = -1 (half the anticommutator).
      CHECK(eng.apply_word({cl(i, 0), cl(i, 0)}, s) == Scalar(-1) * s);
      // e_{i,1} e_{i,-1} s = -2 s.
      CHECK(eng.apply_word({cl(i, 1), cl(i, -1)}, s) == Scalar(-2) * s);
      // e_{i,1} e_{j,-1} s = 0 for i != j.
      CHECK(eng.apply_word({cl(i, 1), cl((i + 1) % 4, -1)}, s).is_zero());
      for (int j = 0; j < i; ++j) {
        // Distinct zero modes anticommute.
        auto lhs = eng.apply_word({cl(i, 0), cl(j, 0)}, s);
        auto rhs = eng.apply_word({cl(j, 0), cl(i, 0)}, s);
        CHECK(lhs == Scalar(-1) * rhs);
        CHECK(!lhs.is_zero());
      }
    }
  }
}

TEST_CASE("affine sl2 level k") {
  auto g = sl2();
  const Rational k = rat(5, 3);
  BilinearForm level = k * normalized_killing(g);
  ModeEngine eng({.current = CurrentSector::affine(g, level)});
  auto vac = eng.vacuum();
  const int e = g.basis_index("e"), h = g.basis_index("h"), f = g.basis_index("f");
  // e_1 f_{-1}|0> = h_0|0> + k lambda0(e,f)|0> = k|0>.
  CHECK(eng.apply_word({cur(e, 1), cur(f, -1)}, vac) == Scalar(k) * vac);
  // h_1 h_{-1}|0> = 2k|0>.
  CHECK(eng.apply_word({cur(h, 1), cur(h, -1)}, vac) ==
        Scalar(Rational(2) * k) * vac);
  // h_0 e_{-1}|0> = 2 e_{-1}|0>.
  CHECK(eng.apply_word({cur(h, 0), cur(f, -1)}, vac) ==
        Scalar(-2) * eng.apply_mode(cur(f, -1), vac));
  // e_2 f_{-2}|0> = 2k|0>.
  CHECK(eng.apply_word({cur(e, 2), cur(f, -2)}, vac) ==
        Scalar(Rational(2) * k) * vac);
  // e_1 h_{-1} f_{-1}... a longer rewrite with a cascade:
  // f_1 e_{-1} e_{-1}|0> = -2 h_{-1} e_{-1} ... check against brackets done
  // stepwise by hand: f_1 e_{-1}|0> = -h_0|0> + k lambda0(f,e)|0> = k|0>.
  auto fe = eng.apply_word({cur(f, 1), cur(e, -1)}, vac);
  CHECK(fe == Scalar(k) * vac);
}

TEST_CASE("weights, parities, ghost numbers") {
  ModeEngine eng({.weyl_dim = 1, .bc_dim = 1});
  auto vac = eng.vacuum();
  auto s = eng.apply_word({b(0, -2), phi(0, -1), del(0, -1)}, vac);
  REQUIRE(s.terms.size() == 1);
  const Term& t = s.terms.begin()->first;
  CHECK(eng.term_weight(t) == rat(4));
  CHECK(eng.term_parity(t) == 0);
  CHECK(eng.ghost_number(t) == 0);
  auto s2 = eng.apply_mode(phi(0, 0), vac);
  CHECK(eng.ghost_number(s2.terms.begin()->first) == 1);
  CHECK(eng.term_parity(s2.terms.begin()->first) == 1);
  CHECK(eng.weight_of(s2) == rat(0));
  CHECK(!eng.weight_of(s + s2).has_value());
}

TEST_CASE("basis enumeration matches hand counts") {
  ModeEngine weyl({.weyl_dim = 1});
  // Weight 0, poly degree <= 2: 1, b_0, b_0^2.
  CHECK(weyl.basis(0, 2).size() == 3);
  // Weight 1, poly degree <= 1: {a_{-1}, b_{-1}} x {1, b_0}.
  CHECK(weyl.basis(1, 1).size() == 4);
  CHECK_THROWS(weyl.basis(1, -1));

  ModeEngine bc({.bc_dim = 1});
  // Weight 0: 1, phi_0. Weight 1: {phi_{-1}, del_{-1}} x {1, phi_0}.
  CHECK(bc.basis(0).size() == 2);
  CHECK(bc.basis(1).size() == 4);
  // Weight 2: phi_{-2}, del_{-2}, phi_{-1}del_{-1}, times {1, phi_0},
  // minus phi_0 phi_{-2}... (all distinct): 6.
  CHECK(bc.basis(2).size() == 6);

  ModeEngine cle({.cliff_dim = 2, .cliff_half_dim = 1});
  // Weight 0: two grounds. Weight 1: e_{1,-1}, e_{2,-1} on each ground.
  CHECK(cle.basis(0).size() == 2);
  CHECK(cle.basis(1).size() == 4);
  // Weight 2: e_{i,-2} (2) + e_{1,-1}e_{2,-1} (1), on each ground.
  CHECK(cle.basis(2).size() == 6);

  // Every enumerated term must be in normal form already (idempotent under
  // reapplication) and have the right weight.
  for (int w = 0; w <= 3; ++w)
    for (const auto& t : bc.basis(w)) {
      CHECK(bc.term_weight(t) == rat(w));
      auto replay = bc.apply_word(t.mono.ms, bc.vacuum(t.ground));
      CHECK(replay == State::ket(t));
    }
}

TEST_CASE("commutation relations hold on random states") {
  // Property: for modes x, y and basis kets v,
  // x(y v) - (-1)^{|x||y|} y(x v) = [x,y] v with [x,y] from the table.
  auto g = sl2();
  BilinearForm level = rat(2) * normalized_killing(g);
  ModeEngine eng({.weyl_dim = 1,
                  .bc_dim = 1,
                  .current = CurrentSector::affine(g, level)});
  std::vector<Mode> pool;
  for (int n = -2; n <= 2; ++n) {
    pool.push_back(a(0, n));
    pool.push_back(b(0, n));
    pool.push_back(phi(0, n));
    pool.push_back(del(0, n));
    for (int t = 0; t < 3; ++t) pool.push_back(cur(t, n));
  }
  std::mt19937 rng(7351);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  auto kets = eng.basis(2, 2);
  std::uniform_int_distribution<std::size_t> pkets(0, kets.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    Mode x = pool[pick(rng)], y = pool[pick(rng)];
    State v = State::ket(kets[pkets(rng)]);
    State lhs = eng.apply_mode(x, eng.apply_mode(y, v));
    Scalar sgn = (eng.parity(x.g) && eng.parity(y.g)) ? Scalar(-1) : Scalar(1);
    lhs -= sgn * eng.apply_mode(y, eng.apply_mode(x, v));
    State rhs;
    for (const auto& bt : eng.bracket(x, y)) {
      State term = bt.mode ? eng.apply_mode(*bt.mode, v) : v;
      term *= bt.c;
      rhs += term;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("serialization round-trips on sight") {
  ModeEngine eng({.weyl_dim = 1, .bc_dim = 1});
  auto s = eng.apply_word({b(0, -2), del(0, -1)}, eng.vacuum());
  REQUIRE(s.terms.size() == 1);
  CHECK(eng.term_key(s.terms.begin()->first) == "b[1,-2] del[1,-1] |0>");
  ModeEngine spin({.cliff_dim = 2, .cliff_half_dim = 1});
  auto t = spin.apply_mode(cl(0, -1), spin.vacuum(1));
  REQUIRE(t.terms.size() == 1);
  CHECK(spin.term_key(t.terms.begin()->first) == "e[1,-1] |s:1>");
}
