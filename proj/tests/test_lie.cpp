#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "voaforge/lie.hpp"
#include "voaforge/linalg.hpp"

using namespace voaforge;

static SparseMatrix matrix_of(const Matrix& m) {
  SparseMatrix s;
  for (std::size_t j = 0; j < m[0].size(); ++j)
    s.register_column("c" + std::to_string(j));
  for (const auto& row : m) {
    SparseVector v;
    for (std::size_t j = 0; j < row.size(); ++j)
      v.add("c" + std::to_string(j), Scalar(row[j]));
    s.add_row(std::move(v));
  }
  return s;
}

TEST_CASE("sl2 structure") {
  auto g = sl2();
  REQUIRE(g.dim() == 3);
  const int e = g.basis_index("e"), h = g.basis_index("h"), f = g.basis_index("f");
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h
  CHECK(g.c(e, h, e) == rat(2));
  CHECK(g.c(f, h, f) == rat(-2));
  CHECK(g.c(h, e, f) == rat(1));
  CHECK(!g.is_abelian());

  // Independent linear-algebra oracle: ad_h has rank 2 and kernel spanned by h.
  auto adh = matrix_of(g.ad(h));
  CHECK(adh.rank() == 2);
  auto ker = adh.kernel_basis();
  REQUIRE(ker.size() == 1);
  CHECK(ker[0].get("c" + std::to_string(e)).is_zero());
  CHECK(ker[0].get("c" + std::to_string(f)).is_zero());
  CHECK(!ker[0].get("c" + std::to_string(h)).is_zero());
}

TEST_CASE("killing form of sl2") {
  auto g = sl2();
  auto k = killing_form(g);
  const int e = g.basis_index("e"), h = g.basis_index("h"), f = g.basis_index("f");
  CHECK(k(h, h) == rat(8));
  CHECK(k(e, f) == rat(4));
  CHECK(k(e, e) == rat(0));
  CHECK(k(e, h) == rat(0));
  CHECK(is_symmetric(k));
  CHECK(invariance_check(g, k));

  // lambda_0 = killing / 2 h_vee with h_vee = 2.
  auto l0 = normalized_killing(g);
  CHECK(l0(h, h) == rat(2));
  CHECK(l0(e, f) == rat(1));
}

TEST_CASE("invariance violation yields a witness") {
  auto g = sl2();
  BilinearForm bad{Matrix{{rat(1), rat(0), rat(0)},
                          {rat(0), rat(0), rat(0)},
                          {rat(0), rat(0), rat(0)}}};
  auto w = invariance_violation(g, bad);
  REQUIRE(w.has_value());
  // Replay the witness directly.
  auto xy = g.bracket(w->x, w->y);
  std::vector<Rational> ey(g.dim(), rat(0)), ez(g.dim(), rat(0));
  ey[w->y] = rat(1);
  ez[w->z] = rat(1);
  auto xz = g.bracket(w->x, w->z);
  CHECK(bad.eval(xy, ez) + bad.eval(ey, xz) != rat(0));
}

TEST_CASE("so(d) family") {
  for (int d = 3; d <= 6; ++d) {
    auto g = so(d);
    CHECK(g.dim() == d * (d - 1) / 2);
    auto rho = so_standard(g);
    CHECK(rho.dim_v() == d);
    auto l0 = so_lambda0(g);
    CHECK(is_symmetric(l0));
    CHECK(invariance_check(g, l0));
    // Trace form of the standard rep is 2 lambda_0.
    CHECK(trace_form(g, rho) == rat(2) * l0);
    // Killing = 2 h_vee lambda_0; for so_d this is (2d - 4) lambda_0.
    CHECK(killing_form(g) == rat(2 * d - 4) * l0);
    if (d != 4) CHECK(normalized_killing(g) == l0);
  }
  CHECK(so(3).dual_coxeter() == rat(1));
  CHECK(so(5).dual_coxeter() == rat(3));
  CHECK(so(6).dual_coxeter() == rat(4));
}

TEST_CASE("abelian and registry") {
  auto a = abelian(2);
  CHECK(a.is_abelian());
  CHECK(a.dim() == 2);
  CHECK(registry_lookup("sl2").dim() == 3);
  CHECK(registry_lookup("abelian1").dim() == 1);
  CHECK(registry_lookup("so4").dim() == 6);
  CHECK_THROWS(registry_lookup("e8"));
}

TEST_CASE("custom algebra from json") {
  // sl2 again, via the external schema.
  std::string text = R"({
    "dim": 3,
    "basis": ["e", "h", "f"],
    "brackets": [
      [1, 0, [[0, "2"]]],
      [1, 2, [[2, "-2"]]],
      [0, 2, [[1, "1"]]]
    ]
  })";
  auto g = lie_from_json(text, "custom");
  CHECK(g.dim() == 3);
  CHECK(g.c(0, 1, 0) == rat(2));
  CHECK(g.c(1, 0, 2) == rat(1));
  CHECK(g.c(1, 2, 0) == rat(-1));
  CHECK(killing_form(g)(1, 1) == rat(8));

  // Jacobi failure must be rejected at construction.
  std::string badtext = R"({
    "dim": 2,
    "brackets": [[0, 1, [[0, "1"], [1, "1"]]]]
  })";
  CHECK_NOTHROW(lie_from_json(badtext, "solvable"));
  std::string nonjacobi = R"({
    "dim": 3,
    "brackets": [
      [0, 1, [[2, "1"]]],
      [1, 2, [[0, "1"]]],
      [2, 0, [[1, "1"], [0, "1"]]]
    ]
  })";
  CHECK_THROWS(lie_from_json(nonjacobi, "broken"));
}
