#include "voaforge/lie.hpp"

#include <json.hpp>

#include <sstream>

namespace voaforge {

namespace {

Matrix zero_matrix(int n) {
  return Matrix(n, std::vector<Rational>(n, Rational(0)));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  int n = (int)a.size(), m = (int)b[0].size(), k = (int)b.size();
  Matrix r(n, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

Rational trace_product(const Matrix& a, const Matrix& b) {
  Rational t(0);
  int n = (int)a.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t += a[i][j] * b[j][i];
  return t;
}

// Compute structure constants from a faithful matrix realization.
std::vector<std::vector<std::vector<Rational>>> structure_from_matrices(
    const std::vector<Matrix>& basis) {
  int dim = (int)basis.size();
  int n = (int)basis[0].size();
  // Solve [t_b, t_c] = sum_a c^a t_a by matching matrix entries; the bases
  // used here (sl2, so_d elementary antisymmetric) have disjoint supports,
  // so a greedy entry match suffices.
  std::vector<std::vector<std::vector<Rational>>> c(
      dim, std::vector<std::vector<Rational>>(
               dim, std::vector<Rational>(dim, Rational(0))));
  for (int b = 0; b < dim; ++b)
    for (int cc = 0; cc < dim; ++cc) {
      Matrix br = mat_sub(mat_mul(basis[b], basis[cc]),
                          mat_mul(basis[cc], basis[b]));
      for (int a = 0; a < dim; ++a) {
        // Find a support entry of basis[a].
        for (int i = 0; i < n; ++i) {
          bool done = false;
          for (int j = 0; j < n; ++j) {
            if (basis[a][i][j] != 0) {
              Rational coeff = br[i][j] / basis[a][i][j];
              c[a][b][cc] = coeff;
              for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                  br[p][q] -= coeff * basis[a][p][q];
              done = true;
              break;
            }
          }
          if (done) break;
        }
      }
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          if (br[p][q] != 0)
            throw std::logic_error("bracket not in span of basis");
    }
  return c;
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, int dim,
                       std::vector<std::vector<std::vector<Rational>>> structure,
                       std::vector<std::string> basis_names,
                       std::optional<Rational> dual_coxeter)
    : name_(std::move(name)),
      dim_(dim),
      c_(std::move(structure)),
      basis_names_(std::move(basis_names)),
      dual_coxeter_(std::move(dual_coxeter)) {
  // Antisymmetry.
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c)
        if (c_[a][b][c] != -c_[a][c][b])
          throw std::invalid_argument("structure constants not antisymmetric");
  // Jacobi: sum_cyc c^a_{be} c^e_{cd} = 0.
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c)
        for (int d = 0; d < dim_; ++d) {
          Rational s(0);
          for (int e = 0; e < dim_; ++e)
            s += c_[a][b][e] * c_[e][c][d] + c_[a][c][e] * c_[e][d][b] +
                 c_[a][d][e] * c_[e][b][c];
          if (s != 0) throw std::invalid_argument("Jacobi identity fails");
        }
}

int LieAlgebra::basis_index(const std::string& label) const {
  for (int i = 0; i < dim_; ++i)
    if (basis_names_[i] == label) return i;
  throw std::out_of_range("unknown basis label: " + label);
}

std::vector<Rational> LieAlgebra::bracket(int b, int c) const {
  std::vector<Rational> r(dim_, Rational(0));
  for (int a = 0; a < dim_; ++a) r[a] = c_[a][b][c];
  return r;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& x,
                                          const std::vector<Rational>& y) const {
  std::vector<Rational> r(dim_, Rational(0));
  for (int b = 0; b < dim_; ++b) {
    if (x[b] == 0) continue;
    for (int c = 0; c < dim_; ++c) {
      if (y[c] == 0) continue;
      for (int a = 0; a < dim_; ++a) r[a] += x[b] * y[c] * c_[a][b][c];
    }
  }
  return r;
}

Matrix LieAlgebra::ad(int x) const {
  Matrix m = zero_matrix(dim_);
  for (int b = 0; b < dim_; ++b)
    for (int a = 0; a < dim_; ++a) m[a][b] = c_[a][x][b];
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c)
        if (c_[a][b][c] != 0) return false;
  return true;
}

Rational BilinearForm::eval(const std::vector<Rational>& x,
                            const std::vector<Rational>& y) const {
  Rational r(0);
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b) r += x[a] * m[a][b] * y[b];
  return r;
}

bool BilinearForm::is_zero() const {
  for (auto& row : m)
    for (auto& v : row)
      if (v != 0) return false;
  return true;
}

BilinearForm operator*(const Rational& k, const BilinearForm& f) {
  BilinearForm r = f;
  for (auto& row : r.m)
    for (auto& v : row) v *= k;
  return r;
}

Representation::Representation(const LieAlgebra& g, std::vector<Matrix> matrices)
    : matrices_(std::move(matrices)) {
  if ((int)matrices_.size() != g.dim())
    throw std::invalid_argument("representation: wrong number of matrices");
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b) {
      Matrix lhs = mat_sub(mat_mul(matrices_[a], matrices_[b]),
                           mat_mul(matrices_[b], matrices_[a]));
      Matrix rhs = zero_matrix((int)matrices_[0].size());
      for (int c = 0; c < g.dim(); ++c) {
        const Rational& coeff = g.c(c, a, b);
        if (coeff == 0) continue;
        for (std::size_t i = 0; i < rhs.size(); ++i)
          for (std::size_t j = 0; j < rhs.size(); ++j)
            rhs[i][j] += coeff * matrices_[c][i][j];
      }
      if (lhs != rhs)
        throw std::invalid_argument("matrices do not represent the bracket");
    }
}

BilinearForm killing_form(const LieAlgebra& g) {
  BilinearForm f{zero_matrix(g.dim())};
  std::vector<Matrix> ads;
  for (int a = 0; a < g.dim(); ++a) ads.push_back(g.ad(a));
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b) f.m[a][b] = trace_product(ads[a], ads[b]);
  return f;
}

BilinearForm trace_form(const LieAlgebra& g, const Representation& rho) {
  BilinearForm f{zero_matrix(g.dim())};
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b)
      f.m[a][b] = trace_product(rho.matrix(a), rho.matrix(b));
  return f;
}

BilinearForm normalized_killing(const LieAlgebra& g) {
  auto h = g.dual_coxeter();
  if (!h)
    throw NotSimpleError("no dual Coxeter number registered for " + g.name());
  return Rational(1) / (Rational(2) * *h) * killing_form(g);
}

std::optional<InvarianceWitness> invariance_violation(const LieAlgebra& g,
                                                      const BilinearForm& f) {
  for (int x = 0; x < g.dim(); ++x)
    for (int y = 0; y < g.dim(); ++y)
      for (int z = 0; z < g.dim(); ++z) {
        Rational s(0);
        for (int a = 0; a < g.dim(); ++a)
          s += g.c(a, x, y) * f(a, z) + g.c(a, x, z) * f(y, a);
        if (s != 0) return InvarianceWitness{x, y, z};
      }
  return std::nullopt;
}

bool invariance_check(const LieAlgebra& g, const BilinearForm& f) {
  return !invariance_violation(g, f).has_value();
}

bool is_symmetric(const BilinearForm& f) {
  for (std::size_t a = 0; a < f.m.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (f.m[a][b] != f.m[b][a]) return false;
  return true;
}

LieAlgebra abelian(int n) {
  std::vector<std::vector<std::vector<Rational>>> c(
      n, std::vector<std::vector<Rational>>(n,
                                            std::vector<Rational>(n, Rational(0))));
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return LieAlgebra("abelian" + std::to_string(n), n, std::move(c),
                    std::move(names));
}

LieAlgebra sl2() {
  Matrix e = {{Rational(0), Rational(1)}, {Rational(0), Rational(0)}};
  Matrix h = {{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}};
  Matrix f = {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}};
  auto c = structure_from_matrices({e, h, f});
  return LieAlgebra("sl2", 3, std::move(c), {"e", "h", "f"}, Rational(2));
}

namespace {

std::vector<Matrix> so_basis(int d) {
  std::vector<Matrix> basis;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Matrix m = zero_matrix(d);
      m[i][j] = 1;
      m[j][i] = -1;
      basis.push_back(std::move(m));
    }
  return basis;
}

std::optional<Rational> so_dual_coxeter(int d) {
  // so3 and so4 in the lambda_0 = (1/2)TrAB normalization; so4 per simple
  // factor. so2 is abelian.
  if (d == 3) return Rational(1);
  if (d == 4) return Rational(2);
  if (d >= 5) return Rational(d - 2);
  return std::nullopt;
}

}  // namespace

LieAlgebra so(int d) {
  auto basis = so_basis(d);
  auto c = structure_from_matrices(basis);
  std::vector<std::string> names;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      names.push_back("E" + std::to_string(i) + std::to_string(j));
  return LieAlgebra("so" + std::to_string(d), (int)basis.size(), std::move(c),
                    std::move(names), so_dual_coxeter(d));
}

Representation so_standard(const LieAlgebra& g) {
  int d = 0;
  while (d * (d - 1) / 2 < g.dim()) ++d;
  if (d * (d - 1) / 2 != g.dim())
    throw std::invalid_argument("not an so_d algebra");
  return Representation(g, so_basis(d));
}

BilinearForm so_lambda0(const LieAlgebra& g) {
  return Rational(1, 2) * trace_form(g, so_standard(g));
}

LieAlgebra registry_lookup(const std::string& name) {
  if (name.rfind("abelian", 0) == 0)
    return abelian(std::stoi(name.substr(7)));
  if (name == "sl2") return sl2();
  if (name.rfind("so", 0) == 0) return so(std::stoi(name.substr(2)));
  throw std::out_of_range("unknown algebra: " + name);
}

LieAlgebra lie_from_json(const std::string& json_text, const std::string& name) {
  auto j = nlohmann::json::parse(json_text);
  int dim = j.at("dim").get<int>();
  std::vector<std::vector<std::vector<Rational>>> c(
      dim, std::vector<std::vector<Rational>>(
               dim, std::vector<Rational>(dim, Rational(0))));
  for (const auto& entry : j.at("brackets")) {
    int b = entry.at(0).get<int>();
    int cc = entry.at(1).get<int>();
    for (const auto& term : entry.at(2)) {
      int a = term.at(0).get<int>();
      Rational coeff = parse_rational(term.at(1).get<std::string>());
      c[a][b][cc] = coeff;
      c[a][cc][b] = -coeff;
    }
  }
  std::vector<std::string> names;
  for (int i = 1; i <= dim; ++i) names.push_back("t" + std::to_string(i));
  return LieAlgebra(name, dim, std::move(c), std::move(names));
}

}  // namespace voaforge
