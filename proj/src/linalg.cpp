#include "voaforge/linalg.hpp"

#include <algorithm>
#include <set>

namespace voaforge {

namespace {

// Gaussian integer used inside the fraction-free elimination.
struct GInt {
  mpz_class re, im;
  bool is_zero() const { return re == 0 && im == 0; }
};

GInt mul(const GInt& a, const GInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GInt sub(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }

// Exact division in Z[i]; Bareiss guarantees divisibility.
GInt exact_div(const GInt& a, const GInt& d) {
  mpz_class n = d.re * d.re + d.im * d.im;
  mpz_class re = a.re * d.re + a.im * d.im;
  mpz_class im = a.im * d.re - a.re * d.im;
  return {re / n, im / n};
}

using IRow = std::map<int, GInt>;

struct Echelon {
  std::vector<IRow> rows;       // echelon rows, one per pivot
  std::vector<int> pivot_cols;  // strictly increasing
};

// Fraction-free forward elimination. Input rows are consumed.
Echelon eliminate(std::vector<IRow> rows, int ncols) {
  Echelon ech;
  GInt prev{1, 0};
  std::size_t next = 0;
  for (int col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r) {
      auto it = rows[r].find(col);
      if (it != rows[r].end() && !it->second.is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    const GInt p = rows[next][col];
    for (std::size_t r = next + 1; r < rows.size(); ++r) {
      auto it = rows[r].find(col);
      if (it == rows[r].end() || it->second.is_zero()) {
        // Still rescale so the Bareiss denominators stay coherent.
        IRow out;
        for (auto& [c, v] : rows[r]) {
          if (c < col) continue;
          GInt nv = exact_div(mul(p, v), prev);
          if (!nv.is_zero()) out.emplace(c, nv);
        }
        rows[r] = std::move(out);
        continue;
      }
      const GInt f = it->second;
      IRow out;
      auto ia = rows[r].upper_bound(col);
      auto ib = rows[next].upper_bound(col);
      const auto ea = rows[r].end(), eb = rows[next].end();
      while (ia != ea || ib != eb) {
        int c;
        GInt av{0, 0}, bv{0, 0};
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
          c = ia->first;
          av = ia->second;
          ++ia;
        } else if (ia == ea || ib->first < ia->first) {
          c = ib->first;
          bv = ib->second;
          ++ib;
        } else {
          c = ia->first;
          av = ia->second;
          bv = ib->second;
          ++ia;
          ++ib;
        }
        GInt nv = exact_div(sub(mul(p, av), mul(f, bv)), prev);
        if (!nv.is_zero()) out.emplace_hint(out.end(), c, nv);
      }
      rows[r] = std::move(out);
    }
    ech.rows.push_back(rows[next]);
    ech.pivot_cols.push_back(col);
    prev = p;
    ++next;
  }
  return ech;
}

}  // namespace

std::vector<std::string> SparseMatrix::column_keys() const {
  std::set<std::string> keys(extra_cols_.begin(), extra_cols_.end());
  for (const auto& row : rows_)
    for (const auto& [k, v] : row.entries) keys.insert(k);
  return {keys.begin(), keys.end()};
}

namespace {

// Clear denominators row by row, mapping to Z[i].
std::vector<IRow> integerize(const std::vector<SparseVector>& rows,
                             const std::map<std::string, int>& index) {
  std::vector<IRow> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    mpz_class lcm_den = 1;
    for (const auto& [k, v] : row.entries) {
      mpz_class d;
      mpz_lcm(d.get_mpz_t(), lcm_den.get_mpz_t(),
              v.re.get_den().get_mpz_t());
      mpz_lcm(lcm_den.get_mpz_t(), d.get_mpz_t(),
              v.im.get_den().get_mpz_t());
    }
    IRow irow;
    for (const auto& [k, v] : row.entries) {
      Rational re = v.re * lcm_den, im = v.im * lcm_den;
      irow.emplace(index.at(k), GInt{re.get_num(), im.get_num()});
    }
    out.push_back(std::move(irow));
  }
  return out;
}

}  // namespace

std::size_t SparseMatrix::rank() const {
  auto cols = column_keys();
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], (int)i);
  auto ech = eliminate(integerize(rows_, index), (int)cols.size());
  return ech.pivot_cols.size();
}

std::vector<SparseVector> SparseMatrix::kernel_basis() const {
  auto cols = column_keys();
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], (int)i);
  auto ech = eliminate(integerize(rows_, index), (int)cols.size());

  std::set<int> pivots(ech.pivot_cols.begin(), ech.pivot_cols.end());
  std::vector<SparseVector> basis;
  for (int f = 0; f < (int)cols.size(); ++f) {
    if (pivots.count(f)) continue;
    // Solve R x = 0 with x_f = 1, x = 0 on the other free columns.
    std::map<int, Scalar> x;
    x[f] = Scalar(1);
    for (int k = (int)ech.rows.size() - 1; k >= 0; --k) {
      const int pc = ech.pivot_cols[k];
      Scalar acc;
      for (const auto& [c, v] : ech.rows[k]) {
        if (c <= pc) continue;
        auto it = x.find(c);
        if (it == x.end()) continue;
        acc += Scalar(Rational(v.re), Rational(v.im)) * it->second;
      }
      if (!acc.is_zero()) {
        const GInt& p = ech.rows[k].at(pc);
        x[pc] = -acc / Scalar(Rational(p.re), Rational(p.im));
      }
    }
    SparseVector vec;
    for (auto& [c, v] : x) vec.add(cols[c], v);
    basis.push_back(std::move(vec));
  }
  return basis;
}

SparseMatrix SparseMatrix::transpose() const {
  auto cols = column_keys();
  std::map<std::string, std::size_t> index;
  SparseMatrix t;
  std::vector<SparseVector> trows(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::string key = "r" + std::to_string(r);
    for (const auto& [k, v] : rows_[r].entries) trows[index[k]].add(key, v);
  }
  for (auto& row : trows) t.add_row(std::move(row));
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar acc;
    for (const auto& [k, c] : rows_[r].entries) acc += c * v.get(k);
    out.add("r" + std::to_string(r), acc);
  }
  return out;
}

}  // namespace voaforge
