#include "voaforge/spinor.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>

#include "voaforge/linalg.hpp"

namespace voaforge {

namespace {

long weight_excess(const ModeEngine& eng, const Term& t) {
  return floor_rat(eng.term_weight(t) - eng.ground_weight());
}

long state_excess(const ModeEngine& eng, const State& s) {
  long w = 0;
  for (const auto& [t, c] : s.terms) w = std::max(w, weight_excess(eng, t));
  return w;
}

State cliff_mode(const ModeEngine& eng, int i, long n, const State& s) {
  return eng.apply_mode(Mode{GenId{Family::CliffE, i}, static_cast<int>(n)}, s);
}

// out += k * s without materialising a scaled copy of s.
void add_scaled(State& out, const Scalar& k, const State& s) {
  for (const auto& [t, c] : s.terms) out.add(t, k * c);
}

}  // namespace

ModeEngine spinor_engine(int dprime) {
  ModeEngine::Config cfg;
  cfg.cliff_dim = 2 * dprime;
  cfg.cliff_half_dim = dprime;
  return ModeEngine(cfg);
}

ModeEngine dirac_engine(int dprime) {
  ModeEngine::Config cfg;
  cfg.weyl_dim = 2 * dprime;
  cfg.cliff_dim = 2 * dprime;
  cfg.cliff_half_dim = dprime;
  return ModeEngine(cfg);
}

OpFamily so_level1_action(const ModeEngine& eng, const Matrix& A) {
  const int d = static_cast<int>(A.size());
  return [&eng, A, d](long n, const State& s) {
    State out;
    for (const auto& [t, c] : s.terms) {
      State v = State::ket(t, c);
      long wex = weight_excess(eng, t);
      long lo = std::min<long>(0, n) - wex - 1;
      long hi = std::max<long>(0, n) + wex + 1;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          if (A[j][i] == 0) continue;
          for (long r = lo; r <= hi; ++r) {
            State st = cliff_mode(eng, j, r, v);
            if (st.is_zero()) continue;
            st = cliff_mode(eng, i, n - r, st);
            add_scaled(out, Scalar(rat(1, 4) * A[j][i]), st);
          }
        }
    }
    return out;
  };
}

OpFamily clifford_virasoro(const ModeEngine& eng) {
  const int d = eng.config().cliff_dim;
  const Rational shift = rat(d, 16);
  return [&eng, d, shift](long n, const State& s) {
    State out;
    for (const auto& [t, c] : s.terms) {
      State v = State::ket(t, c);
      long wex = weight_excess(eng, t);
      if (n == 0) out += Scalar(shift) * v;
      for (int i = 0; i < d; ++i) {
        // -1/8 sum_{r >= 0} (2r - n) e_{i,n-r} e_{i,r}
        for (long r = 0; r <= wex; ++r) {
          if (2 * r - n == 0) continue;
          State st = cliff_mode(eng, i, r, v);
          if (st.is_zero()) continue;
          st = cliff_mode(eng, i, n - r, st);
          add_scaled(out, Scalar(rat(-(2 * r - n), 8)), st);
        }
        // +1/8 sum_{r < 0} (2r - n) e_{i,r} e_{i,n-r}
        for (long r = n - wex - 1; r <= -1; ++r) {
          if (2 * r - n == 0) continue;
          State st = cliff_mode(eng, i, n - r, v);
          if (st.is_zero()) continue;
          st = cliff_mode(eng, i, r, st);
          add_scaled(out, Scalar(rat(2 * r - n, 8)), st);
        }
      }
    }
    return out;
  };
}

std::optional<std::string> so_level1_check(int dprime, int n, int wmax) {
  ModeEngine eng = spinor_engine(dprime);
  LieAlgebra g = so(2 * dprime);
  Representation rho = so_standard(g);
  BilinearForm lam0 = so_lambda0(g);
  std::vector<Term> states;
  for (int w = 0; w <= wmax; ++w)
    for (const Term& t : eng.basis(w)) states.push_back(t);

  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b) {
      const Matrix& A = rho.matrix(a);
      const Matrix& B = rho.matrix(b);
      OpFamily Af = so_level1_action(eng, A);
      OpFamily Bf = so_level1_action(eng, B);
      // [A, B] as a matrix
      int d = 2 * dprime;
      Matrix AB(d, std::vector<Rational>(d, Rational(0)));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          for (int k = 0; k < d; ++k)
            AB[i][j] += A[i][k] * B[k][j] - B[i][k] * A[k][j];
      OpFamily ABf = so_level1_action(eng, AB);
      for (const Term& t : states) {
        State v = State::ket(t);
        State lhs = Af(n, Bf(-n, v)) - Bf(-n, Af(n, v));
        State rhs = ABf(0, v) + Scalar(Rational(n) * lam0(a, b)) * v;
        if (!(lhs == rhs))
          return "level-1 relation fails for basis pair (" + std::to_string(a) +
                 "," + std::to_string(b) + ") at n=" + std::to_string(n) +
                 " on " + eng.term_key(t);
      }
    }
  return std::nullopt;
}

bool sugawara_consistency(const ModeEngine& eng, const Matrix& A, long n,
                          long m, int wmax) {
  OpFamily L = clifford_virasoro(eng);
  OpFamily Af = so_level1_action(eng, A);
  for (int w = 0; w <= wmax; ++w)
    for (const Term& t : eng.basis(w)) {
      State v = State::ket(t);
      State lhs = L(n, Af(m, v)) - Af(m, L(n, v));
      State rhs = Scalar(Rational(-m)) * Af(n + m, v);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

namespace {

/// (d_i +- db^i)_{[m]} = a_{i,m} -+ m b^i_m applied to a state.
State weyl_current_mode(const ModeEngine& eng, int i, int sign, long m,
                        const State& s) {
  State out =
      eng.apply_mode(Mode{GenId{Family::WeylA, i}, static_cast<int>(m)}, s);
  if (m != 0)
    add_scaled(out, Scalar(Rational(-sign * m)),
               eng.apply_mode(Mode{GenId{Family::WeylB, i}, static_cast<int>(m)}, s));
  return out;
}

/// scale * sum_i :(u_i u_i):_n for u_i = d_i + sign db^i, normally ordered
/// with the annihilating half on the right; the mode sum telescopes to a
/// finite window on each basis ket.
State weyl_quadratic(const ModeEngine& eng, int d, int sign,
                     const Rational& scale, long n, const State& s) {
  State out;
  for (const auto& [t, c] : s.terms) {
    State v = State::ket(t, c);
    long wex = floor_rat(eng.term_weight(t) - eng.ground_weight());
    for (int i = 0; i < d; ++i) {
      for (long r = 0; r <= wex; ++r) {
        State st = weyl_current_mode(eng, i, sign, r, v);
        if (st.is_zero()) continue;
        add_scaled(out, Scalar(scale), weyl_current_mode(eng, i, sign, n - r, st));
      }
      for (long r = std::min<long>(n - wex, -1); r <= -1; ++r) {
        State st = weyl_current_mode(eng, i, sign, n - r, v);
        if (st.is_zero()) continue;
        add_scaled(out, Scalar(scale), weyl_current_mode(eng, i, sign, r, st));
      }
    }
  }
  return out;
}

/// Shared term interner: the relation sweeps revisit the same intermediate
/// kets constantly, so images are cached per (mode, term id).
class TermPool {
 public:
  int intern(const Term& t) {
    auto [it, inserted] = ids_.try_emplace(t, static_cast<int>(terms_.size()));
    if (inserted) terms_.push_back(&it->first);
    return it->second;
  }
  const Term& term(int id) const { return *terms_[id]; }

 private:
  std::map<Term, int> ids_;
  std::vector<const Term*> terms_;  // map nodes are stable
};

/// A cached image entry: coefficients stored as int32 rationals (real and
/// imaginary parts) to keep millions of entries affordable; entries that do
/// not fit fall back to an exact side table.
struct CompactCoef {
  int32_t nr, dr, ni, di;
};

bool fit32(const Rational& r, int32_t& num, int32_t& den) {
  if (!r.get_num().fits_sint_p() || !r.get_den().fits_sint_p()) return false;
  num = static_cast<int32_t>(r.get_num().get_si());
  den = static_cast<int32_t>(r.get_den().get_si());
  return true;
}

/// Raised when a computation leaves the machine-word rational range; the
/// caller redoes that instance with full-precision scalars.
struct SmallOverflow {};

/// Machine-word rational, always canonical with positive denominator.
struct SQ {
  int64_t n = 0, d = 1;
};

SQ sq_make(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return {0, 1};
  __int128 a = n < 0 ? -n : n, b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  n /= a;
  d /= a;
  if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw SmallOverflow{};
  return {static_cast<int64_t>(n), static_cast<int64_t>(d)};
}

SQ sq_add(const SQ& a, const SQ& b) {
  return sq_make(static_cast<__int128>(a.n) * b.d +
                     static_cast<__int128>(b.n) * a.d,
                 static_cast<__int128>(a.d) * b.d);
}

SQ sq_mul(const SQ& a, const SQ& b) {
  return sq_make(static_cast<__int128>(a.n) * b.n,
                 static_cast<__int128>(a.d) * b.d);
}

/// Machine-word element of Q(i).
struct SQC {
  SQ re, im;
  bool is_zero() const { return re.n == 0 && im.n == 0; }
};

SQC sqc_add(const SQC& a, const SQC& b) {
  return {sq_add(a.re, b.re), sq_add(a.im, b.im)};
}

SQC sqc_mul(const SQC& a, const SQC& b) {
  return {sq_add(sq_mul(a.re, b.re), sq_mul(SQ{-a.im.n, a.im.d}, b.im)),
          sq_add(sq_mul(a.re, b.im), sq_mul(a.im, b.re))};
}

SQC sqc_of(const CompactCoef& c) {
  return {SQ{c.nr, c.dr}, SQ{c.ni, c.di}};
}

Scalar scalar_of(const SQC& c) {
  return Scalar(Rational(static_cast<long>(c.re.n), static_cast<long>(c.re.d)),
                Rational(static_cast<long>(c.im.n), static_cast<long>(c.im.d)));
}

/// Sparse state in interned-id coordinates with machine-word coefficients.
using CMap = std::map<int, SQC>;

void cmap_axpy(CMap& out, const SQC& c, int id) {
  auto [it, inserted] = out.try_emplace(id, c);
  if (!inserted) {
    it->second = sqc_add(it->second, c);
    if (it->second.is_zero()) out.erase(it);
  } else if (c.is_zero()) {
    out.erase(it);
  }
}

/// Memoizing wrapper: operator families are linear, so each (mode, ket)
/// image is computed once and reused across all relation instances. Images
/// are stored compactly (interned term ids, int32 rational coefficients);
/// entries that do not fit fall back to an exact side table.
class CachedFamily {
 public:
  CachedFamily(OpFamily base, std::shared_ptr<TermPool> pool)
      : base_(std::move(base)), pool_(std::move(pool)) {}

  State operator()(long n, const State& s) const {
    State out;
    for (const auto& [t, c] : s.terms) {
      int id = pool_->intern(t);
      const auto* e = entry(n, id);
      if (e == nullptr) {
        const State& img = exact_.at({n, id});
        for (const auto& [tt, cc] : img.terms) out.add(tt, cc * c);
      } else {
        for (const auto& [tid, cc] : *e)
          out.add(pool_->term(tid),
                  Scalar(Rational(cc.nr, cc.dr), Rational(cc.ni, cc.di)) * c);
      }
    }
    return out;
  }

  /// Compact application; throws SmallOverflow when an exact-fallback entry
  /// is met or machine-word arithmetic overflows.
  CMap apply_c(long n, const CMap& in) const {
    CMap out;
    for (const auto& [id, c] : in) {
      const auto* e = entry(n, id);
      if (e == nullptr) throw SmallOverflow{};
      for (const auto& [tid, cc] : *e) cmap_axpy(out, sqc_mul(c, sqc_of(cc)), tid);
    }
    return out;
  }

  TermPool& pool() const { return *pool_; }

 private:
  static constexpr int kEmpty = -1;
  static constexpr int kExact = -2;

  const std::vector<std::pair<int, CompactCoef>>* entry(long n, int id) const {
    std::vector<int>& slot = offsets_[n];
    if (static_cast<int>(slot.size()) <= id) slot.resize(id + 1, kEmpty);
    if (slot[id] == kEmpty) slot[id] = store(n, id);
    if (slot[id] == kExact) return nullptr;
    return &compact_[slot[id]];
  }

  int store(long n, int id) const {
    State img = base_(n, State::ket(pool_->term(id)));
    std::vector<std::pair<int, CompactCoef>> entry;
    entry.reserve(img.terms.size());
    for (const auto& [t, c] : img.terms) {
      CompactCoef cc;
      if (!fit32(c.re, cc.nr, cc.dr) || !fit32(c.im, cc.ni, cc.di)) {
        exact_.emplace(std::make_pair(n, id), std::move(img));
        return kExact;
      }
      entry.emplace_back(pool_->intern(t), cc);
    }
    compact_.push_back(std::move(entry));
    return static_cast<int>(compact_.size()) - 1;
  }

  OpFamily base_;
  std::shared_ptr<TermPool> pool_;
  mutable std::map<long, std::vector<int>> offsets_;
  mutable std::vector<std::vector<std::pair<int, CompactCoef>>> compact_;
  mutable std::map<std::pair<long, int>, State> exact_;
};

}  // namespace

SCFOperators scf_operators(const ModeEngine& eng) {
  const int d = eng.config().weyl_dim;
  SCFOperators ops;
  ops.dprime = d / 2;
  ops.eng = &eng;

  const ModeEngine* ep0 = &eng;
  // L_n = 1/4 ((d_i + db^i)_{-1} (d_i + db^i))_n (x) 1
  ops.L = [ep0, d](long n, const State& s) {
    return weyl_quadratic(*ep0, d, 1, rat(1, 4), n, s);
  };
  OpFamily lcl = clifford_virasoro(eng);
  ops.Lbar = [ep0, d, lcl](long n, const State& s) {
    return weyl_quadratic(*ep0, d, -1, rat(-1, 4), n, s) + lcl(n, s);
  };

  // Gbar_n = 1/2 (d_i - db^i)_{n-r} (x) e_{i,r} with (d_i - db^i)_{[m]} =
  // a_{i,m} + m b^i_m
  const ModeEngine* ep = &eng;
  ops.Gbar = [ep, d](long n, const State& s) {
    State out;
    for (const auto& [t, c] : s.terms) {
      State v = State::ket(t, c);
      long wex = weight_excess(*ep, t);
      for (int i = 0; i < d; ++i)
        for (long r = n - wex - 1; r <= wex + 1; ++r) {
          State st = cliff_mode(*ep, i, r, v);
          if (st.is_zero()) continue;
          long m = n - r;
          State part = ep->apply_mode(
              Mode{GenId{Family::WeylA, i}, static_cast<int>(m)}, st);
          if (m != 0)
            add_scaled(part, Scalar(Rational(m)),
                       ep->apply_mode(
                           Mode{GenId{Family::WeylB, i}, static_cast<int>(m)}, st));
          add_scaled(out, Scalar(rat(1, 2)), part);
        }
    }
    return out;
  };
  return ops;
}

SCFReport scf_check(const SCFOperators& ops, int N, int wmax, int polydeg) {
  const ModeEngine& eng = *ops.eng;
  const int dp = ops.dprime;
  SCFReport rep;
  auto pool = std::make_shared<TermPool>();
  CachedFamily L(ops.L, pool), Lbar(ops.Lbar, pool), Gbar(ops.Gbar, pool);

  std::vector<Term> states;
  for (int w = 0; w <= wmax; ++w)
    for (const Term& t : eng.basis(w, polydeg)) states.push_back(t);

  auto fail = [&rep](std::string w) {
    rep.pass = false;
    if (rep.witness.empty()) rep.witness = std::move(w);
  };

  // One relation instance: commutator (sign +1 for an anticommutator) of
  // A_n, B_m minus the expected combination c1 C_{n+m} + c0 * id; evaluated
  // in machine-word arithmetic, redone with exact scalars on overflow.
  auto holds = [&](const CachedFamily& A, long n, const CachedFamily& B,
                   long m, int sign, const CachedFamily* C, const Rational& c1,
                   const Rational& c0, const Term& t) -> bool {
    try {
      CMap v;
      v.emplace(pool->intern(t), SQC{SQ{1, 1}, SQ{0, 1}});
      CMap lhs = A.apply_c(n, B.apply_c(m, v));
      const CMap bm = B.apply_c(m, A.apply_c(n, v));
      for (const auto& [id, c] : bm)
        cmap_axpy(lhs, sign > 0 ? c : SQC{SQ{-c.re.n, c.re.d}, SQ{-c.im.n, c.im.d}},
                  id);
      if (C != nullptr && c1 != 0) {
        int32_t cn, cd;
        if (!fit32(c1, cn, cd)) throw SmallOverflow{};
        const SQC mc{SQ{-cn, cd}, SQ{0, 1}};
        for (const auto& [id, c] : C->apply_c(n + m, v))
          cmap_axpy(lhs, sqc_mul(mc, c), id);
      }
      if (c0 != 0) {
        int32_t cn, cd;
        if (!fit32(c0, cn, cd)) throw SmallOverflow{};
        for (const auto& [id, c] : v)
          cmap_axpy(lhs, sqc_mul(SQC{SQ{-cn, cd}, SQ{0, 1}}, c), id);
      }
      return lhs.empty();
    } catch (const SmallOverflow&) {
      State v = State::ket(t);
      State lhs = A(n, B(m, v));
      State rhs = Scalar(sign > 0 ? -1 : 1) * B(m, A(n, v));
      if (C != nullptr) rhs += Scalar(c1) * (*C)(n + m, v);
      rhs += Scalar(c0) * v;
      return lhs == rhs;
    }
  };

  const Rational cl = Rational(2 * dp), clb = Rational(3 * dp);
  for (int n = -N; n <= N; ++n)
    for (int m = -N; m <= N; ++m)
      for (const Term& t : states) {
        std::string at = " at (n,m)=(" + std::to_string(n) + "," +
                         std::to_string(m) + ") on " + eng.term_key(t);
        // the two Virasoro relations, central terms included
        if (n <= m) {
          Rational nm3 = Rational(static_cast<long>(n) * n * n - n) / 12;
          if (!holds(L, n, L, m, -1, &L, Rational(n - m),
                     (n + m == 0) ? cl * nm3 : Rational(0), t))
            fail("[L_n, L_m] mismatch" + at);
          if (!holds(Lbar, n, Lbar, m, -1, &Lbar, Rational(n - m),
                     (n + m == 0) ? clb * nm3 : Rational(0), t))
            fail("[Lbar_n, Lbar_m] mismatch" + at);
        }
        if (!holds(L, n, Lbar, m, -1, nullptr, Rational(0), Rational(0), t))
          fail("[L_n, Lbar_m] != 0" + at);
        if (!holds(L, n, Gbar, m, -1, nullptr, Rational(0), Rational(0), t))
          fail("[L_n, Gbar_m] != 0" + at);
        // [Lbar_n, Gbar_m] = (n/2 - m) Gbar_{n+m}
        if (!holds(Lbar, n, Gbar, m, -1, &Gbar, rat(n, 2) - Rational(m),
                   Rational(0), t))
          fail("[Lbar_n, Gbar_m] mismatch" + at);
        // [Gbar_n, Gbar_m]_+ = 2 Lbar_{n+m} + (d'/4)(4n^2-1) delta_{n,-m}
        if (n <= m &&
            !holds(Gbar, n, Gbar, m, +1, &Lbar, Rational(2),
                   (n + m == 0) ? rat(dp, 4) * Rational(4L * n * n - 1)
                                : Rational(0),
                   t))
          fail("[Gbar_n, Gbar_m]_+ mismatch" + at);
        if (!rep.pass) return rep;
      }

  // measured central charges from ([X_2, X_{-2}] - 4 X_0) |0> = (c/2)|0>
  for (int which = 0; which < 2; ++which) {
    const CachedFamily& F = which == 0 ? L : Lbar;
    State v = eng.vacuum(0);
    State r = F(2, F(-2, v)) - F(-2, F(2, v)) - Scalar(4) * F(0, v);
    State scaled = Scalar(2) * r;
    auto it = scaled.terms.find(Term{{}, 0});
    Scalar c = (it == scaled.terms.end()) ? Scalar(0) : it->second;
    if (!(scaled - c * v).is_zero()) {
      fail(which == 0 ? "L central term is not scalar on the ground"
                      : "Lbar central term is not scalar on the ground");
      return rep;
    }
    (which == 0 ? rep.c_l : rep.c_lbar) = c;
  }
  if (rep.c_l != Scalar(cl)) fail("measured L central charge != 2 d'");
  if (rep.c_lbar != Scalar(clb)) fail("measured Lbar central charge != 3 d'");

  // measure the Gbar central charge from the ground states:
  // ([Gbar_1, Gbar_{-1}]_+ - 2 Lbar_0) |gnd> = (c/12) * 3 |gnd>
  for (int g0 = 0; g0 < eng.ground_count(); ++g0) {
    State v = eng.vacuum(g0);
    State central = Gbar(1, Gbar(-1, v)) + Gbar(-1, Gbar(1, v)) -
                    Scalar(2) * Lbar(0, v);
    State scaled = Scalar(rat(4, 1)) * central;  // c = 4 * eigenvalue
    auto it = scaled.terms.find(Term{{}, g0});
    Scalar c = (it == scaled.terms.end()) ? Scalar(0) : it->second;
    State residue = scaled - c * v;
    if (!residue.is_zero()) {
      fail("Gbar central term is not scalar on the ground");
      return rep;
    }
    if (g0 == 0) {
      rep.c_gbar = c;
    } else if (!(rep.c_gbar == c)) {
      fail("Gbar central term differs between ground spinors");
      return rep;
    }
  }
  if (!(rep.c_gbar == Scalar(Rational(3 * dp))))
    fail("measured Gbar central charge != 3 d'");
  return rep;
}

DiracReport dirac_kernel(const SCFOperators& ops, int wmax, int poly_degree,
                         std::size_t budget) {
  const ModeEngine& eng = *ops.eng;
  const Rational gw = eng.ground_weight();
  DiracReport rep;
  rep.poly_degree = poly_degree;
  auto pool = std::make_shared<TermPool>();
  CachedFamily Gbar(ops.Gbar, pool), Lbar(ops.Lbar, pool);
  auto dslash = [&Gbar](const State& s) { return Scalar(2) * Gbar(0, s); };

  for (int w = 0; w <= wmax; ++w) {
    std::vector<Term> block = eng.basis(w, poly_degree);
    if (block.size() > budget)
      throw UnboundedBlockSpinorError(
          "dirac_kernel: weight block " + std::to_string(w) + " has " +
          std::to_string(block.size()) + " states (budget " +
          std::to_string(budget) + ")");
    SparseMatrix images;
    for (const Term& t : block) {
      State v = State::ket(t);
      State dv = dslash(v);
      SparseVector row;
      for (const auto& [tt, c] : dv.terms) row.add(eng.term_key(tt), c);
      images.add_row(std::move(row));
      // Dslash^2 = 4 (Lbar_0 - d'/8) on every basis state
      State lhs = dslash(dv);
      State rhs = Scalar(4) * (Lbar(0, v) - Scalar(gw) * v);
      if (!(lhs == rhs)) {
        rep.square_identity_ok = false;
        if (rep.witness.empty())
          rep.witness = "Dslash^2 != 4(Lbar_0 - d'/8) on " + eng.term_key(t);
      }
    }
    DiracBlock db;
    db.weight_excess = w;
    db.dim = block.size();
    db.dim_ker = block.size() - images.rank();
    // every kernel vector must sit at Lbar_0 = d'/8
    SparseMatrix tr = images.transpose();
    for (std::size_t i = 0; i < block.size(); ++i)
      tr.register_column("r" + std::to_string(i));
    for (const SparseVector& kv : tr.kernel_basis()) {
      State v;
      for (const auto& [key, c] : kv.entries) {
        std::size_t i = std::stoul(key.substr(1));
        v += c * State::ket(block[i]);
      }
      if (!(Lbar(0, v) == Scalar(gw) * v)) {
        rep.kernel_weight_ok = false;
        if (rep.witness.empty())
          rep.witness = "kernel vector off Lbar_0 = d'/8 at weight excess " +
                        std::to_string(w);
      }
    }
    rep.blocks.push_back(db);
  }
  {
    // constant spinors: the lowest-weight block at polynomial degree 0
    std::vector<Term> block = eng.basis(0, 0);
    SparseMatrix images;
    for (const Term& t : block) {
      SparseVector row;
      for (const auto& [tt, c] : dslash(State::ket(t)).terms)
        row.add(eng.term_key(tt), c);
      images.add_row(std::move(row));
    }
    rep.ground_kernel = block.size() - images.rank();
  }
  rep.pass = rep.square_identity_ok && rep.kernel_weight_ok;
  return rep;
}

std::vector<long> spinor_character(const ModeEngine& eng, int wmax) {
  std::vector<long> dims;
  for (int w = 0; w <= wmax; ++w)
    dims.push_back(static_cast<long>(eng.basis(w).size()));
  return dims;
}

std::vector<long> tensor_character(const ModeEngine& eng, int wmax,
                                   int poly_degree) {
  std::vector<long> dims;
  for (int w = 0; w <= wmax; ++w)
    dims.push_back(static_cast<long>(eng.basis(w, poly_degree).size()));
  return dims;
}

}  // namespace voaforge
