#include "voaforge/field.hpp"

#include <sstream>

namespace voaforge {

namespace {

Rational max_term_weight(const ModeEngine& eng, const State& s) {
  Rational w = eng.ground_weight();
  for (const auto& [t, c] : s.terms) w = std::max(w, eng.term_weight(t));
  return w;
}

/// Gauss-Jordan inverse of a square rational matrix; nullopt when singular.
std::optional<Matrix> invert(Matrix a) {
  const int n = static_cast<int>(a.size());
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

long floor_rat(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q.get_si();
}

State Field::shift(long n, const State& s) const {
  if (wt.get_den() != 1)
    throw std::invalid_argument("Field::shift needs integer weight");
  return app(n + wt.get_num().get_si() - 1, s);
}

Field vacuum_field() {
  Field f;
  f.wt = Rational(0);
  f.par = 0;
  f.app = [](long k, const State& s) { return k == -1 ? s : State(); };
  return f;
}

Field gen_field(const ModeEngine& eng, GenId g) {
  if (!eng.knows(g)) throw UnknownGeneratorError("gen_field: unknown generator");
  if (g.fam == Family::CliffE)
    throw std::invalid_argument("gen_field: Clifford generators have half-integer weight");
  Field f;
  bool wt0 = (g.fam == Family::WeylB || g.fam == Family::BcPhi);
  f.wt = Rational(wt0 ? 0 : 1);
  f.par = eng.parity(g);
  long off = wt0 ? 1 : 0;
  f.app = [&eng, g, off](long k, const State& s) {
    return eng.apply_mode(Mode{g, static_cast<int>(k + off)}, s);
  };
  return f;
}

Field fadd(const Field& a, const Field& b) {
  if (a.wt != b.wt || a.par != b.par)
    throw std::invalid_argument("fadd: weight/parity mismatch");
  Field f;
  f.wt = a.wt;
  f.par = a.par;
  f.app = [a, b](long k, const State& s) { return a.app(k, s) + b.app(k, s); };
  return f;
}

Field fscale(const Scalar& c, const Field& f) {
  Field r = f;
  auto inner = f.app;
  r.app = [c, inner](long k, const State& s) { return c * inner(k, s); };
  return r;
}

Field fderive(const Field& f) {
  Field r;
  r.wt = f.wt + 1;
  r.par = f.par;
  auto inner = f.app;
  r.app = [inner](long k, const State& s) {
    if (k == 0) return State();
    return Scalar(Rational(-k)) * inner(k - 1, s);
  };
  return r;
}

Field compose(const ModeEngine& eng, const Field& a, long m, const Field& b) {
  Field r;
  r.wt = a.wt + b.wt - Rational(m) - 1;
  r.par = (a.par + b.par) % 2;
  int eps = (a.par && b.par) ? -1 : 1;
  int msign = (m % 2 == 0) ? 1 : -1;
  r.app = [&eng, a, b, m, eps, msign](long n, const State& s) {
    State out;
    if (s.is_zero()) return out;
    Rational maxw = max_term_weight(eng, s);
    Rational minw = eng.ground_weight();
    long j1 = floor_rat(b.wt + maxw - Rational(n) - 1 - minw);
    long j2 = floor_rat(a.wt + maxw - 1 - minw);
    long jmax = std::max(j1, j2);
    for (long j = 0; j <= jmax; ++j) {
      Rational bc = binomial(m, j);
      if (bc == 0) continue;
      Scalar c1 = Scalar((j % 2 == 0) ? bc : -bc);
      State inner1 = b.app(n + j, s);
      if (!inner1.is_zero()) out += c1 * a.app(m - j, inner1);
      State inner2 = a.app(j, s);
      if (!inner2.is_zero())
        out -= (Scalar(Rational(msign * eps)) * c1) * b.app(m + n - j, inner2);
    }
    return out;
  };
  return r;
}

Field poly_field(const ModeEngine& eng, const Poly& f) {
  Field total = fscale(Scalar(0), vacuum_field());
  for (const auto& [e, c] : f.coeffs) {
    Field mono = vacuum_field();
    for (int i = 0; i < f.nvars; ++i)
      for (int rep = 0; rep < e[i]; ++rep)
        mono = compose(eng, gen_field(eng, GenId{Family::WeylB, i}), -1, mono);
    total = fadd(total, fscale(c, mono));
  }
  return total;
}

State poly_state(const ModeEngine& eng, const Poly& f) {
  State out;
  for (const auto& [e, c] : f.coeffs) {
    State v = c * eng.vacuum();
    for (int i = 0; i < f.nvars; ++i)
      for (int rep = 0; rep < e[i]; ++rep)
        v = eng.apply_mode(Mode{GenId{Family::WeylB, i}, 0}, v);
    out += v;
  }
  return out;
}

OpFamily shift_family(const Field& f) {
  return [f](long n, const State& s) { return f.shift(n, s); };
}

std::string describe_state(const ModeEngine& eng, const State& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : s.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ") " << eng.term_key(t);
  }
  return os.str();
}

namespace {

/// Measure c from ([L_2, L_{-2}] - 4 L_0)|ground> = (c/2)|ground>.
bool measure_c(const ModeEngine& eng, const OpFamily& L, Scalar& c_out,
               std::string& witness) {
  State g = eng.vacuum(0);
  State y = L(2, L(-2, g)) - L(-2, L(2, g));
  y -= Scalar(Rational(4)) * L(0, g);
  Scalar c;
  for (const auto& [t, coeff] : y.terms) {
    if (t == g.terms.begin()->first) {
      c = coeff + coeff;
    }
  }
  State resid = y - (Scalar(rat(1, 2)) * c) * g;
  if (!resid.is_zero()) {
    witness = "central term on the vacuum is not scalar: " + describe_state(eng, y);
    return false;
  }
  c_out = c;
  return true;
}

}  // namespace

VirasoroReport virasoro_relations_check(const ModeEngine& eng, const OpFamily& L,
                                        const Rational& c_claim, int N, int wmax,
                                        int polydeg) {
  VirasoroReport rep;
  std::string mw;
  if (!measure_c(eng, L, rep.c_measured, mw)) {
    rep.pass = rep.c_ok = false;
    rep.witness = mw;
    return rep;
  }
  if (rep.c_measured != Scalar(c_claim)) {
    rep.pass = rep.c_ok = false;
    rep.witness = "measured central charge " + to_string(rep.c_measured) +
                  " != claimed " + to_string(c_claim);
    return rep;
  }
  for (int w = 0; w <= wmax && rep.relations_ok; ++w) {
    for (const Term& t : eng.basis(w, polydeg)) {
      State v = State::ket(t);
      for (int n = -N; n <= N && rep.relations_ok; ++n)
        for (int m = n + 1; m <= N; ++m) {
          State lhs = L(n, L(m, v)) - L(m, L(n, v));
          lhs -= Scalar(Rational(n - m)) * L(n + m, v);
          if (n + m == 0)
            lhs -= Scalar(c_claim * rat((long)n * n * n - n, 12)) * v;
          if (!lhs.is_zero()) {
            rep.relations_ok = false;
            std::ostringstream os;
            os << "[L_" << n << ", L_" << m << "] defect on " << eng.term_key(t)
               << ": " << describe_state(eng, lhs);
            rep.witness = os.str();
            break;
          }
        }
      if (!rep.relations_ok) break;
    }
  }
  rep.pass = rep.relations_ok && rep.c_ok;
  return rep;
}

VirasoroReport virasoro_check(const ModeEngine& eng, const Field& nu,
                              const Rational& c_claim, int N, int wmax,
                              int polydeg) {
  if (nu.wt != Rational(2))
    throw NotWeightTwoError("virasoro_check: candidate field has weight " +
                            to_string(nu.wt) + ", expected 2");
  VirasoroReport rep;
  // (i) nu_[0] acts as the weight grading on the truncated basis.
  for (int w = 0; w <= wmax && rep.zero_mode_ok; ++w) {
    for (const Term& t : eng.basis(w, polydeg)) {
      State v = State::ket(t);
      State lhs = nu.shift(0, v) - Scalar(eng.term_weight(t)) * v;
      if (!lhs.is_zero()) {
        rep.zero_mode_ok = false;
        rep.witness = "nu_[0] != L_0 on " + eng.term_key(t) + ": " +
                      describe_state(eng, lhs);
        break;
      }
    }
  }
  // (ii) nu_[-1] matches translation on single-generator states u_[-n]|0>,
  // where T u_[-n]|0> = (n - wt_u... ) -- use [T, u_k] relations:
  // T(u_[-n]|0>) = ((wt_u - 1) + n) u_[-n-1]|0> for weight-1 u,
  // and = (1 + n) u_[-n-1]|0> shifted for weight-0 u. Uniformly:
  // T u_(k)|0> = -k u_(k-1)|0> in the (k)-convention.
  if (rep.zero_mode_ok) {
    auto check_T = [&](const Field& u, const std::string& label) {
      if (!rep.translation_ok) return;
      for (long k = -3; k <= -1; ++k) {
        State v = u.paren(k, eng.vacuum());
        State expect = Scalar(Rational(-k)) * u.paren(k - 1, eng.vacuum());
        State lhs = nu.shift(-1, v) - expect;
        if (!lhs.is_zero()) {
          rep.translation_ok = false;
          rep.witness = "nu_[-1] != T on " + label + " state: " +
                        describe_state(eng, lhs);
          return;
        }
      }
    };
    const auto& cfg = eng.config();
    for (int i = 0; i < cfg.weyl_dim; ++i) {
      check_T(gen_field(eng, GenId{Family::WeylB, i}), "b");
      check_T(gen_field(eng, GenId{Family::WeylA, i}), "a");
    }
    for (int i = 0; i < cfg.bc_dim; ++i) {
      check_T(gen_field(eng, GenId{Family::BcPhi, i}), "phi");
      check_T(gen_field(eng, GenId{Family::BcDel, i}), "del");
    }
    if (cfg.current) {
      for (int i = 0; i < cfg.current->t_dim; ++i)
        check_T(gen_field(eng, GenId{Family::Current, i}), "J");
      for (int i = 0; i < cfg.current->om_dim; ++i)
        check_T(gen_field(eng, GenId{Family::OmegaGen, i}), "w");
    }
  }
  if (!(rep.zero_mode_ok && rep.translation_ok)) {
    rep.pass = false;
    return rep;
  }
  VirasoroReport rel =
      virasoro_relations_check(eng, shift_family(nu), c_claim, N, wmax, polydeg);
  rep.relations_ok = rel.relations_ok;
  rep.c_ok = rel.c_ok;
  rep.c_measured = rel.c_measured;
  if (!rel.pass) rep.witness = rel.witness;
  rep.pass = rep.zero_mode_ok && rep.translation_ok && rel.pass;
  return rep;
}

Field sugawara_field(const ModeEngine& eng, const LieAlgebra& g,
                     const BilinearForm& level) {
  const int n = g.dim();
  BilinearForm killing = killing_form(g);
  Matrix kappa(n, std::vector<Rational>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      kappa[a][b] = level(a, b) + rat(1, 2) * killing(a, b);
  auto inv = invert(kappa);
  if (!inv)
    throw CriticalLevelError(
        "sugawara: level + killing/2 is singular (critical level)");
  Field total = fscale(Scalar(0), vacuum_field());
  total.wt = Rational(2);
  for (int a = 0; a < n; ++a) {
    Field dual = fscale(Scalar(0), gen_field(eng, GenId{Family::Current, 0}));
    for (int b = 0; b < n; ++b)
      dual = fadd(dual, fscale(Scalar((*inv)[a][b]),
                               gen_field(eng, GenId{Family::Current, b})));
    Field part = compose(eng, dual, -1, gen_field(eng, GenId{Family::Current, a}));
    total = fadd(total, fscale(Scalar(rat(1, 2)), part));
  }
  return total;
}

Rational sugawara_central_charge(const LieAlgebra& g, const Rational& k) {
  auto hv = g.dual_coxeter();
  if (g.is_abelian()) return Rational(g.dim());
  if (!hv) throw NotSimpleError("sugawara_central_charge: no dual Coxeter number");
  if (k + *hv == 0)
    throw CriticalLevelError("sugawara_central_charge: critical level");
  return k * Rational(g.dim()) / (k + *hv);
}

std::optional<std::string> primary_weight_one_check(
    const ModeEngine& eng, const OpFamily& L,
    const std::vector<OpFamily>& currents, int N, int wmax, int polydeg) {
  for (int w = 0; w <= wmax; ++w)
    for (const Term& t : eng.basis(w, polydeg)) {
      State v = State::ket(t);
      for (int n = -N; n <= N; ++n)
        for (int m = -N; m <= N; ++m)
          for (std::size_t a = 0; a < currents.size(); ++a) {
            const OpFamily& A = currents[a];
            State lhs = L(n, A(m, v)) - A(m, L(n, v));
            lhs += Scalar(Rational(m)) * A(n + m, v);
            if (!lhs.is_zero()) {
              std::ostringstream os;
              os << "[L_" << n << ", A" << (a + 1) << "_" << m
                 << "] + " << m << " A" << (a + 1) << "_" << (n + m)
                 << " != 0 on " << eng.term_key(t) << ": "
                 << describe_state(eng, lhs);
              return os.str();
            }
          }
    }
  return std::nullopt;
}

}  // namespace voaforge
