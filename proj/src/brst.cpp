#include "voaforge/brst.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

namespace voaforge {

namespace {

/// Coordinates of an element of Lambda g* (x) W: (mask, w-index) -> coeff.
using CEVec = std::map<std::pair<int, int>, Scalar>;

void ce_add(CEVec& v, int mask, int r, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(mask, r);
  auto it = v.find(key);
  if (it == v.end()) {
    v.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

int below(int mask, int a) { return std::popcount(static_cast<unsigned>(mask & ((1 << a) - 1))); }

/// phi^a wedge: returns 0-mask sentinel via ok=false.
bool wedge(int a, int mask, int& out, int& sign) {
  if (mask & (1 << a)) return false;
  out = mask | (1 << a);
  sign = (below(mask, a) % 2 == 0) ? 1 : -1;
  return true;
}
bool contract(int a, int mask, int& out, int& sign) {
  if (!(mask & (1 << a))) return false;
  out = mask & ~(1 << a);
  sign = (below(mask, a) % 2 == 0) ? 1 : -1;
  return true;
}

struct CEOps {
  int n;  // dim g
  std::vector<std::vector<std::vector<Rational>>> c;  // c[a][b][cc]
  std::vector<Matrix> rho;                            // may be empty (W = C)

  int dim_w() const { return rho.empty() ? 1 : static_cast<int>(rho[0].size()); }

  CEVec apply_q(const CEVec& v) const {
    CEVec out;
    for (const auto& [key, coeff] : v) {
      auto [mask, r] = key;
      for (int a = 0; a < n; ++a) {
        int m1, s1;
        if (!contract(a, mask, m1, s1)) continue;
        for (int b = 0; b < n; ++b)
          for (int cc = 0; cc < n; ++cc) {
            if (c[a][b][cc] == 0) continue;
            int m2, s2;
            if (!wedge(cc, m1, m2, s2)) continue;
            int m3, s3;
            if (!wedge(b, m2, m3, s3)) continue;
            ce_add(out, m3, r,
                   Scalar(rat(-1, 2) * c[a][b][cc] * Rational(s1 * s2 * s3)) * coeff);
          }
      }
    }
    return out;
  }

  CEVec apply_theta(const CEVec& v) const {
    CEVec out;
    if (rho.empty()) return out;  // trivial module
    int dw = dim_w();
    for (const auto& [key, coeff] : v) {
      auto [mask, r] = key;
      for (int a = 0; a < n; ++a) {
        int m1, s1;
        if (!wedge(a, mask, m1, s1)) continue;
        for (int t = 0; t < dw; ++t) {
          if (rho[a][t][r] == 0) continue;
          ce_add(out, m1, t, Scalar(Rational(s1) * rho[a][t][r]) * coeff);
        }
      }
    }
    return out;
  }

  CEVec apply_Q(const CEVec& v) const {
    CEVec out = apply_q(v);
    for (const auto& [key, coeff] : apply_theta(v)) ce_add(out, key.first, key.second, coeff);
    return out;
  }
};

std::string ce_key(int mask, int r) {
  return "m" + std::to_string(mask) + "|" + std::to_string(r);
}

std::vector<std::vector<std::vector<Rational>>> tensor_of(const LieAlgebra& g) {
  int n = g.dim();
  std::vector<std::vector<std::vector<Rational>>> c(
      n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc) c[a][b][cc] = g.c(a, b, cc);
  return c;
}

}  // namespace

std::size_t invariants_dim(const LieAlgebra& g, const std::vector<Matrix>& action) {
  if (action.empty()) return 1;  // trivial one-dimensional module
  int dw = static_cast<int>(action[0].size());
  SparseMatrix m;
  for (int j = 0; j < dw; ++j) m.register_column("r" + std::to_string(j));
  for (int a = 0; a < g.dim(); ++a)
    for (int t = 0; t < dw; ++t) {
      SparseVector row;
      for (int r = 0; r < dw; ++r) row.add("r" + std::to_string(r), Scalar(action[a][t][r]));
      m.add_row(std::move(row));
    }
  return dw - m.rank();
}

CEComplex ce_build(const LieAlgebra& g, const std::vector<Matrix>& action) {
  const int n = g.dim();
  // validate the module structure
  if (!action.empty()) {
    int dw = static_cast<int>(action[0].size());
    for (const auto& m : action)
      if (static_cast<int>(m.size()) != dw)
        throw NotAModuleError("ce_build: ragged action matrices");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int t = 0; t < dw; ++t)
          for (int r = 0; r < dw; ++r) {
            Rational lhs(0);
            for (int k = 0; k < dw; ++k)
              lhs += action[a][t][k] * action[b][k][r] -
                     action[b][t][k] * action[a][k][r];
            Rational rhs(0);
            for (int e = 0; e < n; ++e) rhs += g.c(e, a, b) * action[e][t][r];
            if (!(lhs == rhs))
              throw NotAModuleError("ce_build: bracket compatibility fails for (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
          }
  }
  CEOps ops{n, tensor_of(g), action};
  int dw = ops.dim_w();

  CEComplex ce;
  ce.dim_g = n;
  ce.dim_w = dw;

  // bases per degree
  std::vector<std::vector<std::pair<int, int>>> basis(n + 1);
  for (int mask = 0; mask < (1 << n); ++mask) {
    int j = std::popcount(static_cast<unsigned>(mask));
    for (int r = 0; r < dw; ++r) basis[j].emplace_back(mask, r);
  }
  for (int j = 0; j <= n; ++j) ce.chain_dims.push_back(basis[j].size());

  std::vector<std::size_t> ranks(n + 1, 0);
  for (int j = 0; j <= n; ++j) {
    SparseMatrix m;
    for (const auto& [mask, r] : basis[j]) {
      CEVec v;
      ce_add(v, mask, r, Scalar(1));
      CEVec qv = ops.apply_Q(v);
      if (!ops.apply_Q(qv).empty())
        throw std::logic_error("ce_build: Q^2 != 0");
      SparseVector row;
      for (const auto& [key, coeff] : qv) row.add(ce_key(key.first, key.second), coeff);
      m.add_row(std::move(row));
    }
    ranks[j] = m.rank();
  }
  for (int j = 0; j <= n; ++j) {
    std::size_t incoming = (j == 0) ? 0 : ranks[j - 1];
    ce.h_dims.push_back(ce.chain_dims[j] - ranks[j] - incoming);
  }
  return ce;
}

std::optional<std::string> jq_relations_check_raw(
    int dim, const std::vector<std::vector<std::vector<Rational>>>& c) {
  CEOps ops{dim, c, {}};
  // [J, q] = q: q raises exterior degree by exactly one.
  for (int mask = 0; mask < (1 << dim); ++mask) {
    CEVec v;
    ce_add(v, mask, 0, Scalar(1));
    int j = std::popcount(static_cast<unsigned>(mask));
    for (const auto& [key, coeff] : ops.apply_q(v)) {
      (void)coeff;
      if (std::popcount(static_cast<unsigned>(key.first)) != j + 1)
        return "[J,q] = q fails: q does not raise degree by 1";
    }
    // [q, q] = 0, i.e. q^2 = 0 (encodes the Jacobi identity)
    CEVec q2 = ops.apply_q(ops.apply_q(v));
    if (!q2.empty()) {
      std::ostringstream os;
      os << "[q,q] != 0: q^2 of the degree-" << j << " monomial with mask "
         << mask << " is nonzero";
      return os.str();
    }
  }
  // J theta = theta: each component phi^a (x) t_a has exterior degree 1.
  // (Structural; recorded for completeness.)
  // q theta + [theta, theta]/2 = 0 in Lambda^2 g* (x) g.
  CEVec defect;  // keyed by (mask, adjoint index)
  for (int a = 0; a < dim; ++a) {
    CEVec phi_a;
    ce_add(phi_a, 1 << a, a, Scalar(1));  // phi^a (x) t_a
    // q acts on the exterior factor only
    for (const auto& [key, coeff] : CEOps{dim, c, {}}.apply_q(phi_a))
      ce_add(defect, key.first, key.second, coeff);
  }
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      int m1, s1, m2, s2;
      if (!wedge(b, 0, m1, s1)) continue;
      if (!wedge(a, m1, m2, s2)) continue;
      for (int t = 0; t < dim; ++t)
        ce_add(defect, m2, t, Scalar(rat(1, 2) * Rational(s1 * s2) * c[t][a][b]));
    }
  if (!defect.empty()) return "q theta + [theta,theta]/2 != 0";
  return std::nullopt;
}

std::optional<std::string> jq_relations_check(const LieAlgebra& g) {
  return jq_relations_check_raw(g.dim(), tensor_of(g));
}

// ----- Feigin complex ------------------------------------------------------

FeiginComplex::FeiginComplex(const LieAlgebra& g, const LieAlgebra& matter_g,
                             const BilinearForm& matter_level, bool inner_action)
    : g_(g), matter_g_(matter_g), matter_level_(matter_level), inner_(inner_action),
      qf_(vacuum_field()) {
  if (inner_ && matter_g_.dim() != g_.dim())
    throw std::invalid_argument("FeiginComplex: inner action needs matter algebra = g");
  ModeEngine::Config cfg;
  cfg.bc_dim = g_.dim();
  cfg.current = CurrentSector::affine(matter_g_, matter_level_);
  eng_ = std::make_unique<ModeEngine>(cfg);

  const int n = g_.dim();
  Field q = fscale(Scalar(0),
                   compose(*eng_, gen_field(*eng_, GenId{Family::BcPhi, 0}), -1,
                           compose(*eng_, gen_field(*eng_, GenId{Family::BcPhi, 0}),
                                   -1, gen_field(*eng_, GenId{Family::BcDel, 0}))));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cidx = 0; cidx < n; ++cidx) {
        Rational sc = g_.c(a, b, cidx);
        if (sc == 0) continue;
        Field part = compose(
            *eng_, gen_field(*eng_, GenId{Family::BcPhi, b}), -1,
            compose(*eng_, gen_field(*eng_, GenId{Family::BcPhi, cidx}), -1,
                    gen_field(*eng_, GenId{Family::BcDel, a})));
        q = fadd(q, fscale(Scalar(rat(-1, 2) * sc), part));
      }
  qf_ = q;
}

BilinearForm FeiginComplex::action_level() const {
  if (inner_) return matter_level_;
  Matrix zero(g_.dim(), std::vector<Rational>(g_.dim(), Rational(0)));
  return BilinearForm{zero};
}

State FeiginComplex::matter_act(int a, long n, const State& s) const {
  if (!inner_) return State();
  return eng_->apply_mode(Mode{GenId{Family::Current, a}, static_cast<int>(n)}, s);
}

State FeiginComplex::q0(const State& s) const {
  State out = qf_.shift(0, s);
  if (inner_) {
    long B = 1;
    for (const auto& [t, c] : s.terms) {
      Rational wex = eng_->term_weight(t);
      B = std::max(B, floor_rat(wex) + 1);
    }
    for (int a = 0; a < g_.dim(); ++a)
      for (long n = -B; n <= B; ++n) {
        State st = matter_act(a, n, s);
        if (st.is_zero()) continue;
        out += eng_->apply_mode(Mode{GenId{Family::BcPhi, a}, static_cast<int>(-n)}, st);
      }
  }
  return out;
}

OpFamily FeiginComplex::ghost_virasoro() const {
  const int n = g_.dim();
  Field nu = fscale(Scalar(0),
                    compose(*eng_, gen_field(*eng_, GenId{Family::BcDel, 0}), -1,
                            fderive(gen_field(*eng_, GenId{Family::BcPhi, 0}))));
  for (int a = 0; a < n; ++a)
    nu = fadd(nu, fscale(Scalar(-1),
                         compose(*eng_, gen_field(*eng_, GenId{Family::BcDel, a}), -1,
                                 fderive(gen_field(*eng_, GenId{Family::BcPhi, a})))));
  return shift_family(nu);
}

std::optional<std::string> q0_square_check(const FeiginComplex& fx, int wmax) {
  const ModeEngine& eng = fx.engine();
  const int n = fx.g().dim();
  BilinearForm lam_ad = killing_form(fx.g());
  BilinearForm lam = fx.action_level();
  for (int w = 0; w <= wmax; ++w)
    for (const Term& t : eng.basis(w, -1)) {
      State v = State::ket(t);
      State lhs = fx.q0(fx.q0(v));
      State rhs;
      long B = w + 1;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          Rational kappa = lam_ad(a, b) + lam(a, b);
          if (kappa == 0) continue;
          for (long m = -B; m <= B; ++m) {
            if (m == 0) continue;
            State st = eng.apply_mode(Mode{GenId{Family::BcPhi, b}, static_cast<int>(m)}, v);
            if (st.is_zero()) continue;
            st = eng.apply_mode(Mode{GenId{Family::BcPhi, a}, static_cast<int>(-m)}, st);
            rhs += Scalar(rat(1, 2) * kappa * Rational(m)) * st;
          }
        }
      if (!(lhs == rhs))
        return "Q_0^2 mismatch on " + eng.term_key(t) + ": got " +
               describe_state(eng, lhs) + ", expected " + describe_state(eng, rhs);
    }
  return std::nullopt;
}

bool q0_square_zero(const FeiginComplex& fx, int wmax) {
  const ModeEngine& eng = fx.engine();
  for (int w = 0; w <= wmax; ++w)
    for (const Term& t : eng.basis(w, -1))
      if (!fx.q0(fx.q0(State::ket(t))).is_zero()) return false;
  return true;
}

CohomologyReport semiinf_cohomology(const FeiginComplex& fx,
                                    const std::vector<Matrix>& w0_action,
                                    int w_max, std::size_t budget,
                                    unsigned permutation_seed) {
  const ModeEngine& eng = fx.engine();
  const int n = fx.g().dim();
  // the obstruction must vanish identically: action level = -Killing form
  BilinearForm lam = fx.action_level();
  BilinearForm lam_ad = killing_form(fx.g());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(lam(a, b) + lam_ad(a, b) == 0))
        throw ObstructionNonzeroError(
            "semiinf_cohomology: action level is not -lambda_ad; [Q_0,Q_0] != 0");

  CohomologyReport rep;
  for (int w = 0; w <= w_max; ++w) {
    std::map<int, std::vector<Term>> blocks;
    for (const Term& t : eng.basis(w, -1)) blocks[eng.ghost_number(t)].push_back(t);
    if (permutation_seed != 0) {
      std::mt19937 rng(permutation_seed + static_cast<unsigned>(w));
      for (auto& [j, terms] : blocks) std::shuffle(terms.begin(), terms.end(), rng);
    }
    std::map<int, std::size_t> ranks;
    for (const auto& [j, terms] : blocks) {
      if (terms.size() > budget)
        throw UnboundedBlockError("semiinf_cohomology: weight " + std::to_string(w) +
                                  " degree " + std::to_string(j) + " block has " +
                                  std::to_string(terms.size()) +
                                  " columns (budget " + std::to_string(budget) + ")");
      SparseMatrix m;
      for (const Term& t : terms) {
        State img = fx.q0(State::ket(t));
        SparseVector row;
        for (const auto& [tt, c] : img.terms) row.add(eng.term_key(tt), c);
        m.add_row(std::move(row));
      }
      ranks[j] = m.rank();
    }
    long chi_h = 0, chi_chain = 0;
    for (const auto& [j, terms] : blocks) {
      CohomologyEntry e;
      e.weight = w;
      e.degree = j;
      e.chain_dim = terms.size();
      e.dim_ker = terms.size() - ranks[j];
      e.dim_im = ranks.count(j - 1) ? ranks[j - 1] : 0;
      e.dim_h = e.dim_ker - e.dim_im;
      rep.entries.push_back(e);
      int sgn = (j % 2 == 0) ? 1 : -1;
      chi_h += sgn * static_cast<long>(e.dim_h);
      chi_chain += sgn * static_cast<long>(e.chain_dim);
    }
    rep.euler[w] = chi_h;
    if (chi_h != chi_chain) rep.euler_ok = false;
  }

  // mandatory weight-0 cross-check against the finite CE complex
  CEComplex ce = ce_build(fx.g(), w0_action);
  rep.weight0_invariants = invariants_dim(fx.g(), w0_action);
  rep.weight0_crosscheck_ok = true;
  for (const auto& e : rep.entries) {
    if (e.weight != 0) continue;
    std::size_t expect =
        (e.degree >= 0 && e.degree <= ce.dim_g) ? ce.h_dims[e.degree] : 0;
    if (e.dim_h != expect) rep.weight0_crosscheck_ok = false;
  }
  return rep;
}

InducedVirasoroReport induced_virasoro_check(const FeiginComplex& fx,
                                             const OpFamily& matter_L,
                                             const Rational& c_matter, int N,
                                             int wmax) {
  const ModeEngine& eng = fx.engine();
  const int n = fx.g().dim();
  // matter currents must be weight-one primaries for the matter Virasoro
  std::vector<OpFamily> currents;
  for (int a = 0; a < n; ++a)
    currents.push_back([&fx, a](long m, const State& s) { return fx.matter_act(a, m, s); });
  if (auto w = primary_weight_one_check(eng, matter_L, currents, N, std::min(wmax, 1), -1))
    throw NotPrimaryError("induced_virasoro_check: " + *w);

  InducedVirasoroReport rep;
  OpFamily lg = fx.ghost_virasoro();
  OpFamily diag = [lg, matter_L](long m, const State& s) {
    return lg(m, s) + matter_L(m, s);
  };
  for (int w = 0; w <= wmax && rep.commutes_with_q0; ++w)
    for (const Term& t : eng.basis(w, -1)) {
      State v = State::ket(t);
      for (int m = -N; m <= N; ++m) {
        State defect = fx.q0(diag(m, v)) - diag(m, fx.q0(v));
        if (!defect.is_zero()) {
          rep.commutes_with_q0 = false;
          rep.witness = "[Q_0, diag L_" + std::to_string(m) + "] != 0 on " +
                        eng.term_key(t);
          break;
        }
      }
      if (!rep.commutes_with_q0) break;
    }
  rep.diagonal = virasoro_relations_check(eng, diag, c_matter - Rational(2 * n), N,
                                          wmax, -1);
  rep.pass = rep.commutes_with_q0 && rep.diagonal.pass;
  if (!rep.diagonal.pass && rep.witness.empty()) rep.witness = rep.diagonal.witness;
  return rep;
}

bool grading_bound_check(const FeiginComplex& fx, int k) {
  const ModeEngine& eng = fx.engine();
  for (const Term& t : eng.basis(k, -1)) {
    int j = eng.ghost_number(t);
    if (j < -k || j > fx.g().dim() + k) return false;
  }
  return true;
}

bool centralizer_map_check(const FeiginComplex& fx, const State& u) {
  const ModeEngine& eng = fx.engine();
  long B = 1;
  for (const auto& [t, c] : u.terms) B = std::max(B, floor_rat(eng.term_weight(t)) + 1);
  for (int a = 0; a < fx.g().dim(); ++a)
    for (long m = 0; m <= B; ++m)
      if (!fx.matter_act(a, m, u).is_zero())
        throw NotInvariantError("centralizer_map_check: t_" + std::to_string(a + 1) +
                                    "[" + std::to_string(m) + "] u != 0",
                                a, m);
  return fx.q0(u).is_zero();
}

}  // namespace voaforge
