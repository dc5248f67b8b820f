#include "voaforge/voa.hpp"

#include <memory>

namespace voaforge {

namespace {

CurrentSector sector_from_algebroid(const VertexAlgebroid& v) {
  CurrentSector cs;
  cs.t_dim = v.t_dim;
  cs.om_dim = v.om_dim;
  int n = v.t_dim, m = v.om_dim;
  auto cval = [](const Poly& p) { return p.coeff(std::vector<int>{}); };
  cs.bracket_t.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
  cs.brace.assign(n, std::vector<Scalar>(n));
  cs.brace_om.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(m)));
  cs.lie_der.assign(n, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m)));
  cs.pairing.assign(m, std::vector<Scalar>(n));
  for (int a = 0; a < n; ++a) {
    TElem Xa(n, Poly(0));
    Xa[a] = v.unit();
    for (int b = 0; b < n; ++b) {
      TElem Xb(n, Poly(0));
      Xb[b] = v.unit();
      TElem br = v.bracket(Xa, Xb);
      for (int t = 0; t < n; ++t) cs.bracket_t[a][b][t] = cval(br[t]);
      cs.brace[a][b] = cval(v.brace(Xa, Xb));
      OmElem bo = v.brace_om(Xa, Xb);
      for (int w = 0; w < m; ++w) cs.brace_om[a][b][w] = cval(bo[w]);
    }
    for (int w = 0; w < m; ++w) {
      OmElem al(m, Poly(0));
      al[w] = v.unit();
      OmElem ld = v.lie_der(Xa, al);
      for (int w2 = 0; w2 < m; ++w2) cs.lie_der[a][w][w2] = cval(ld[w2]);
      cs.pairing[w][a] = cval(v.pairing(al, Xa));
    }
  }
  return cs;
}

}  // namespace

FreeVOA::FreeVOA(VertexAlgebroid v, int wmax) : v_(std::move(v)), wmax_(wmax) {
  ModeEngine::Config cfg;
  if (v_.nvars > 0) {
    cfg.weyl_dim = v_.nvars;
  } else {
    cfg.current = sector_from_algebroid(v_);
  }
  eng_ = std::make_unique<ModeEngine>(cfg);
}

Field FreeVOA::field_a(const Poly& f) const {
  if (weyl_backend()) return poly_field(*eng_, f);
  return fscale(f.coeff(std::vector<int>{}), vacuum_field());
}

Field FreeVOA::field_om(const OmElem& a) const {
  if (weyl_backend()) {
    Field total = fscale(
        Scalar(0), fderive(gen_field(*eng_, GenId{Family::WeylB, 0})));
    for (int i = 0; i < v_.om_dim; ++i)
      total = fadd(total, compose(*eng_, poly_field(*eng_, a[i]), -1,
                                  fderive(gen_field(*eng_, GenId{Family::WeylB, i}))));
    return total;
  }
  Field total = v_.om_dim > 0
                    ? fscale(Scalar(0), gen_field(*eng_, GenId{Family::OmegaGen, 0}))
                    : fscale(Scalar(0), fderive(vacuum_field()));
  for (int w = 0; w < v_.om_dim; ++w)
    total = fadd(total, fscale(a[w].coeff(std::vector<int>{}),
                               gen_field(*eng_, GenId{Family::OmegaGen, w})));
  return total;
}

Field FreeVOA::field_t(const TElem& X) const {
  if (weyl_backend()) {
    Field total =
        fscale(Scalar(0), gen_field(*eng_, GenId{Family::WeylA, 0}));
    for (int i = 0; i < v_.t_dim; ++i)
      total = fadd(total, compose(*eng_, gen_field(*eng_, GenId{Family::WeylA, i}),
                                  -1, poly_field(*eng_, X[i])));
    return total;
  }
  Field total = fscale(Scalar(0), gen_field(*eng_, GenId{Family::Current, 0}));
  for (int a = 0; a < v_.t_dim; ++a)
    total = fadd(total, fscale(X[a].coeff(std::vector<int>{}),
                               gen_field(*eng_, GenId{Family::Current, a})));
  return total;
}

State FreeVOA::state_a(const Poly& f) const {
  if (weyl_backend()) return poly_state(*eng_, f);
  return f.coeff(std::vector<int>{}) * eng_->vacuum();
}

State FreeVOA::state_om(const OmElem& a) const {
  return field_om(a).paren(-1, eng_->vacuum());
}

State FreeVOA::state_t(const TElem& X) const {
  return field_t(X).paren(-1, eng_->vacuum());
}

Poly FreeVOA::poly_of(const State& s) const {
  Poly r(v_.nvars);
  for (const auto& [t, c] : s.terms) {
    if (t.ground != 0) throw std::invalid_argument("poly_of: nontrivial ground");
    std::vector<int> e(v_.nvars, 0);
    for (const Mode& m : t.mono.ms) {
      if (m.g.fam != Family::WeylB || m.n != 0)
        throw std::invalid_argument("poly_of: state is not weight zero");
      e[m.g.idx] += 1;
    }
    r.add_term(e, c);
  }
  return r;
}

void FreeVOA::split_weight_one(const State& s, TElem& t_part,
                               OmElem& om_part) const {
  t_part = v_.zero_t();
  om_part = v_.zero_om();
  for (const auto& [t, c] : s.terms) {
    if (t.ground != 0)
      throw std::invalid_argument("split_weight_one: nontrivial ground");
    std::vector<int> e(v_.nvars, 0);
    int depth_fam = -1, depth_idx = -1;
    for (const Mode& m : t.mono.ms) {
      if (m.g.fam == Family::WeylB && m.n == 0) {
        e[m.g.idx] += 1;
      } else if (m.n == -1 && depth_fam < 0 &&
                 (m.g.fam == Family::WeylA || m.g.fam == Family::WeylB ||
                  m.g.fam == Family::Current || m.g.fam == Family::OmegaGen)) {
        depth_fam = static_cast<int>(m.g.fam);
        depth_idx = m.g.idx;
      } else {
        throw std::invalid_argument("split_weight_one: not a weight-one ket");
      }
    }
    if (depth_fam < 0)
      throw std::invalid_argument("split_weight_one: not a weight-one ket");
    Poly mono = Poly::monomial(v_.nvars, e, c);
    if (depth_fam == static_cast<int>(Family::WeylA) ||
        depth_fam == static_cast<int>(Family::Current))
      t_part[depth_idx] += mono;
    else
      om_part[depth_idx] += mono;
  }
}

std::vector<Term> FreeVOA::layer(int w) const {
  std::vector<Term> raw = eng_->basis(w, weyl_backend() ? v_.deg_cap : -1);
  if (!weyl_backend()) return raw;
  std::vector<Term> out;
  for (const Term& t : raw) {
    int bdeg = 0;
    for (const Mode& m : t.mono.ms)
      if (m.g.fam == Family::WeylB) ++bdeg;
    if (bdeg <= v_.deg_cap) out.push_back(t);
  }
  return out;
}

Splitting canonical_splitting(const FreeVOA& V) {
  return [&V](const TElem& X) { return V.field_t(X); };
}

Splitting shifted_splitting(const FreeVOA& V,
                            const std::function<OmElem(const TElem&)>& Delta) {
  return [&V, Delta](const TElem& X) {
    return fadd(V.field_t(X), V.field_om(Delta(X)));
  };
}

VertexAlgebroid extract_algebroid(const FreeVOA& V, const Splitting& s) {
  const VertexAlgebroid& v = V.algebroid();
  // splitting validity: the T-component of s(X) must reproduce X.
  for (const auto& X : v.t_basis) {
    State sx = s(X).paren(-1, V.engine().vacuum());
    TElem tp;
    OmElem op;
    try {
      V.split_weight_one(sx, tp, op);
    } catch (const std::invalid_argument& e) {
      throw SplittingInvalidError(std::string("splitting image is not in V_1: ") +
                                  e.what());
    }
    bool ok = true;
    for (int i = 0; i < v.t_dim; ++i)
      if (!(tp[i] == X[i])) ok = false;
    if (!ok)
      throw SplittingInvalidError("splitting followed by the quotient is not "
                                  "the identity at X=" + v.str_t(X));
  }

  VertexAlgebroid r = v;  // module structure, d, bases are carried over

  r.act = [&V, s](const TElem& X, const Poly& f) {
    return V.poly_of(s(X).shift(0, V.state_a(f)));
  };
  r.dot = [&V, s, v](const TElem& X, const Poly& f) {
    State st = s(X).shift(-1, V.state_a(f));
    st -= s(v.mult_t(f, X)).paren(-1, V.engine().vacuum());
    TElem tp;
    OmElem op;
    V.split_weight_one(st, tp, op);
    return op;
  };
  r.bracket = [&V, s](const TElem& X, const TElem& Y) {
    State st = s(X).shift(0, s(Y).paren(-1, V.engine().vacuum()));
    TElem tp;
    OmElem op;
    V.split_weight_one(st, tp, op);
    return tp;
  };
  r.brace = [&V, s](const TElem& X, const TElem& Y) {
    return V.poly_of(s(X).shift(1, s(Y).paren(-1, V.engine().vacuum())));
  };
  r.brace_om = [&V, s](const TElem& X, const TElem& Y) {
    State st = s(X).shift(0, s(Y).paren(-1, V.engine().vacuum()));
    TElem tp;
    OmElem op;
    V.split_weight_one(st, tp, op);
    // subtract s([X,Y]): its Omega-component relative to the splitting
    State corr = s(tp).paren(-1, V.engine().vacuum());
    TElem tp2;
    OmElem op2;
    V.split_weight_one(corr, tp2, op2);
    OmElem out = op;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= op2[i];
    return out;
  };
  r.lie_der = [&V, s](const TElem& X, const OmElem& a) {
    State st = s(X).shift(0, V.state_om(a));
    TElem tp;
    OmElem op;
    V.split_weight_one(st, tp, op);
    for (const auto& p : tp)
      if (!p.is_zero())
        throw std::invalid_argument("lie_der image leaves Omega");
    return op;
  };
  r.pairing = [&V, s](const OmElem& a, const TElem& X) {
    return V.poly_of(V.field_om(a).shift(1, s(X).paren(-1, V.engine().vacuum())));
  };
  return r;
}

OneFormReport one_form_zero_mode_check(const FreeVOA& V, const OmElem& alpha,
                                       const TElem& X) {
  const VertexAlgebroid& v = V.algebroid();
  if (!V.weyl_backend())
    throw std::invalid_argument("one_form_zero_mode_check: needs a D^ch(A^d) engine");
  int need = 0;
  for (const auto& p : alpha) need = std::max(need, std::max(0, p.degree()));
  int nx = 0;
  for (const auto& p : X) nx = std::max(nx, std::max(0, p.degree()));
  if (need + nx > v.deg_cap)
    throw TruncationInconclusiveError(
        "one_form_zero_mode_check: degrees exceed the truncation cap");

  OneFormReport rep;
  const int d = v.nvars;
  // -i_X d(alpha) = sum_i [ -sum_j X^j (d_j alpha_i - d_i alpha_j) ] db^i
  OmElem expect = v.zero_om();
  bool closed = true;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Poly two_form = alpha[i].deriv(j) - alpha[j].deriv(i);
      if (!two_form.is_zero()) closed = false;
      expect[i] -= X[j] * two_form;
    }
  rep.closed = closed;

  State lhs = V.field_om(alpha).shift(0, V.state_t(X));
  State rhs = V.state_om(expect);
  if (!(lhs == rhs)) {
    rep.zero_mode_on_t_ok = false;
    rep.witness = "alpha_0 s(X) != -i_X d(alpha): defect " +
                  describe_state(V.engine(), lhs - rhs);
  }

  // alpha_0 annihilates the sampled PBW states iff d(alpha) = 0.
  Field af = V.field_om(alpha);
  bool kills_all = true;
  for (int w = 0; w <= 2 && kills_all; ++w)
    for (const Term& t : V.layer(w)) {
      if (!af.shift(0, State::ket(t)).is_zero()) {
        kills_all = false;
        break;
      }
    }
  if (kills_all != closed) {
    rep.annihilation_matches = false;
    rep.witness += std::string(rep.witness.empty() ? "" : "; ") +
                   "alpha_0 annihilation does not match closedness";
  }
  rep.pass = rep.zero_mode_on_t_ok && rep.annihilation_matches;
  return rep;
}

}  // namespace voaforge
