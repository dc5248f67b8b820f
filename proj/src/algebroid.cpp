#include "voaforge/algebroid.hpp"

#include <sstream>

namespace voaforge {

namespace {

OmElem om_add(OmElem a, const OmElem& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
OmElem om_sub(OmElem a, const OmElem& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
TElem t_add(TElem a, const TElem& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
TElem t_sub(TElem a, const TElem& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
bool vec_zero(const std::vector<Poly>& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}
int deg_p(const Poly& p) { return std::max(0, p.degree()); }
int deg_vec(const std::vector<Poly>& v) {
  int d = 0;
  for (const auto& p : v) d = std::max(d, deg_p(p));
  return d;
}

/// All exponent vectors with total degree <= cap in nv variables.
void monomials_upto(int nv, int cap, std::vector<std::vector<int>>& out) {
  std::vector<int> e(nv, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nv) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, cap);
}

}  // namespace

Poly VertexAlgebroid::trunc(const Poly& p) const {
  if (deg_cap < 0) return p;
  Poly r(p.nvars);
  for (const auto& [e, c] : p.coeffs) {
    int deg = 0;
    for (int k : e) deg += k;
    if (deg <= deg_cap) r.coeffs.emplace(e, c);
  }
  return r;
}

TElem VertexAlgebroid::mult_t(const Poly& f, const TElem& X) const {
  TElem r = zero_t();
  for (int i = 0; i < t_dim; ++i) r[i] = trunc(f * X[i]);
  return r;
}

OmElem VertexAlgebroid::mult_om(const Poly& f, const OmElem& a) const {
  OmElem r = zero_om();
  for (int i = 0; i < om_dim; ++i) r[i] = trunc(f * a[i]);
  return r;
}

std::string VertexAlgebroid::str_t(const TElem& X) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < t_dim; ++i) {
    if (X[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "[" << X[i].str() << "]*X" << (i + 1);
  }
  return first ? "0" : os.str();
}

std::string VertexAlgebroid::str_om(const OmElem& a) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < om_dim; ++i) {
    if (a[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "[" << a[i].str() << "]*w" << (i + 1);
  }
  return first ? "0" : os.str();
}

VertexAlgebroid cdo_algebroid(int d, int D) {
  if (d < 1 || D < 1) throw std::invalid_argument("cdo_algebroid: need d, D >= 1");
  VertexAlgebroid v;
  v.nvars = d;
  v.deg_cap = D;
  v.t_dim = d;
  v.om_dim = d;

  int cap = D;

  auto trunc = [d, cap](const Poly& p) {
    Poly r(p.nvars);
    for (const auto& [e, c] : p.coeffs) {
      int deg = 0;
      for (int k : e) deg += k;
      if (deg <= cap) r.coeffs.emplace(e, c);
    }
    return r;
  };

  v.act = [d, trunc](const TElem& X, const Poly& f) {
    Poly r(d);
    for (int i = 0; i < d; ++i) r += X[i] * f.deriv(i);
    return trunc(r);
  };
  v.bracket = [d, trunc](const TElem& X, const TElem& Y) {
    TElem r(d, Poly(d));
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i)
        r[j] += X[i] * Y[j].deriv(i) - Y[i] * X[j].deriv(i);
      r[j] = trunc(r[j]);
    }
    return r;
  };
  v.lie_der = [d, trunc](const TElem& X, const OmElem& a) {
    OmElem r(d, Poly(d));
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i)
        r[j] += X[i] * a[j].deriv(i) + a[i] * X[i].deriv(j);
      r[j] = trunc(r[j]);
    }
    return r;
  };
  v.pairing = [d, trunc](const OmElem& a, const TElem& X) {
    Poly r(d);
    for (int i = 0; i < d; ++i) r += a[i] * X[i];
    return trunc(r);
  };
  v.d = [d](const Poly& f) {
    OmElem r(d, Poly(d));
    for (int i = 0; i < d; ++i) r[i] = f.deriv(i);
    return r;
  };
  v.dot = [d, trunc](const TElem& X, const Poly& f) {
    OmElem r(d, Poly(d));
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) r[j] += X[i].deriv(j) * f.deriv(i);
      r[j] = trunc(r[j]);
    }
    return r;
  };
  v.brace = [d, trunc](const TElem& X, const TElem& Y) {
    Poly r(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) r -= X[i].deriv(j) * Y[j].deriv(i);
    return trunc(r);
  };
  v.brace_om = [d, trunc](const TElem& X, const TElem& Y) {
    OmElem r(d, Poly(d));
    for (int k = 0; k < d; ++k) {
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          r[k] -= X[i].deriv(j).deriv(k) * Y[j].deriv(i);
      r[k] = trunc(r[k]);
    }
    return r;
  };

  std::vector<std::vector<int>> exps;
  monomials_upto(d, D, exps);
  for (const auto& e : exps) v.a_basis.push_back(Poly::monomial(d, e));
  for (const auto& e : exps)
    for (int i = 0; i < d; ++i) {
      TElem X = v.zero_t();
      X[i] = Poly::monomial(d, e);
      v.t_basis.push_back(X);
      v.om_basis.push_back(X);  // same coordinate shape for Omega
    }
  return v;
}

VertexAlgebroid lie_algebroid(const LieAlgebra& g, const BilinearForm& lambda) {
  if (!is_symmetric(lambda))
    throw InvalidFormError("lie_algebroid: form is not symmetric");
  if (auto w = invariance_violation(g, lambda))
    throw InvalidFormError("lie_algebroid: form not invariant at basis triple (" +
                           std::to_string(w->x + 1) + "," + std::to_string(w->y + 1) +
                           "," + std::to_string(w->z + 1) + ")");
  VertexAlgebroid v;
  v.nvars = 0;
  v.deg_cap = -1;
  v.t_dim = g.dim();
  v.om_dim = 0;
  const int n = g.dim();

  v.act = [](const TElem&, const Poly&) { return Poly(0); };
  v.bracket = [g, n](const TElem& X, const TElem& Y) {
    TElem r(n, Poly(0));
    for (int t = 0; t < n; ++t)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          r[t] += Scalar(g.c(t, a, b)) * (X[a] * Y[b]);
    return r;
  };
  v.lie_der = [](const TElem&, const OmElem&) { return OmElem{}; };
  v.pairing = [](const OmElem&, const TElem&) { return Poly(0); };
  v.d = [](const Poly&) { return OmElem{}; };
  v.dot = [](const TElem&, const Poly&) { return OmElem{}; };
  v.brace = [lambda, n](const TElem& X, const TElem& Y) {
    Poly r(0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) r += Scalar(lambda(a, b)) * (X[a] * Y[b]);
    return r;
  };
  v.brace_om = [](const TElem&, const TElem&) { return OmElem{}; };

  v.a_basis.push_back(v.unit());
  for (int a = 0; a < n; ++a) {
    TElem X = v.zero_t();
    X[a] = v.unit();
    v.t_basis.push_back(X);
  }
  return v;
}

VertexAlgebroid central_extension_algebroid(
    const LieAlgebra& g, const BilinearForm& lambda,
    const std::vector<std::vector<std::vector<Scalar>>>& omega) {
  if (!g.is_abelian())
    throw std::invalid_argument("central_extension_algebroid: g must be abelian");
  VertexAlgebroid v = lie_algebroid(g, lambda);
  const int n = g.dim();
  const int m = omega.empty() ? 0 : static_cast<int>(omega[0][0].size());
  v.om_dim = m;
  v.lie_der = [m](const TElem&, const OmElem&) { return OmElem(m, Poly(0)); };
  v.pairing = [](const OmElem&, const TElem&) { return Poly(0); };
  v.d = [m](const Poly&) { return OmElem(m, Poly(0)); };
  v.dot = [m](const TElem&, const Poly&) { return OmElem(m, Poly(0)); };
  v.brace_om = [omega, n, m](const TElem& X, const TElem& Y) {
    OmElem r(m, Poly(0));
    for (int w = 0; w < m; ++w)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) r[w] += omega[a][b][w] * (X[a] * Y[b]);
    return r;
  };
  for (int w = 0; w < m; ++w) {
    OmElem al(m, Poly(0));
    al[w] = v.unit();
    v.om_basis.push_back(al);
  }
  return v;
}

VertexAlgebroid delta_twist(const VertexAlgebroid& v,
                            const std::function<OmElem(const TElem&)>& Delta,
                            int delta_degree_growth) {
  VertexAlgebroid w = v;
  w.deg_growth = v.deg_growth + delta_degree_growth;
  w.dot = [v, Delta](const TElem& X, const Poly& f) {
    return om_sub(om_add(v.dot(X, f), Delta(v.mult_t(f, X))),
                  v.mult_om(f, Delta(X)));
  };
  w.brace = [v, Delta](const TElem& X, const TElem& Y) {
    return v.brace(X, Y) - v.pairing(Delta(X), Y) - v.pairing(Delta(Y), X);
  };
  w.brace_om = [v, Delta](const TElem& X, const TElem& Y) {
    OmElem r = v.brace_om(X, Y);
    r = om_sub(r, v.lie_der(X, Delta(Y)));
    r = om_add(r, v.lie_der(Y, Delta(X)));
    r = om_sub(r, v.d(v.pairing(Delta(X), Y)));
    r = om_add(r, Delta(v.bracket(X, Y)));
    return r;
  };
  return w;
}

std::optional<std::string> morphism_check(
    const VertexAlgebroid& src, const VertexAlgebroid& dst,
    const std::function<OmElem(const TElem&)>& Delta) {
  for (const auto& X : src.t_basis) {
    for (const auto& f : src.a_basis) {
      OmElem lhs = om_sub(dst.dot(X, f), src.dot(X, f));
      OmElem rhs = om_sub(Delta(src.mult_t(f, X)), src.mult_om(f, Delta(X)));
      if (!vec_zero(om_sub(lhs, rhs)))
        return "bullet morphism identity fails at X=" + src.str_t(X) +
               ", f=" + f.str();
    }
    for (const auto& Y : src.t_basis) {
      Poly lhs = dst.brace(X, Y) - src.brace(X, Y);
      Poly rhs = -dst.pairing(Delta(X), Y) - dst.pairing(Delta(Y), X);
      if (!(lhs == rhs))
        return "brace morphism identity fails at X=" + src.str_t(X) +
               ", Y=" + src.str_t(Y);
      OmElem lo = om_sub(dst.brace_om(X, Y), src.brace_om(X, Y));
      OmElem ro = om_add(
          om_sub(dst.lie_der(Y, Delta(X)), dst.lie_der(X, Delta(Y))),
          om_sub(Delta(src.bracket(X, Y)),
                 dst.d(dst.pairing(Delta(X), Y))));
      if (!vec_zero(om_sub(lo, ro)))
        return "brace_om morphism identity fails at X=" + src.str_t(X) +
               ", Y=" + src.str_t(Y);
    }
  }
  return std::nullopt;
}

namespace {

struct Sweep {
  const VertexAlgebroid& v;
  AxiomReport rep;

  bool conclusive(int need) {
    if (v.deg_cap >= 0 && need + v.deg_growth > v.deg_cap) {
      ++rep.inconclusive;
      return false;
    }
    ++rep.conclusive;
    return true;
  }
  void fail(int id, std::string w) {
    if (!rep.pass) return;
    rep.pass = false;
    rep.identity = id;
    rep.witness = std::move(w);
  }
};

}  // namespace

AxiomReport algebroid_axiom_check(const VertexAlgebroid& v) {
  Sweep s{v, {}};
  auto& rep = s.rep;

  // ---- extended Lie algebroid layer (identity index 0) ----
  for (const auto& f : v.a_basis) {
    for (const auto& g : v.a_basis) {
      if (s.conclusive(deg_p(f) + deg_p(g))) {
        OmElem lhs = v.d(v.trunc(f * g));
        OmElem rhs = om_add(v.mult_om(f, v.d(g)), v.mult_om(g, v.d(f)));
        if (!vec_zero(om_sub(lhs, rhs)))
          s.fail(0, "d is not a derivation at f=" + f.str() + ", g=" + g.str());
      }
    }
    for (const auto& X : v.t_basis) {
      if (s.conclusive(deg_p(f) + deg_vec(X))) {
        // df(X) = Xf, and d commutes with the T-action on A.
        if (!(v.pairing(v.d(f), X) == v.act(X, f)))
          s.fail(0, "df(X) != Xf at f=" + f.str() + ", X=" + v.str_t(X));
        if (!vec_zero(om_sub(v.d(v.act(X, f)), v.lie_der(X, v.d(f)))))
          s.fail(0, "d(Xf) != L_X df at f=" + f.str() + ", X=" + v.str_t(X));
      }
      for (const auto& g : v.a_basis) {
        if (!s.conclusive(deg_p(f) + deg_p(g) + deg_vec(X))) continue;
        // Leibniz for the action on A and A-linearity in X.
        Poly lhs = v.act(X, v.trunc(f * g));
        Poly rhs = v.trunc(v.act(X, f) * g) + v.trunc(f * v.act(X, g));
        if (!(lhs == rhs))
          s.fail(0, "Leibniz fails for X(fg) at f=" + f.str() + ", g=" + g.str() +
                        ", X=" + v.str_t(X));
        if (!(v.act(v.mult_t(f, X), g) == v.trunc(f * v.act(X, g))))
          s.fail(0, "(fX)g != f(Xg) at f=" + f.str() + ", g=" + g.str() +
                        ", X=" + v.str_t(X));
      }
      for (const auto& al : v.om_basis) {
        if (!s.conclusive(deg_p(f) + deg_vec(al) + deg_vec(X))) continue;
        OmElem lhs = v.lie_der(X, v.mult_om(f, al));
        OmElem rhs = om_add(v.mult_om(v.act(X, f), al),
                            v.mult_om(f, v.lie_der(X, al)));
        if (!vec_zero(om_sub(lhs, rhs)))
          s.fail(0, "Leibniz fails for L_X(f a) at f=" + f.str() +
                        ", X=" + v.str_t(X));
        if (!(v.pairing(v.mult_om(f, al), X) == v.trunc(f * v.pairing(al, X))) ||
            !(v.pairing(al, v.mult_t(f, X)) == v.trunc(f * v.pairing(al, X))))
          s.fail(0, "pairing is not A-bilinear at f=" + f.str());
      }
      for (const auto& Y : v.t_basis) {
        if (!s.conclusive(deg_p(f) + deg_vec(X) + deg_vec(Y))) continue;
        TElem lhs = v.bracket(X, v.mult_t(f, Y));
        TElem rhs = t_add(v.mult_t(f, v.bracket(X, Y)),
                          v.mult_t(v.act(X, f), Y));
        if (!vec_zero(t_sub(lhs, rhs)))
          s.fail(0, "Leibniz fails for [X, fY] at f=" + f.str() +
                        ", X=" + v.str_t(X) + ", Y=" + v.str_t(Y));
      }
    }
  }
  for (const auto& X : v.t_basis)
    for (const auto& Y : v.t_basis) {
      if (s.conclusive(deg_vec(X) + deg_vec(Y))) {
        if (!vec_zero(t_add(v.bracket(X, Y), v.bracket(Y, X))))
          s.fail(0, "bracket not antisymmetric at X=" + v.str_t(X) +
                        ", Y=" + v.str_t(Y));
      }
      for (const auto& Z : v.t_basis) {
        if (!s.conclusive(deg_vec(X) + deg_vec(Y) + deg_vec(Z))) continue;
        TElem jac = t_sub(v.bracket(X, v.bracket(Y, Z)),
                          t_add(v.bracket(v.bracket(X, Y), Z),
                                v.bracket(Y, v.bracket(X, Z))));
        if (!vec_zero(jac))
          s.fail(0, "Jacobi fails at X=" + v.str_t(X) + ", Y=" + v.str_t(Y) +
                        ", Z=" + v.str_t(Z));
      }
      // T -> End A and T -> End Omega are maps of Lie algebras.
      for (const auto& f : v.a_basis) {
        if (!s.conclusive(deg_vec(X) + deg_vec(Y) + deg_p(f))) continue;
        Poly lhs = v.act(v.bracket(X, Y), f);
        Poly rhs = v.act(X, v.act(Y, f)) - v.act(Y, v.act(X, f));
        if (!(lhs == rhs))
          s.fail(0, "T -> End A is not a Lie map at X=" + v.str_t(X) +
                        ", Y=" + v.str_t(Y) + ", f=" + f.str());
      }
      for (const auto& al : v.om_basis) {
        if (!s.conclusive(deg_vec(X) + deg_vec(Y) + deg_vec(al))) continue;
        OmElem lhs = v.lie_der(v.bracket(X, Y), al);
        OmElem rhs = om_sub(v.lie_der(X, v.lie_der(Y, al)),
                            v.lie_der(Y, v.lie_der(X, al)));
        if (!vec_zero(om_sub(lhs, rhs)))
          s.fail(0, "T -> End Omega is not a Lie map at X=" + v.str_t(X) +
                        ", Y=" + v.str_t(Y));
      }
    }

  // ---- the seven vertex algebroid identities ----
  for (const auto& X : v.t_basis)
    for (const auto& Y : v.t_basis) {
      if (s.conclusive(deg_vec(X) + deg_vec(Y))) {
        if (!(v.brace(X, Y) == v.brace(Y, X)))
          s.fail(1, "{X,Y} != {Y,X} at X=" + v.str_t(X) + ", Y=" + v.str_t(Y));
        OmElem lhs = v.d(v.brace(X, Y));
        OmElem rhs = om_add(v.brace_om(X, Y), v.brace_om(Y, X));
        if (!vec_zero(om_sub(lhs, rhs)))
          s.fail(2, "d{X,Y} != {X,Y}_Om + {Y,X}_Om at X=" + v.str_t(X) +
                        ", Y=" + v.str_t(Y));
      }
    }
  for (const auto& X : v.t_basis)
    for (const auto& f : v.a_basis)
      for (const auto& g : v.a_basis) {
        if (!s.conclusive(deg_vec(X) + deg_p(f) + deg_p(g))) continue;
        OmElem lhs = om_sub(v.dot(X, v.trunc(f * g)),
                            om_add(v.dot(v.mult_t(g, X), f),
                                   v.mult_om(f, v.dot(X, g))));
        OmElem rhs = om_sub(v.zero_om(), v.mult_om(v.act(X, f), v.d(g)));
        if (!vec_zero(om_sub(lhs, rhs)))
          s.fail(3, "identity 3 fails at X=" + v.str_t(X) + ", f=" + f.str() +
                        ", g=" + g.str());
      }
  for (const auto& X : v.t_basis)
    for (const auto& Y : v.t_basis)
      for (const auto& f : v.a_basis) {
        if (!s.conclusive(deg_vec(X) + deg_vec(Y) + deg_p(f))) continue;
        Poly lhs4 = v.brace(X, v.mult_t(f, Y)) - v.trunc(f * v.brace(X, Y));
        Poly rhs4 = v.act(v.bracket(X, Y), f) - v.pairing(v.dot(Y, f), X);
        if (!(lhs4 == rhs4))
          s.fail(4, "identity 4 fails at X=" + v.str_t(X) + ", Y=" + v.str_t(Y) +
                        ", f=" + f.str());
        OmElem lhs5 = om_sub(v.brace_om(X, v.mult_t(f, Y)),
                             v.mult_om(f, v.brace_om(X, Y)));
        OmElem rhs5 = om_add(om_sub(v.dot(v.bracket(X, Y), f),
                                    v.lie_der(X, v.dot(Y, f))),
                             v.dot(Y, v.act(X, f)));
        if (!vec_zero(om_sub(lhs5, rhs5)))
          s.fail(5, "identity 5 fails at X=" + v.str_t(X) + ", Y=" + v.str_t(Y) +
                        ", f=" + f.str());
      }
  for (const auto& X : v.t_basis)
    for (const auto& Y : v.t_basis)
      for (const auto& Z : v.t_basis) {
        if (!s.conclusive(deg_vec(X) + deg_vec(Y) + deg_vec(Z))) continue;
        Poly lhs6 = v.act(X, v.brace(Y, Z)) - v.brace(v.bracket(X, Y), Z) -
                    v.brace(Y, v.bracket(X, Z));
        Poly rhs6 = v.pairing(v.brace_om(X, Y), Z) + v.pairing(v.brace_om(X, Z), Y);
        if (!(lhs6 == rhs6))
          s.fail(6, "identity 6 fails at X=" + v.str_t(X) + ", Y=" + v.str_t(Y) +
                        ", Z=" + v.str_t(Z));
        OmElem lhs7 = v.lie_der(X, v.brace_om(Y, Z));
        lhs7 = om_sub(lhs7, v.lie_der(Y, v.brace_om(X, Z)));
        lhs7 = om_add(lhs7, v.lie_der(Z, v.brace_om(X, Y)));
        lhs7 = om_add(lhs7, v.brace_om(X, v.bracket(Y, Z)));
        lhs7 = om_sub(lhs7, v.brace_om(Y, v.bracket(X, Z)));
        lhs7 = om_sub(lhs7, v.brace_om(v.bracket(X, Y), Z));
        OmElem rhs7 = v.d(v.pairing(v.brace_om(X, Y), Z));
        if (!vec_zero(om_sub(lhs7, rhs7)))
          s.fail(7, "identity 7 fails at X=" + v.str_t(X) + ", Y=" + v.str_t(Y) +
                        ", Z=" + v.str_t(Z));
      }
  return rep;
}

}  // namespace voaforge
