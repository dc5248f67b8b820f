#include "voaforge/mode.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace voaforge {

CurrentSector CurrentSector::affine(const LieAlgebra& g,
                                    const BilinearForm& level) {
  CurrentSector s;
  s.t_dim = g.dim();
  s.om_dim = 0;
  s.bracket_t.assign(g.dim(), std::vector<std::vector<Scalar>>(
                                  g.dim(), std::vector<Scalar>(g.dim())));
  s.brace.assign(g.dim(), std::vector<Scalar>(g.dim()));
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b) {
      for (int c = 0; c < g.dim(); ++c)
        s.bracket_t[a][b][c] = Scalar(g.c(c, a, b));
      s.brace[a][b] = Scalar(level(a, b));
    }
  return s;
}

ModeEngine::ModeEngine(Config cfg) : cfg_(std::move(cfg)) {
  if (cfg_.cliff_half_dim > 0) {
    if (cfg_.cliff_dim != 2 * cfg_.cliff_half_dim)
      throw std::invalid_argument("spinor ground needs cliff_dim = 2 d'");
    ground_count_ = 1 << cfg_.cliff_half_dim;
    ground_weight_ = rat(cfg_.cliff_half_dim, 8);
  } else if (cfg_.cliff_dim > 0) {
    throw std::invalid_argument("Clifford generators require a spinor ground");
  }
}

int ModeEngine::ground_parity(int ground) const {
  return std::popcount((unsigned)ground) & 1;
}

bool ModeEngine::knows(GenId g) const {
  switch (g.fam) {
    case Family::WeylB:
    case Family::WeylA:
      return g.idx >= 0 && g.idx < cfg_.weyl_dim;
    case Family::BcPhi:
    case Family::BcDel:
      return g.idx >= 0 && g.idx < cfg_.bc_dim;
    case Family::CliffE:
      return g.idx >= 0 && g.idx < cfg_.cliff_dim;
    case Family::Current:
      return cfg_.current && g.idx >= 0 && g.idx < cfg_.current->t_dim;
    case Family::OmegaGen:
      return cfg_.current && g.idx >= 0 && g.idx < cfg_.current->om_dim;
  }
  return false;
}

int ModeEngine::parity(GenId g) const {
  switch (g.fam) {
    case Family::BcPhi:
    case Family::BcDel:
    case Family::CliffE:
      return 1;
    default:
      return 0;
  }
}

bool ModeEngine::is_creator(const Mode& m) const {
  switch (m.g.fam) {
    case Family::WeylB:
    case Family::BcPhi:
      return m.n <= 0;
    default:
      return m.n < 0;
  }
}

std::vector<ModeEngine::BracketTerm> ModeEngine::bracket(const Mode& x,
                                                         const Mode& y) const {
  std::vector<BracketTerm> out;
  const Family fx = x.g.fam, fy = y.g.fam;
  auto delta = [&](int i, int j, int n, int m) {
    return i == j && n + m == 0;
  };
  // Weyl: [a_{i,n}, b^j_m] = delta^j_i delta_{n,-m}
  if (fx == Family::WeylA && fy == Family::WeylB) {
    if (delta(x.g.idx, y.g.idx, x.n, y.n)) out.push_back({std::nullopt, Scalar(1)});
    return out;
  }
  if (fx == Family::WeylB && fy == Family::WeylA) {
    if (delta(x.g.idx, y.g.idx, x.n, y.n)) out.push_back({std::nullopt, Scalar(-1)});
    return out;
  }
  // bc: [del_{a,n}, phi^b_m]_+ = delta^b_a delta_{n,-m} (symmetric)
  if ((fx == Family::BcDel && fy == Family::BcPhi) ||
      (fx == Family::BcPhi && fy == Family::BcDel)) {
    if (delta(x.g.idx, y.g.idx, x.n, y.n)) out.push_back({std::nullopt, Scalar(1)});
    return out;
  }
  // Clifford: [e_{i,n}, e_{j,m}]_+ = -2 delta_{ij} delta_{n+m,0}
  if (fx == Family::CliffE && fy == Family::CliffE) {
    if (delta(x.g.idx, y.g.idx, x.n, y.n)) out.push_back({std::nullopt, Scalar(-2)});
    return out;
  }
  const auto& cur = cfg_.current;
  // [X_n, Y_m] = [X,Y]_{n+m} + ({X,Y}_Omega)_{n+m} + n {X,Y} delta_{n+m,0}
  if (fx == Family::Current && fy == Family::Current) {
    const int a = x.g.idx, b = y.g.idx, k = x.n + y.n;
    for (int c = 0; c < cur->t_dim; ++c)
      if (!cur->bracket_t[a][b][c].is_zero())
        out.push_back({Mode{{Family::Current, c}, k}, cur->bracket_t[a][b][c]});
    for (int w = 0; w < cur->om_dim; ++w)
      if (!cur->brace_om[a][b][w].is_zero())
        out.push_back({Mode{{Family::OmegaGen, w}, k}, cur->brace_om[a][b][w]});
    if (k == 0 && !cur->brace[a][b].is_zero())
      out.push_back({std::nullopt, Scalar(x.n) * cur->brace[a][b]});
    return out;
  }
  // [X_n, alpha_m] = (L_X alpha)_{n+m} + n alpha(X) delta_{n+m,0}
  if (fx == Family::Current && fy == Family::OmegaGen) {
    const int a = x.g.idx, w = y.g.idx, k = x.n + y.n;
    for (int w2 = 0; w2 < cur->om_dim; ++w2)
      if (!cur->lie_der[a][w][w2].is_zero())
        out.push_back({Mode{{Family::OmegaGen, w2}, k}, cur->lie_der[a][w][w2]});
    if (k == 0 && !cur->pairing[w][a].is_zero())
      out.push_back({std::nullopt, Scalar(x.n) * cur->pairing[w][a]});
    return out;
  }
  if (fx == Family::OmegaGen && fy == Family::Current) {
    auto rev = bracket(y, x);
    for (auto& t : rev) t.c = -t.c;
    return rev;
  }
  // Everything else supercommutes to zero across families.
  return out;
}

void ModeEngine::ground_apply(const Mode& m, int ground,
                              std::vector<std::pair<int, Scalar>>& out) const {
  if (m.g.fam == Family::CliffE && m.n == 0) {
    // e_{2k+1,0} = psi_k - psi*_k, e_{2k+2,0} = i (psi_k + psi*_k) on
    // Lambda(C^{d'}) realized as bitmasks.
    const int k = m.g.idx / 2;
    const bool even_partner = (m.g.idx % 2) != 0;
    const unsigned bit = 1u << k;
    const int below = std::popcount((unsigned)ground & (bit - 1));
    const Scalar sign = (below & 1) ? Scalar(-1) : Scalar(1);
    const Scalar unit = even_partner ? Scalar::i() : Scalar(1);
    if (ground & bit) {
      // contraction psi*_k
      Scalar c = unit * sign;
      if (!even_partner) c = -c;  // psi - psi* picks up the minus here
      out.emplace_back(ground & ~bit, c);
    } else {
      out.emplace_back(ground | bit, unit * sign);
    }
    return;
  }
  // All other annihilating modes kill every ground vector.
  (void)ground;
}

State ModeEngine::apply_mode(const Mode& x, const State& s) const {
  if (!knows(x.g)) throw UnknownGeneratorError("unregistered generator mode");
  State out;
  if (!cfg_.current) {
    for (const auto& [t, c] : s.terms)
      mul_term_free(x, t.mono.ms, t.ground, c, out);
  } else {
    for (const auto& [t, c] : s.terms)
      mul_term(x, t.mono.ms, 0, t.ground, c, out);
  }
  return out;
}

// Without a Current sector every bracket is a central scalar, so normal
// ordering reduces to a single left-to-right pass: x either contracts with a
// factor (dropping it), slots in at its ordered position, or falls through to
// the ground. Koszul signs accumulate only from the odd factors x moves past.
void ModeEngine::mul_term_free(const Mode& x, const std::vector<Mode>& mono,
                               int ground, const Scalar& c, State& out) const {
  if (c.is_zero()) return;
  const int px = parity(x.g);
  int sgn = 1;
  for (std::size_t pos = 0; pos < mono.size(); ++pos) {
    const Mode& y = mono[pos];
    const bool both_odd = px != 0 && parity(y.g) != 0;
    if (x < y || (x == y && !both_odd)) {
      std::vector<Mode> merged;
      merged.reserve(mono.size() + 1);
      merged.insert(merged.end(), mono.begin(), mono.begin() + pos);
      merged.push_back(x);
      merged.insert(merged.end(), mono.begin() + pos, mono.end());
      out.add(Term{{std::move(merged)}, ground}, sgn < 0 ? -c : c);
      return;
    }
    if (x == y) {
      // Both odd: x^2 = (1/2){x,x}, consuming the matching factor.
      for (const auto& bt : bracket(x, x)) {
        std::vector<Mode> merged;
        merged.reserve(mono.size() - 1);
        merged.insert(merged.end(), mono.begin(), mono.begin() + pos);
        merged.insert(merged.end(), mono.begin() + pos + 1, mono.end());
        Scalar coeff = c * bt.c / Scalar(2);
        out.add(Term{{std::move(merged)}, ground},
                sgn < 0 ? -coeff : coeff);
      }
      return;
    }
    // x > y: emit the contraction, then keep moving right.
    for (const auto& bt : bracket(x, y)) {
      std::vector<Mode> merged;
      merged.reserve(mono.size() - 1);
      merged.insert(merged.end(), mono.begin(), mono.begin() + pos);
      merged.insert(merged.end(), mono.begin() + pos + 1, mono.end());
      Scalar coeff = c * bt.c;
      out.add(Term{{std::move(merged)}, ground}, sgn < 0 ? -coeff : coeff);
    }
    if (both_odd) sgn = -sgn;
  }
  if (is_creator(x)) {
    std::vector<Mode> merged = mono;
    merged.push_back(x);
    out.add(Term{{std::move(merged)}, ground}, sgn < 0 ? -c : c);
  } else {
    std::vector<std::pair<int, Scalar>> gterms;
    ground_apply(x, ground, gterms);
    for (auto& [g2, c2] : gterms) {
      Scalar coeff = c * c2;
      out.add(Term{{mono}, g2}, sgn < 0 ? -coeff : coeff);
    }
  }
}

// Multiply x into the suffix mono[at..] applied to ground; callers guarantee
// mono[at..] is canonical. Results are accumulated into out with the (already
// canonical) prefix mono[0..at) reattached; the prefix is only reattached when
// it is still ordered against the produced head, otherwise the head is merged
// recursively.
void ModeEngine::mul_term(const Mode& x, std::vector<Mode> mono, std::size_t at,
                          int ground, const Scalar& c, State& out) const {
  if (c.is_zero()) return;
  if (at == mono.size()) {
    if (is_creator(x)) {
      mono.push_back(x);
      out.add(Term{{std::move(mono)}, ground}, c);
    } else {
      std::vector<std::pair<int, Scalar>> gterms;
      ground_apply(x, ground, gterms);
      for (auto& [g2, c2] : gterms) out.add(Term{{mono}, g2}, c * c2);
    }
    return;
  }
  const Mode y = mono[at];
  if (x < y) {
    // In place; x is necessarily a creator here.
    mono.insert(mono.begin() + at, x);
    out.add(Term{{std::move(mono)}, ground}, c);
    return;
  }
  const bool both_odd = parity(x.g) && parity(y.g);
  if (x == y) {
    if (!both_odd) {
      mono.insert(mono.begin() + at, x);
      out.add(Term{{std::move(mono)}, ground}, c);
      return;
    }
    // x^2 = (1/2)[x,x]_+ acting on the rest.
    std::vector<Mode> rest(mono.begin() + at + 1, mono.end());
    std::vector<Mode> prefix(mono.begin(), mono.begin() + at);
    for (const auto& bt : bracket(x, x)) {
      Scalar coeff = c * bt.c / Scalar(2);
      State sub;
      if (bt.mode) {
        mul_term(*bt.mode, rest, 0, ground, coeff, sub);
      } else {
        sub.add(Term{{rest}, ground}, coeff);
      }
      // Reattach prefix.
      for (const auto& [t2, c2] : sub.terms) {
        std::vector<Mode> merged = prefix;
        merged.insert(merged.end(), t2.mono.ms.begin(), t2.mono.ms.end());
        out.add(Term{{std::move(merged)}, t2.ground}, c2);
      }
    }
    return;
  }
  // x > y: move x to the right: x y = +/- y x + [x,y].
  const Scalar sign = both_odd ? Scalar(-1) : Scalar(1);
  {
    State sub;
    std::vector<Mode> tail(mono.begin() + at + 1, mono.end());
    mul_term(x, tail, 0, ground, sign * c, sub);
    std::vector<Mode> prefix(mono.begin(), mono.begin() + at + 1);  // incl. y
    for (const auto& [t2, c2] : sub.terms) {
      const bool in_place =
          t2.mono.ms.empty() || y < t2.mono.ms.front() ||
          (y == t2.mono.ms.front() && !parity(y.g));
      if (in_place) {
        std::vector<Mode> merged = prefix;
        merged.insert(merged.end(), t2.mono.ms.begin(), t2.mono.ms.end());
        out.add(Term{{std::move(merged)}, t2.ground}, c2);
      } else {
        // Rare: a bracket product dropped below y; merge y (then the rest of
        // the prefix) back in recursively.
        State tmp;
        mul_term(y, t2.mono.ms, 0, t2.ground, c2, tmp);
        for (const auto& [t3, c3] : tmp.terms) {
          std::vector<Mode> merged(mono.begin(), mono.begin() + at);
          if (!merged.empty() && !t3.mono.ms.empty() &&
              t3.mono.ms.front() < merged.back()) {
            // Deep cascade; fall back to full reapplication of the prefix.
            State acc = State::ket(t3, c3);
            for (std::size_t i = merged.size(); i-- > 0;)
              acc = apply_mode(merged[i], acc);
            out += acc;
          } else {
            merged.insert(merged.end(), t3.mono.ms.begin(), t3.mono.ms.end());
            out.add(Term{{std::move(merged)}, t3.ground}, c3);
          }
        }
      }
    }
  }
  {
    std::vector<Mode> rest(mono.begin() + at + 1, mono.end());
    std::vector<Mode> prefix(mono.begin(), mono.begin() + at);
    for (const auto& bt : bracket(x, y)) {
      State sub;
      if (bt.mode) {
        mul_term(*bt.mode, rest, 0, ground, c * bt.c, sub);
      } else {
        sub.add(Term{{rest}, ground}, c * bt.c);
      }
      for (const auto& [t2, c2] : sub.terms) {
        if (!prefix.empty() && !t2.mono.ms.empty() &&
            t2.mono.ms.front() < prefix.back()) {
          State acc = State::ket(t2, c2);
          for (std::size_t i = prefix.size(); i-- > 0;)
            acc = apply_mode(prefix[i], acc);
          out += acc;
        } else {
          std::vector<Mode> merged = prefix;
          merged.insert(merged.end(), t2.mono.ms.begin(), t2.mono.ms.end());
          out.add(Term{{std::move(merged)}, t2.ground}, c2);
        }
      }
    }
  }
}

State ModeEngine::apply_word(const std::vector<Mode>& word, const State& s) const {
  State cur = s;
  for (std::size_t i = word.size(); i-- > 0;) cur = apply_mode(word[i], cur);
  return cur;
}

State ModeEngine::apply_expr(const OperatorExpr& op, const State& s) const {
  State out;
  for (const auto& [word, coeff] : op.terms) {
    State t = apply_word(word, s);
    t *= coeff;
    out += t;
  }
  return out;
}

Rational ModeEngine::term_weight(const Term& t) const {
  Rational w = ground_weight_;
  for (const auto& m : t.mono.ms) w += Rational(-m.n);
  return w;
}

std::optional<Rational> ModeEngine::weight_of(const State& s) const {
  std::optional<Rational> w;
  for (const auto& [t, c] : s.terms) {
    Rational tw = term_weight(t);
    if (!w) {
      w = tw;
    } else if (*w != tw) {
      return std::nullopt;
    }
  }
  return w;
}

int ModeEngine::ghost_number(const Term& t) const {
  int g = 0;
  for (const auto& m : t.mono.ms) {
    if (m.g.fam == Family::BcPhi) ++g;
    if (m.g.fam == Family::BcDel) --g;
  }
  return g;
}

int ModeEngine::term_parity(const Term& t) const {
  int p = ground_parity(t.ground);
  for (const auto& m : t.mono.ms) p ^= parity(m.g);
  return p;
}

std::vector<Term> ModeEngine::basis(int w, int max_poly_deg) const {
  if (cfg_.weyl_dim > 0 && max_poly_deg < 0)
    throw std::logic_error("basis: polynomial engines need a degree cap");
  // Collect creator slots with weight <= w, canonically ordered.
  struct Slot {
    Mode m;
    int weight;   // -n
    bool odd;
    bool polydeg;  // counts against the b_0 budget
  };
  std::vector<Slot> slots;
  auto add_family = [&](Family f, int count, int nmax) {
    for (int n = -w; n <= nmax; ++n)
      for (int i = 0; i < count; ++i) {
        bool pd = (f == Family::WeylB && n == 0);
        slots.push_back({Mode{{f, i}, n}, -n,
                         parity(GenId{f, i}) == 1, pd});
      }
  };
  add_family(Family::WeylB, cfg_.weyl_dim, 0);
  add_family(Family::BcPhi, cfg_.bc_dim, 0);
  add_family(Family::CliffE, cfg_.cliff_dim, -1);
  add_family(Family::WeylA, cfg_.weyl_dim, -1);
  add_family(Family::BcDel, cfg_.bc_dim, -1);
  if (cfg_.current) {
    add_family(Family::Current, cfg_.current->t_dim, -1);
    add_family(Family::OmegaGen, cfg_.current->om_dim, -1);
  }
  std::sort(slots.begin(), slots.end(),
            [](const Slot& a, const Slot& b) { return a.m < b.m; });

  std::vector<Term> result;
  std::vector<Mode> mono;
  auto recurse = [&](auto&& self, std::size_t i, int rem, int deg) -> void {
    if (i == slots.size()) {
      if (rem == 0)
        for (int g = 0; g < ground_count_; ++g)
          result.push_back(Term{{mono}, g});
      return;
    }
    const Slot& s = slots[i];
    int maxrep = s.odd ? 1
                       : (s.weight == 0 ? (s.polydeg ? deg : 0)
                                         : rem / s.weight);
    if (s.weight == 0 && !s.polydeg && !s.odd) maxrep = 0;
    for (int r = 0; r <= maxrep; ++r) {
      if (r * s.weight > rem) break;
      if (s.polydeg && r > deg) break;
      for (int k = 0; k < r; ++k) mono.push_back(s.m);
      self(self, i + 1, rem - r * s.weight,
           deg - (s.polydeg ? r : 0));
      for (int k = 0; k < r; ++k) mono.pop_back();
    }
  };
  recurse(recurse, 0, w, max_poly_deg < 0 ? 0 : max_poly_deg);
  return result;
}

std::string ModeEngine::mode_symbol(const Mode& m) const {
  const char* sym = nullptr;
  switch (m.g.fam) {
    case Family::WeylB: sym = "b"; break;
    case Family::WeylA: sym = "a"; break;
    case Family::BcPhi: sym = "phi"; break;
    case Family::BcDel: sym = "del"; break;
    case Family::CliffE: sym = "e"; break;
    case Family::Current: sym = "J"; break;
    case Family::OmegaGen: sym = "w"; break;
  }
  std::ostringstream os;
  os << sym << "[" << (m.g.idx + 1) << "," << m.n << "]";
  return os.str();
}

std::string ModeEngine::term_key(const Term& t) const {
  std::ostringstream os;
  for (const auto& m : t.mono.ms) os << mode_symbol(m) << " ";
  if (cfg_.cliff_half_dim > 0)
    os << "|s:" << t.ground << ">";
  else
    os << "|0>";
  return os.str();
}

}  // namespace voaforge
