#include "voaforge/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace voaforge {

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : coeffs)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Poly::add_term(const std::vector<int>& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != nvars)
    throw std::invalid_argument("Poly::add_term: exponent arity mismatch");
  auto it = coeffs.find(e);
  if (it == coeffs.end()) {
    if (!c.is_zero()) coeffs.emplace(e, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars);
  for (const auto& [e, c] : coeffs) r.coeffs.emplace(e, -c);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b.coeffs) r.add_term(e, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b.coeffs) r.add_term(e, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.nvars);
  for (const auto& [ea, ca] : a.coeffs)
    for (const auto& [eb, cb] : b.coeffs) {
      std::vector<int> e = ea;
      for (int i = 0; i < r.nvars; ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly operator*(const Scalar& k, const Poly& p) {
  Poly r(p.nvars);
  if (k.is_zero()) return r;
  for (const auto& [e, c] : p.coeffs) r.coeffs.emplace(e, k * c);
  return r;
}

Poly Poly::deriv(int i) const {
  Poly r(nvars);
  for (const auto& [e, c] : coeffs) {
    if (e[i] == 0) continue;
    std::vector<int> e2 = e;
    e2[i] -= 1;
    r.add_term(e2, Scalar(Rational(e[i])) * c);
  }
  return r;
}

std::string Poly::str(const std::string& varname) const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (int i = 0; i < nvars; ++i) {
      if (e[i] == 0) continue;
      os << "*" << varname << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace voaforge
