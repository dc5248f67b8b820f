#pragma once

#include <map>
#include <string>
#include <vector>

#include "voaforge/scalar.hpp"

namespace voaforge {

/// Multivariate polynomial over Q(i), exponent-vector keyed. The zero
/// polynomial stores no terms. nvars = 0 models the constants C.
struct Poly {
  int nvars = 0;
  std::map<std::vector<int>, Scalar> coeffs;

  Poly() = default;
  explicit Poly(int nv) : nvars(nv) {}

  static Poly constant(int nv, const Scalar& c) {
    Poly p(nv);
    if (!c.is_zero()) p.coeffs.emplace(std::vector<int>(nv, 0), c);
    return p;
  }
  static Poly var(int nv, int i) {
    Poly p(nv);
    std::vector<int> e(nv, 0);
    e[i] = 1;
    p.coeffs.emplace(std::move(e), Scalar(1));
    return p;
  }
  static Poly monomial(int nv, std::vector<int> exps,
                       const Scalar& c = Scalar(1)) {
    Poly p(nv);
    if (!c.is_zero()) p.coeffs.emplace(std::move(exps), c);
    return p;
  }

  bool is_zero() const { return coeffs.empty(); }
  /// Maximal total degree; -1 for the zero polynomial.
  int degree() const;
  Scalar coeff(const std::vector<int>& e) const {
    auto it = coeffs.find(e);
    return it == coeffs.end() ? Scalar() : it->second;
  }

  void add_term(const std::vector<int>& e, const Scalar& c);

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& k, const Poly& p);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly deriv(int i) const;

  std::string str(const std::string& varname = "b") const;
};

}  // namespace voaforge
