#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace voaforge {

/// Exact rational number, always in lowest terms with positive denominator.
/// Backed by GMP; every coefficient in the system goes through this type or
/// through Scalar below. No floating point anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parse "p/q" or "p" (arbitrary precision). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Serialize as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Element of Q(i). The imaginary part only arises in the spinor ground
/// module (the even Clifford zero modes square to -1); everywhere else the
/// imaginary part stays zero.
struct Scalar {
  Rational re, im;

  Scalar() : re(0), im(0) {}
  Scalar(int v) : re(v), im(0) {}
  Scalar(long v) : re(v), im(0) {}
  Scalar(const Rational& r) : re(r), im(0) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar(re, -im); }

  Scalar operator-() const { return Scalar(-re, -im); }
  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
    Rational n = b.re * b.re + b.im * b.im;
    return Scalar((a.re * b.re + a.im * b.im) / n,
                  (a.im * b.re - a.re * b.im) / n);
  }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order (for deterministic containers / pivoting only).
  friend bool operator<(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
  }
};

/// Serialize: real values as "p/q"; complex as "p/q+r/s*i" etc.
std::string to_string(const Scalar& s);

/// Binomial coefficient C(m, j) for arbitrary integer m and j >= 0.
Rational binomial(long m, long j);

}  // namespace voaforge
