#include "voaforge/scalar.hpp"

namespace voaforge {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Scalar& s) {
  if (s.im == 0) return to_string(s.re);
  std::string imag = to_string(s.im) + "*i";
  if (s.re == 0) return imag;
  if (s.im > 0) return to_string(s.re) + "+" + imag;
  return to_string(s.re) + imag;  // sign carried by the numerator
}

Rational binomial(long m, long j) {
  Rational num(1), den(1);
  for (long t = 0; t < j; ++t) {
    num *= Rational(m - t);
    den *= Rational(t + 1);
  }
  return num / den;
}

}  // namespace voaforge
