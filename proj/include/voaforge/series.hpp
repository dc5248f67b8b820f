#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace voaforge {

/// Truncated formal power series in q with integer coefficients,
/// coeffs[k] = coefficient of q^k. All operations truncate at the shorter
/// length. Used as counting oracles for graded dimensions.
struct QSeries {
  std::vector<std::int64_t> c;

  explicit QSeries(std::size_t len, std::int64_t c0 = 0)
      : c(len, 0) {
    if (len > 0) c[0] = c0;
  }
  static QSeries one(std::size_t len) { return QSeries(len, 1); }

  std::size_t size() const { return c.size(); }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    std::size_t n = std::min(a.size(), b.size());
    QSeries r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
  }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  /// Multiply by (1 + s*q^n)^m for m >= 0 (s = +1 or -1).
  void mul_binomial_power(int n, int s, int m) {
    QSeries f(size());
    f.c[0] = 1;
    if (static_cast<std::size_t>(n) < size()) f.c[n] = s;
    for (int k = 0; k < m; ++k) *this *= f;
  }

  /// Multiply by 1/(1 - q^n)^m, i.e. by (sum_j q^{jn})^m.
  void mul_inverse_power(int n, int m) {
    if (n <= 0) throw std::invalid_argument("QSeries: need n > 0");
    for (int k = 0; k < m; ++k) {
      // in-place multiply by geometric series in q^n
      for (std::size_t i = n; i < size(); ++i) c[i] += c[i - n];
    }
  }
};

/// prod_{n=1}^{N} 1/(1-q^n)^m, the character of m free bosonic towers.
inline QSeries bosonic_tower(std::size_t len, int m) {
  QSeries r = QSeries::one(len);
  for (std::size_t n = 1; n < len; ++n) r.mul_inverse_power(static_cast<int>(n), m);
  return r;
}

/// prod_{n=1}^{N} (1+q^n)^m, the character of m free fermionic towers
/// (modes at strictly positive depth).
inline QSeries fermionic_tower(std::size_t len, int m) {
  QSeries r = QSeries::one(len);
  for (std::size_t n = 1; n < len; ++n) r.mul_binomial_power(static_cast<int>(n), 1, m);
  return r;
}

}  // namespace voaforge
