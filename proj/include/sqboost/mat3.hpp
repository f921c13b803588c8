#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace sqboost {

/// Plain 3x3 real matrix, row-major.  Used for Lorentz matrices on (x0, x1, x2)
/// with metric signature (+, -, -); no invariants are enforced at this level.
struct Mat3 {
  std::array<double, 9> a{};

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }

  static Mat3 identity() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
  }

  Mat3 transpose() const {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
    return t;
  }

  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 p;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
        p(i, j) = s;
      }
    return p;
  }

  double det() const {
    const Mat3& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
};

/// Minkowski metric diag(1, -1, -1).
inline Mat3 minkowski_metric() {
  Mat3 g;
  g(0, 0) = 1.0;
  g(1, 1) = g(2, 2) = -1.0;
  return g;
}

/// Largest absolute entry; a cheap scale estimate for relative tolerances.
inline double max_abs(const Mat3& m) {
  double s = 0.0;
  for (double v : m.a) s = std::max(s, std::abs(v));
  return s;
}

inline double max_abs_diff(const Mat3& x, const Mat3& y) {
  double m = 0.0;
  for (int i = 0; i < 9; ++i) m = std::max(m, std::abs(x.a[static_cast<std::size_t>(i)] - y.a[static_cast<std::size_t>(i)]));
  return m;
}

/// max-abs entry of m^T G m - G; zero for exact Lorentz matrices.
inline double metric_residual(const Mat3& m) {
  const Mat3 g = minkowski_metric();
  return max_abs_diff(m.transpose() * g * m, g);
}

}  // namespace sqboost
