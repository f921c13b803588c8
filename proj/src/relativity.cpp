#include "sqboost/relativity.hpp"

#include <cmath>
#include <sstream>

namespace sqboost {

namespace {

// 1 - vx^2 - vy^2 with the squares' rounding residues folded back in (fma),
// accurate to a few ulp even when the result is ~1e-12.
double one_minus_norm_sq(double vx, double vy) {
  const double px = vx * vx;
  const double ex = std::fma(vx, vx, -px);
  const double py = vy * vy;
  const double ey = std::fma(vy, vy, -py);
  return ((1.0 - px) - py) - (ex + ey);
}

}  // namespace

Velocity2::Velocity2(double vx, double vy) {
  if (!std::isfinite(vx) || !std::isfinite(vy)) {
    throw SuperluminalInput("Velocity2: components must be finite");
  }
  if (one_minus_norm_sq(vx, vy) <= 1e-12) {
    std::ostringstream os;
    os << "Velocity2: |v|^2 = " << vx * vx + vy * vy << " exceeds 1 - 1e-12";
    throw SuperluminalInput(os.str());
  }
  vx_ = vx;
  vy_ = vy;
}

double Velocity2::norm() const { return std::hypot(vx_, vy_); }

Boost3::Boost3(const Mat3& m) {
  // Rounding in a genuine Lorentz matrix grows with the entries (the metric
  // residual like scale^2), so the checks are relative to the matrix scale;
  // gamma up to the Velocity2 guard (~1e6) must remain constructible.
  const double scale = std::max(1.0, max_abs(m));
  double asym = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) asym = std::max(asym, std::abs(m(i, j) - m(j, i)));
  if (asym > 1e-12 * scale) {
    std::ostringstream os;
    os << "Boost3: asymmetry " << asym << " exceeds 1e-12 at scale " << scale;
    throw NotLorentz(os.str());
  }
  const double res = metric_residual(m);
  if (res > 1e-10 * scale * scale) {
    std::ostringstream os;
    os << "Boost3: metric residual " << res << " exceeds 1e-10 at scale " << scale;
    throw NotLorentz(os.str());
  }
  if (m(0, 0) < 1.0 - 1e-12) {
    std::ostringstream os;
    os << "Boost3: m00 = " << m(0, 0) << " is not orthochronous";
    throw NotLorentz(os.str());
  }
  m_ = m;
}

double gamma(const Velocity2& v) {
  return 1.0 / std::sqrt(one_minus_norm_sq(v.vx(), v.vy()));
}

Boost3 boost_matrix_velocity(const Velocity2& v) {
  const double g = gamma(v);
  const double k = g * g / (1.0 + g);  // equals (gamma - 1)/|v|^2, finite at v = 0
  Mat3 m;
  m(0, 0) = g;
  m(0, 1) = m(1, 0) = -g * v.vx();
  m(0, 2) = m(2, 0) = -g * v.vy();
  m(1, 1) = 1.0 + k * v.vx() * v.vx();
  m(2, 2) = 1.0 + k * v.vy() * v.vy();
  m(1, 2) = m(2, 1) = k * v.vx() * v.vy();
  return Boost3(m);
}

Boost3 boost_matrix_rapidity(double rho, double phi) {
  if (!std::isfinite(rho) || rho < 0.0 || !std::isfinite(phi)) {
    throw InvalidParameter("boost_matrix_rapidity: need finite rho >= 0 and finite phi");
  }
  const double ch = std::cosh(rho), sh = std::sinh(rho);
  const double c = std::cos(phi), s = std::sin(phi);
  Mat3 m;
  m(0, 0) = ch;
  m(0, 1) = m(1, 0) = -sh * c;
  m(0, 2) = m(2, 0) = -sh * s;
  m(1, 1) = 1.0 + (ch - 1.0) * c * c;
  m(2, 2) = 1.0 + (ch - 1.0) * s * s;
  m(1, 2) = m(2, 1) = (ch - 1.0) * c * s;
  return Boost3(m);
}

Velocity2 add_velocities(const Velocity2& u, const Velocity2& v) {
  const double gu = gamma(u);
  const double dot = u.vx() * v.vx() + u.vy() * v.vy();
  const double denom = 1.0 + dot;
  const double cu = 1.0 + (gu / (1.0 + gu)) * dot;  // coefficient of u
  return Velocity2((cu * u.vx() + v.vx() / gu) / denom,
                   (cu * u.vy() + v.vy() / gu) / denom);
}

double gamma_compose(const Velocity2& u, const Velocity2& v) {
  const double dot = u.vx() * v.vx() + u.vy() * v.vy();
  return gamma(u) * gamma(v) * (1.0 + dot);
}

Mat3 spatial_rotation(double angle) {
  Mat3 r = Mat3::identity();
  r(1, 1) = r(2, 2) = std::cos(angle);
  r(1, 2) = -std::sin(angle);
  r(2, 1) = std::sin(angle);
  return r;
}

BoostDecomposition boost_polar_decompose(const Mat3& m) {
  // Tolerances are relative to the matrix scale: rounding alone puts the
  // metric residual of a genuine Lorentz matrix near scale^2 * eps and the
  // determinant error near scale^3 * eps, so absolute cutoffs would reject
  // legitimate large-rapidity boosts.
  const double scale = std::max(1.0, max_abs(m));
  const double res = metric_residual(m);
  if (res > 1e-8 * scale * scale) {
    std::ostringstream os;
    os << "boost_polar_decompose: metric residual " << res << " exceeds 1e-8 at scale " << scale;
    throw NotLorentz(os.str());
  }
  const double d = m.det();
  if (std::abs(d - 1.0) > 1e-8 * scale * scale * scale) {
    std::ostringstream os;
    os << "boost_polar_decompose: det = " << d << " differs from +1 beyond 1e-8 at scale " << scale;
    throw NotLorentz(os.str());
  }
  if (m(0, 0) < 1.0 - 1e-8) {
    std::ostringstream os;
    os << "boost_polar_decompose: m00 = " << m(0, 0) << " is not orthochronous";
    throw NotLorentz(os.str());
  }

  // First column of m is gamma * (1, -w1, -w2): the pure-boost factor in m = B R
  // shares it because R fixes the time axis.
  const Velocity2 w(-m(1, 0) / m(0, 0), -m(2, 0) / m(0, 0));
  const Boost3 b = boost_matrix_velocity(w);

  // B^{-1} = G B G for a symmetric Lorentz matrix.
  const Mat3 g = minkowski_metric();
  const Mat3 r = g * b.mat() * g * m;
  BoostDecomposition out;
  out.boost = b;
  out.angle = std::atan2(r(2, 1), r(1, 1));
  return out;
}

double galilean_limit_check(const Velocity2& u, const Velocity2& v, double scale) {
  if (!(scale > 1.0)) {
    throw InvalidParameter("galilean_limit_check: scale must exceed 1");
  }
  const Velocity2 us(u.vx() / scale, u.vy() / scale);
  const Velocity2 vs(v.vx() / scale, v.vy() / scale);
  const Velocity2 ws = add_velocities(us, vs);
  const double dx = scale * ws.vx() - (u.vx() + v.vx());
  const double dy = scale * ws.vy() - (u.vy() + v.vy());
  return std::hypot(dx, dy);
}

}  // namespace sqboost
