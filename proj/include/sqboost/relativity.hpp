#pragma once

#include "sqboost/errors.hpp"
#include "sqboost/mat3.hpp"

// (2+1)-dimensional special-relativistic kinematics with c = 1.
//
// Boosts act as y = L x on events x = (x0, x1, x2); the velocity argument is the
// velocity of the primed frame relative to the unprimed one.  Velocity addition
// uses the standard non-commutative law, and the mismatch between boost(u)*boost(v)
// and a pure boost is the Thomas/Wigner rotation extracted by boost_polar_decompose.

namespace sqboost {

/// Planar velocity in units of c.  Construction enforces the subluminal guard
/// |v|^2 < 1 - 1e-12 (keeps gamma below ~1e6); throws SuperluminalInput otherwise.
class Velocity2 {
 public:
  Velocity2() = default;
  Velocity2(double vx, double vy);

  double vx() const { return vx_; }
  double vy() const { return vy_; }
  double norm_sq() const { return vx_ * vx_ + vy_ * vy_; }
  double norm() const;

 private:
  double vx_ = 0.0;
  double vy_ = 0.0;
};

/// Pure (rotation-free) boost: symmetric Lorentz matrix with m00 >= 1.
/// Construction validates symmetry (1e-12 * scale), metric preservation
/// (1e-10 * scale^2) and orthochronicity, where scale = max(1, largest |entry|);
/// the scaling admits large-rapidity boosts whose intrinsic rounding grows with
/// the entries.  Every Boost3 in circulation satisfies these checks.
class Boost3 {
 public:
  Boost3() : m_(Mat3::identity()) {}
  explicit Boost3(const Mat3& m);

  const Mat3& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Mat3 m_;
};

/// m = boost * spatial_rotation(angle), the polar split of a Lorentz matrix.
struct BoostDecomposition {
  Boost3 boost;
  double angle = 0.0;  // radians, in (-pi, pi]
};

/// Lorentz factor 1/sqrt(1 - |v|^2).  The 1 - |v|^2 term is evaluated with a
/// compensated sum so the result stays accurate for |v| close to the guard.
double gamma(const Velocity2& v);

/// Boost with velocity v:
///   [ gamma,      -gamma v1,            -gamma v2          ]
///   [-gamma v1, 1 + k v1 v1,             k v1 v2           ]   k = gamma^2/(1+gamma)
///   [-gamma v2,     k v2 v1,         1 + k v2 v2           ]
Boost3 boost_matrix_velocity(const Velocity2& v);

/// Same boost parametrised by rapidity rho >= 0 and direction phi, equal to
/// boost_matrix_velocity(tanh(rho) * (cos phi, sin phi)).
Boost3 boost_matrix_rapidity(double rho, double phi);

/// Einstein addition u (+) v (velocity of a particle moving with v in the frame
/// moving with u).  Non-commutative; u (+) v and v (+) u differ by a rotation.
Velocity2 add_velocities(const Velocity2& u, const Velocity2& v);

/// Lorentz factor of u (+) v computed without forming the sum:
/// gamma_w = gamma_u * gamma_v * (1 + u . v).
double gamma_compose(const Velocity2& u, const Velocity2& v);

/// Spatial rotation by angle embedded as 1 (+) SO(2):
/// rows [1,0,0; 0,cos,-sin; 0,sin,cos].
Mat3 spatial_rotation(double angle);

/// Splits a proper orthochronous Lorentz matrix into pure boost times spatial
/// rotation.  The boost is read off the first column (the image of the time
/// axis); the rotation is what the inverse boost leaves behind.  Throws
/// NotLorentz, naming the violated check, if m^T G m != G (1e-8 * scale^2),
/// det != +1 (1e-8 * scale^3) or m00 < 1 (orthochronous, 1e-8 slack), with
/// scale = max(1, largest |entry|).
BoostDecomposition boost_polar_decompose(const Mat3& m);

/// || scale * ((u/scale) (+) (v/scale)) - (u + v) ||, the leading relativistic
/// correction to Galilean addition; decays as 1/scale^2.
double galilean_limit_check(const Velocity2& u, const Velocity2& v, double scale);

}  // namespace sqboost
