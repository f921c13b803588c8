#include "sqboost/correspondence.hpp"

#include <cmath>

namespace sqboost {

CorrespondencePair CorrespondencePair::from_squeeze(const SqueezeParam& s) {
  return CorrespondencePair{s, squeeze_to_velocity(s)};
}

CorrespondencePair CorrespondencePair::from_velocity(const Velocity2& v) {
  return CorrespondencePair{velocity_to_squeeze(v), v};
}

Velocity2 squeeze_to_velocity(const SqueezeParam& s) {
  const double speed = std::tanh(s.rho());
  return Velocity2(speed * std::cos(s.phi()), speed * std::sin(s.phi()));
}

SqueezeParam velocity_to_squeeze(const Velocity2& v) {
  const double speed = v.norm();
  if (speed == 0.0) return SqueezeParam(0.0, 0.0);
  return SqueezeParam(std::atanh(speed), std::atan2(v.vy(), v.vx()));
}

Boost3 adjoint_boost_from_squeeze(const SqueezeParam& s) {
  const double ch = std::cosh(s.rho()), sh = std::sinh(s.rho());
  const double c = std::cos(s.phi()), sn = std::sin(s.phi());

  // Coefficient array of the generator conjugation, a[i][j] = coefficient of K_j
  // in S K_i S^dag.  Symmetric in this basis.
  Mat3 a;
  a(0, 0) = ch;
  a(0, 1) = a(1, 0) = c * sh;
  a(0, 2) = a(2, 0) = sn * sh;
  a(1, 1) = 1.0 + (ch - 1.0) * c * c;
  a(2, 2) = 1.0 + (ch - 1.0) * sn * sn;
  a(1, 2) = a(2, 1) = (ch - 1.0) * c * sn;

  // Events expand as x = x0 K0 - x1 K1 - x2 K2, so the coordinate matrix is
  // G a^T G with G = diag(1, -1, -1): the first row and column pick up a sign.
  const Mat3 g = minkowski_metric();
  return Boost3(g * a.transpose() * g);
}

MinkowskiVector transform_event(const SqueezeParam& s, const MinkowskiVector& x) {
  if (!std::isfinite(x.x0) || !std::isfinite(x.x1) || !std::isfinite(x.x2)) {
    throw InvalidParameter("transform_event: coordinates must be finite");
  }
  const Boost3 l = adjoint_boost_from_squeeze(s);
  MinkowskiVector y;
  y.x0 = l(0, 0) * x.x0 + l(0, 1) * x.x1 + l(0, 2) * x.x2;
  y.x1 = l(1, 0) * x.x0 + l(1, 1) * x.x1 + l(1, 2) * x.x2;
  y.x2 = l(2, 0) * x.x0 + l(2, 1) * x.x1 + l(2, 2) * x.x2;
  return y;
}

VelocityAdditionResult velocity_addition_via_squeeze(const Velocity2& u, const Velocity2& v) {
  const SqueezeParam s1 = velocity_to_squeeze(u);
  const SqueezeParam s2 = velocity_to_squeeze(v);
  const CompositionResult comp = compose_squeezes_closed_form(s1, s2);
  VelocityAdditionResult out;
  out.w = squeeze_to_velocity(comp.beta3);
  out.delta = comp.delta;
  return out;
}

}  // namespace sqboost
