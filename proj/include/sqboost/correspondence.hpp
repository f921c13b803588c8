#pragma once

#include "sqboost/relativity.hpp"
#include "sqboost/squeeze_algebra.hpp"

// Dictionary between single-mode squeezes and planar boosts.
//
// A squeeze (rho, phi) maps to the frame velocity v = tanh(rho) * (cos phi, sin phi),
// equivalently gamma = cosh(rho).  Under that dictionary the conjugation action of
// S(beta) on the su(1,1) generators (K0, K1, K2) is exactly the Lorentz boost
// boost_matrix_rapidity(rho, phi) acting on coordinates with metric (+, -, -), and
// the squeeze composition law S(b1) S(b2) = S(b3) R(delta) becomes relativistic
// velocity addition plus a Wigner rotation.
//
// Conventions fixed here and pinned by tests:
//  * the FIRST argument of a composition carries u, the second carries v, and the
//    result maps to u (+) v (checked by the perpendicular case, which separates
//    the two orderings);
//  * the spatial rotation left over in boost(u)*boost(v) = boost(u(+)v)*rot equals
//    spatial_rotation(-delta), i.e. the mode-rotation angle delta and the spatial
//    Wigner angle have opposite signs in our rotation convention.

namespace sqboost {

/// Event coordinates (x0, x1, x2); metric signature (+, -, -).
struct MinkowskiVector {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  double minkowski_norm_sq() const { return x0 * x0 - x1 * x1 - x2 * x2; }
};

/// A squeeze and the velocity it corresponds to, kept consistent by construction.
struct CorrespondencePair {
  SqueezeParam squeeze;
  Velocity2 velocity;

  static CorrespondencePair from_squeeze(const SqueezeParam& s);
  static CorrespondencePair from_velocity(const Velocity2& v);
};

/// v = tanh(rho) * (cos phi, sin phi).  Subluminal for every finite rho in exact
/// arithmetic; in double precision tanh(rho) rounds to 1.0 once rho exceeds about
/// 19, at which point the Velocity2 guard throws SuperluminalInput rather than
/// return a speed indistinguishable from c.
Velocity2 squeeze_to_velocity(const SqueezeParam& s);

/// Inverse map: rho = atanh(|v|), phi = atan2(vy, vx); (0,0) for v = 0.
SqueezeParam velocity_to_squeeze(const Velocity2& v);

/// The boost induced by conjugating the generators with S(beta):
///   S K0 S^dag = cosh(rho) K0 + cos(phi) sinh(rho) K1 + sin(phi) sinh(rho) K2,
/// and cyclic completions; lowering the spatial indices (metric (+,-,-)) turns the
/// coefficient array into the coordinate-space boost matrix.  Equal to
/// boost_matrix_rapidity(rho, phi); the truncated-Fock cross-check of the same
/// statement lives in fock_oracle::adjoint_action_matrix.
Boost3 adjoint_boost_from_squeeze(const SqueezeParam& s);

/// Applies the squeeze-induced boost to an event; preserves the Minkowski norm.
/// Throws InvalidParameter for non-finite coordinates.
MinkowskiVector transform_event(const SqueezeParam& s, const MinkowskiVector& x);

struct VelocityAdditionResult {
  Velocity2 w;
  double delta = 0.0;  // Wigner angle of the underlying squeeze composition
};

/// Relativistic velocity addition computed on the squeeze side: map u, v to
/// squeezes, compose in closed form, map beta3 back.  Agrees with
/// add_velocities(u, v) componentwise; delta reports the accumulated rotation.
VelocityAdditionResult velocity_addition_via_squeeze(const Velocity2& u, const Velocity2& v);

}  // namespace sqboost
