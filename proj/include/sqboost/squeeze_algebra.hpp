#pragma once

#include <complex>

#include "sqboost/errors.hpp"

// Scalar SU(1,1) algebra for single-mode squeeze operators.
//
// A squeeze S(beta) = exp(beta*K+ - conj(beta)*K-) acts on the mode operator a by
// conjugation:  S a S^dag = mu*a + nu*adag  with |mu|^2 - |nu|^2 = 1.  Everything in
// this header works at the level of the 2x2 coefficient matrix [[mu, nu], [conj(nu),
// conj(mu)]]; no operator truncation is involved, so results here serve as the exact
// reference the Fock-space checks are measured against.

namespace sqboost {

/// Modulus/direction parametrisation of a squeeze.  rho >= 0 is the squeeze strength,
/// phi in (-pi, pi] the squeeze axis.  The complex group parameter is
/// beta = (rho/2) * exp(i*(pi/2 - phi)).
class SqueezeParam {
 public:
  SqueezeParam() = default;
  /// Canonicalises: wraps phi into (-pi, pi], forces phi = 0 when rho = 0.
  /// Throws InvalidParameter for negative or non-finite rho, non-finite phi.
  SqueezeParam(double rho, double phi);

  double rho() const { return rho_; }
  double phi() const { return phi_; }
  std::complex<double> beta() const;

 private:
  double rho_ = 0.0;
  double phi_ = 0.0;
};

/// Coefficients of the conjugation action on (a, adag).  Full matrix is
/// [[mu, nu], [conj(nu), conj(mu)]] with det = |mu|^2 - |nu|^2 = 1.
struct BogoliubovMatrix {
  std::complex<double> mu{1.0, 0.0};
  std::complex<double> nu{0.0, 0.0};

  /// | (|mu|^2 - |nu|^2) - 1 |, the deviation from the SU(1,1) constraint.
  double su11_defect() const;
};

/// Result of writing a product of squeezes as squeeze * rotation:
/// S(b1) S(b2) = S(beta3) R(delta).
struct CompositionResult {
  SqueezeParam beta3;
  double delta = 0.0;  // Wigner angle, radians, in (-2*pi, 2*pi]
  /// Set when the product is a pure rotation (|nu3| < 1e-14), in which case the
  /// squeeze direction is undefined and beta3 is reported as (0, 0).
  bool degenerate_direction = false;
};

BogoliubovMatrix to_bogoliubov(const SqueezeParam& s);

/// Pure mode rotation R(delta) = exp(i*delta*K0): mu = exp(-i*delta/2), nu = 0.
BogoliubovMatrix rotation_bogoliubov(double delta);

// Composition convention -- read before touching anything below.
//
// compose(first, second) returns the coefficients of the OPERATOR PRODUCT
// U = S(first) * S(second), i.e. the conjugation U a U^dag.  Because conjugation
// applies the inner factor first, the coefficient matrices multiply in REVERSED
// order: M(U) = M(second) * M(first).  Getting this order wrong still preserves
// the SU(1,1) constraint and all collinear cases, and only shows up as a sign
// error in the Wigner angle for non-collinear pairs, which is why it is spelled
// out here and pinned by the antisymmetry tests.
BogoliubovMatrix compose(const BogoliubovMatrix& first, const BogoliubovMatrix& second);

/// Splits an SU(1,1) element into squeeze times rotation: m = M(S(beta3) R(delta)).
/// delta = -2*arg(mu), rho3 = 2*acosh(|mu|), phi3 = pi/2 - arg(-nu * exp(i*delta/2)).
/// For any product of two squeezes Re(mu) > 0, so delta lands in (-pi, pi).
/// Throws InvalidParameter when m violates the SU(1,1) constraint grossly.
CompositionResult polar_decompose(const BogoliubovMatrix& m);

/// Closed-form composition law for two squeezes, S(b1) S(b2) = S(beta3) R(delta):
///
///   tan(delta/2) = sin(phi2-phi1) sh1 sh2 / (ch1 ch2 + cos(phi2-phi1) sh1 sh2),
///   cosh(rho3)   = cosh(rho1) cosh(rho2) + cos(phi2-phi1) sinh(rho1) sinh(rho2),
///
/// with shi = sinh(rhoi/2), chi = cosh(rhoi/2).  The direction phi3 solves the
/// 2x2 linear system produced by matching the adag coefficients; the determinant
/// is sinh(rho3/2)^2, so the solve degenerates exactly when the product is a pure
/// rotation (flagged, not thrown).  Agrees with polar_decompose(compose(...))
/// to ~1e-12 and is the cheap path used by the velocity-addition dictionary.
CompositionResult compose_squeezes_closed_form(const SqueezeParam& s1, const SqueezeParam& s2);

}  // namespace sqboost
