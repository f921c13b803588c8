#include "sqboost/squeeze_algebra.hpp"

#include <cmath>

namespace sqboost {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Wraps an angle into (-pi, pi].
double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w == -kPi) w = kPi;
  return w;
}

}  // namespace

SqueezeParam::SqueezeParam(double rho, double phi) {
  if (!std::isfinite(rho) || rho < 0.0) {
    throw InvalidParameter("SqueezeParam: rho must be finite and >= 0");
  }
  if (!std::isfinite(phi)) {
    throw InvalidParameter("SqueezeParam: phi must be finite");
  }
  rho_ = rho;
  phi_ = (rho == 0.0) ? 0.0 : wrap_angle(phi);
}

std::complex<double> SqueezeParam::beta() const {
  return std::polar(0.5 * rho_, 0.5 * kPi - phi_);
}

double BogoliubovMatrix::su11_defect() const {
  return std::abs(std::norm(mu) - std::norm(nu) - 1.0);
}

BogoliubovMatrix to_bogoliubov(const SqueezeParam& s) {
  BogoliubovMatrix m;
  m.mu = std::cosh(0.5 * s.rho());
  m.nu = -std::polar(std::sinh(0.5 * s.rho()), 0.5 * kPi - s.phi());
  return m;
}

BogoliubovMatrix rotation_bogoliubov(double delta) {
  if (!std::isfinite(delta)) {
    throw InvalidParameter("rotation_bogoliubov: delta must be finite");
  }
  BogoliubovMatrix m;
  m.mu = std::polar(1.0, -0.5 * delta);
  m.nu = 0.0;
  return m;
}

BogoliubovMatrix compose(const BogoliubovMatrix& first, const BogoliubovMatrix& second) {
  // M(S(first) * S(second)) = M(second) * M(first); see header.
  BogoliubovMatrix out;
  out.mu = second.mu * first.mu + second.nu * std::conj(first.nu);
  out.nu = second.mu * first.nu + second.nu * std::conj(first.mu);
  return out;
}

CompositionResult polar_decompose(const BogoliubovMatrix& m) {
  if (m.su11_defect() > 1e-6) {
    throw InvalidParameter("polar_decompose: input violates |mu|^2 - |nu|^2 = 1");
  }
  CompositionResult r;
  r.delta = -2.0 * std::arg(m.mu);
  if (r.delta <= -2.0 * kPi) r.delta = 2.0 * kPi;  // principal arg boundary
  const double abs_mu = std::abs(m.mu);
  const double rho3 = 2.0 * std::acosh(std::max(1.0, abs_mu));
  if (std::abs(m.nu) < 1e-14) {
    r.beta3 = SqueezeParam(0.0, 0.0);
    r.degenerate_direction = true;
    return r;
  }
  const double phi3 = 0.5 * kPi - std::arg(-m.nu * std::polar(1.0, 0.5 * r.delta));
  r.beta3 = SqueezeParam(rho3, phi3);
  return r;
}

CompositionResult compose_squeezes_closed_form(const SqueezeParam& s1, const SqueezeParam& s2) {
  const double dphi = s2.phi() - s1.phi();
  const double ch1 = std::cosh(0.5 * s1.rho()), sh1 = std::sinh(0.5 * s1.rho());
  const double ch2 = std::cosh(0.5 * s2.rho()), sh2 = std::sinh(0.5 * s2.rho());

  // Real and imaginary part of the composed "mu" coefficient; P >= 1 always,
  // so the half-angle arctangent below stays on the principal branch.
  const double p = ch1 * ch2 + std::cos(dphi) * sh1 * sh2;
  const double q = std::sin(dphi) * sh1 * sh2;

  CompositionResult r;
  r.delta = 2.0 * std::atan2(q, p);

  // sinh(rho3/2)^2 rewritten as a sum of two nonnegative terms; the naive
  // (cosh(rho3) - 1)/2 cancels catastrophically for antiparallel squeezes and
  // the square root would turn that into ~1e-8 of phantom squeezing.
  const double dr_half = std::sinh(0.5 * (s1.rho() - s2.rho()));
  const double cos_half = std::cos(0.5 * dphi);
  const double sh3_half_sq = dr_half * dr_half +
                             std::sinh(s1.rho()) * std::sinh(s2.rho()) * cos_half * cos_half;
  const double sh3_half = std::sqrt(sh3_half_sq);
  const double rho3 = 2.0 * std::asinh(sh3_half);

  // sinh(rho3/2)^2 is also the determinant of the direction system below; a
  // vanishing value means the two squeezes cancelled.
  if (sh3_half < 1e-14) {
    r.beta3 = SqueezeParam(0.0, 0.0);
    r.degenerate_direction = true;
    return r;
  }

  // Matching the adag coefficient of the product gives
  //   tanh(rho3/2) * [ p*cos(phi3) - q*sin(phi3) ] = e
  //   tanh(rho3/2) * [ q*cos(phi3) + p*sin(phi3) ] = f
  // solved by Cramer's rule; p^2 + q^2 = cosh(rho3/2)^2 keeps it well scaled.
  const double e = std::cos(s1.phi()) * sh1 * ch2 + std::cos(s2.phi()) * sh2 * ch1;
  const double f = std::sin(s1.phi()) * sh1 * ch2 + std::sin(s2.phi()) * sh2 * ch1;
  const double sinh_rho3 = 2.0 * sh3_half * std::sqrt(1.0 + sh3_half_sq);
  const double cos_phi3 = 2.0 * (p * e + q * f) / sinh_rho3;
  const double sin_phi3 = 2.0 * (p * f - q * e) / sinh_rho3;

  r.beta3 = SqueezeParam(rho3, std::atan2(sin_phi3, cos_phi3));
  return r;
}

}  // namespace sqboost
