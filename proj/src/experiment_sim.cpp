#include "sqboost/experiment_sim.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace sqboost {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using std::complex;

// (beta a1dag a2dag - conj(beta) a1 a2) |psi>, using the ladder action directly.
VectorXcd apply_generator(const complex<double>& beta, int dim, const VectorXcd& in) {
  VectorXcd out = VectorXcd::Zero(dim * dim);
  for (int n1 = 0; n1 < dim; ++n1) {
    for (int n2 = 0; n2 < dim; ++n2) {
      complex<double> v{0.0, 0.0};
      if (n1 > 0 && n2 > 0) {
        v += beta * std::sqrt(static_cast<double>(n1) * n2) * in[(n1 - 1) * dim + (n2 - 1)];
      }
      if (n1 + 1 < dim && n2 + 1 < dim) {
        v -= std::conj(beta) * std::sqrt(static_cast<double>(n1 + 1) * (n2 + 1)) *
             in[(n1 + 1) * dim + (n2 + 1)];
      }
      out[n1 * dim + n2] = v;
    }
  }
  return out;
}

}  // namespace

TwoModeState::TwoModeState(int dim) : dim_(dim) {
  if (dim < 2 || dim > 40) {
    std::ostringstream os;
    os << "TwoModeState: dim = " << dim << " outside [2, 40]";
    throw InvalidDimension(os.str());
  }
  amp_ = VectorXcd::Zero(dim * dim);
  amp_[0] = 1.0;
}

std::complex<double> TwoModeState::overlap(const TwoModeState& other) const {
  if (other.dim_ != dim_) {
    throw InvalidDimension("TwoModeState::overlap: dimension mismatch");
  }
  return amp_.dot(other.amp_);  // Eigen's dot conjugates the left factor
}

Eigen::MatrixXcd two_mode_squeeze_unitary(const SqueezeParam& s, int dim) {
  if (dim < 2 || dim > 40) {
    throw InvalidDimension("two_mode_squeeze_unitary: dim outside [2, 40]");
  }
  const complex<double> beta = s.beta();
  const int n = dim * dim;
  MatrixXcd gen = MatrixXcd::Zero(n, n);
  // beta a1dag a2dag: |n1 n2> -> sqrt((n1+1)(n2+1)) |n1+1 n2+1>, minus the adjoint.
  for (int n1 = 0; n1 + 1 < dim; ++n1) {
    for (int n2 = 0; n2 + 1 < dim; ++n2) {
      const double amp = std::sqrt(static_cast<double>(n1 + 1) * (n2 + 1));
      gen((n1 + 1) * dim + (n2 + 1), n1 * dim + n2) = beta * amp;
      gen(n1 * dim + n2, (n1 + 1) * dim + (n2 + 1)) = -std::conj(beta) * amp;
    }
  }

  // Same scaling-and-squaring scheme as the single-mode oracle, inlined to keep
  // this module independent of it.
  int squarings = 0;
  double norm = gen.cwiseAbs().maxCoeff();
  while (norm > 1.0 && squarings < 60) {
    norm *= 0.5;
    ++squarings;
  }
  const MatrixXcd b = gen / std::ldexp(1.0, squarings);
  const double term_tol = 1e-13 / std::ldexp(1.0, squarings);
  MatrixXcd sum = MatrixXcd::Identity(n, n);
  MatrixXcd term = MatrixXcd::Identity(n, n);
  bool converged = false;
  for (int k = 1; k <= 200; ++k) {
    term = (term * b) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < term_tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NonConvergence("two_mode_squeeze_unitary: Taylor series exceeded 200 terms");
  }
  for (int q = 0; q < squarings; ++q) sum = sum * sum;
  return sum;
}

TwoModeState apply_two_mode_squeeze(const SqueezeParam& s, const TwoModeState& state) {
  const int dim = state.dim();
  const complex<double> beta = s.beta();

  // exp(G) v via time stepping: exp(G/steps) applied `steps` times, each step a
  // short Taylor series.  The generator's max coupling is ~|beta|*dim, so steps
  // is chosen to keep each sub-exponential's norm near or below one.
  const double strength = std::abs(beta) * dim;
  const int steps = std::max(1, static_cast<int>(std::ceil(strength)));
  const complex<double> beta_step = beta / static_cast<double>(steps);

  TwoModeState out = state;
  for (int step = 0; step < steps; ++step) {
    VectorXcd acc = out.amp();
    VectorXcd term = out.amp();
    bool converged = false;
    for (int k = 1; k <= 200; ++k) {
      term = apply_generator(beta_step, dim, term) / static_cast<double>(k);
      acc += term;
      if (term.norm() < 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw NonConvergence("apply_two_mode_squeeze: Taylor step exceeded 200 terms");
    }
    out.amp() = acc;
  }
  return out;
}

FringeResult nopa_pipeline(const SqueezeParam& s1, const SqueezeParam& s2, int dim) {
  const TwoModeState vacuum(dim);
  const TwoModeState psi1 = apply_two_mode_squeeze(s1, apply_two_mode_squeeze(s2, vacuum));

  const CompositionResult comp = compose_squeezes_closed_form(s1, s2);
  const TwoModeState psi2 = apply_two_mode_squeeze(comp.beta3, vacuum);

  const std::complex<double> o = psi2.overlap(psi1);
  FringeResult out;
  out.delta_prime = 2.0 * std::arg(o);
  out.overlap_magnitude = std::abs(o);
  out.visibility = out.overlap_magnitude;
  return out;
}

std::vector<double> fringe_scan(const SqueezeParam& s1, const SqueezeParam& s2, int dim,
                                const std::vector<double>& phases) {
  const TwoModeState vacuum(dim);
  const TwoModeState psi1 = apply_two_mode_squeeze(s1, apply_two_mode_squeeze(s2, vacuum));
  const CompositionResult comp = compose_squeezes_closed_form(s1, s2);
  const TwoModeState psi2 = apply_two_mode_squeeze(comp.beta3, vacuum);

  std::vector<double> intensity;
  intensity.reserve(phases.size());
  for (const double theta : phases) {
    const VectorXcd mixed = psi1.amp() + std::polar(1.0, theta) * psi2.amp();
    intensity.push_back(0.25 * mixed.squaredNorm());
  }
  return intensity;
}

}  // namespace sqboost
