#include "sqboost/fock_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <sstream>

namespace sqboost {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Eigen::MatrixXcd;

double max_norm(const MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// Hermitian K1, K2 reconstructed from the weight basis: K+- = +-i (K1 +- i K2).
MatrixXcd k1_of(const KOps& k) {
  return std::complex<double>(0.0, -0.5) * (k.kplus.mat - k.kminus.mat);
}

MatrixXcd k2_of(const KOps& k) { return -0.5 * (k.kplus.mat + k.kminus.mat); }

FockOperator squeeze_unitary_with_tol(const KOps& k, const SqueezeParam& s, double tol) {
  const std::complex<double> beta = s.beta();
  FockOperator gen;
  gen.mat = beta * k.kplus.mat - std::conj(beta) * k.kminus.mat;
  return matrix_exp(gen, tol);
}

}  // namespace

LadderPair build_ladder(int dim) {
  if (dim < 2) {
    std::ostringstream os;
    os << "build_ladder: dim = " << dim << ", need at least 2";
    throw InvalidDimension(os.str());
  }
  MatrixXcd a = MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  LadderPair out;
  out.adag.mat = a.adjoint();
  out.a.mat = std::move(a);
  return out;
}

KOps build_k_ops(int dim) {
  const LadderPair l = build_ladder(dim);
  KOps k;
  k.k0.mat = 0.25 * (l.a.mat * l.adag.mat + l.adag.mat * l.a.mat);
  k.kplus.mat = 0.5 * (l.adag.mat * l.adag.mat);
  k.kminus.mat = 0.5 * (l.a.mat * l.a.mat);
  return k;
}

FockOperator matrix_exp(const FockOperator& m, double tol) {
  if (m.dim() < 1 || m.mat.rows() != m.mat.cols()) {
    throw InvalidDimension("matrix_exp: matrix must be square and non-empty");
  }
  if (!(tol > 0.0)) {
    throw InvalidParameter("matrix_exp: tol must be positive");
  }
  const int n = m.dim();

  int squarings = 0;
  double norm = max_norm(m.mat);
  while (norm > 1.0 && squarings < 60) {
    norm *= 0.5;
    ++squarings;
  }
  const MatrixXcd b = m.mat / std::ldexp(1.0, squarings);

  // Each squaring can roughly double the relative error, so the series is pushed
  // correspondingly deeper before unsquaring.
  const double term_tol = tol / std::ldexp(1.0, squarings);

  MatrixXcd sum = MatrixXcd::Identity(n, n);
  MatrixXcd term = MatrixXcd::Identity(n, n);
  bool converged = false;
  for (int k = 1; k <= 200; ++k) {
    term = (term * b) / static_cast<double>(k);
    sum += term;
    if (max_norm(term) < term_tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NonConvergence("matrix_exp: Taylor series did not reach tolerance in 200 terms");
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  FockOperator out;
  out.mat = std::move(sum);
  return out;
}

FockOperator squeeze_unitary(const SqueezeParam& s, int dim) {
  return squeeze_unitary_with_tol(build_k_ops(dim), s, 1e-13);
}

FockOperator rotation_unitary(double delta, int dim) {
  if (dim < 2) {
    throw InvalidDimension("rotation_unitary: dim must be at least 2");
  }
  if (!std::isfinite(delta)) {
    throw InvalidParameter("rotation_unitary: delta must be finite");
  }
  FockOperator r;
  r.mat = MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    r.mat(n, n) = std::polar(1.0, delta * (2.0 * n + 1.0) / 4.0);
  }
  return r;
}

TruncationReport check_composition_identity(const SqueezeParam& s1, const SqueezeParam& s2,
                                            const CompositionResult& result, int dim,
                                            int cutoff, double tol) {
  if (cutoff < 0 || cutoff > dim / 2) {
    std::ostringstream os;
    os << "check_composition_identity: cutoff " << cutoff << " not in [0, dim/2] for dim " << dim;
    throw InvalidDimension(os.str());
  }
  const KOps kops = build_k_ops(dim);
  const FockOperator u1 = squeeze_unitary_with_tol(kops, s1, tol);
  const FockOperator u2 = squeeze_unitary_with_tol(kops, s2, tol);
  const FockOperator u3 = squeeze_unitary_with_tol(kops, result.beta3, tol);
  const MatrixXcd product = u1.mat * u2.mat;

  const int b = cutoff + 1;
  const auto residual_for = [&](double delta) {
    const FockOperator rot = rotation_unitary(delta, dim);
    const MatrixXcd diff = product - u3.mat * rot.mat;
    return max_norm(diff.topLeftCorner(b, b));
  };
  const double res_principal = residual_for(result.delta);
  const double res_shifted = residual_for(result.delta + 2.0 * kPi);

  TruncationReport rep;
  rep.dim = dim;
  rep.cutoff = cutoff;
  if (res_principal <= res_shifted) {
    rep.residual = res_principal;
    rep.residual_alt = res_shifted;
    rep.branch = "principal";
  } else {
    rep.residual = res_shifted;
    rep.residual_alt = res_principal;
    rep.branch = "plus_2pi";
  }
  return rep;
}

Mat3 adjoint_action_matrix(const SqueezeParam& s, int dim, int cutoff) {
  if (cutoff < 0 || cutoff >= dim) {
    std::ostringstream os;
    os << "adjoint_action_matrix: cutoff " << cutoff << " not in [0, dim) for dim " << dim;
    throw InvalidDimension(os.str());
  }
  const KOps kops = build_k_ops(dim);
  const FockOperator u = squeeze_unitary(s, dim);
  const MatrixXcd udag = u.mat.adjoint();

  const int b = cutoff + 1;
  const MatrixXcd basis[3] = {kops.k0.mat.topLeftCorner(b, b),
                              k1_of(kops).topLeftCorner(b, b),
                              k2_of(kops).topLeftCorner(b, b)};

  Eigen::Matrix3d gram;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      gram(i, j) = (basis[i].adjoint() * basis[j]).trace().real();
    }
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(gram);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > 1e8) {
    std::ostringstream os;
    os << "adjoint_action_matrix: Gram condition " << (lo > 0.0 ? hi / lo : 0.0)
       << " too large on cutoff " << cutoff;
    throw IllConditionedProjection(os.str());
  }

  const MatrixXcd full[3] = {kops.k0.mat, k1_of(kops), k2_of(kops)};
  Mat3 coeff;  // coeff(i, j) = component of K_j in S K_i S^dag
  for (int i = 0; i < 3; ++i) {
    const MatrixXcd conj = (u.mat * full[i] * udag).topLeftCorner(b, b);
    Eigen::Vector3d rhs;
    for (int j = 0; j < 3; ++j) rhs(j) = (basis[j].adjoint() * conj).trace().real();
    const Eigen::Vector3d c = gram.ldlt().solve(rhs);
    for (int j = 0; j < 3; ++j) coeff(i, j) = c(j);
  }

  // Same metric assembly as the closed form: x = x0 K0 - x1 K1 - x2 K2.
  const Mat3 g = minkowski_metric();
  return g * coeff.transpose() * g;
}

}  // namespace sqboost
