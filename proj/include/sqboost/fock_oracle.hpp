#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>

#include "sqboost/errors.hpp"
#include "sqboost/mat3.hpp"
#include "sqboost/squeeze_algebra.hpp"

// Truncated Fock-space realisation of the squeeze algebra.
//
// Everything scalar in squeeze_algebra is re-derived here by brute force on dense
// number-state matrices, which makes this module the independent witness for the
// composition law, the Bogoliubov coefficients and the generator conjugation.
// Truncation at dimension `dim` corrupts the top photon numbers, so every
// comparison is restricted to a safe block of indices <= cutoff, and the leakage
// into that block decays roughly like tanh(rho/2)^((dim - 2*cutoff)/2) with a
// sizable prefactor.  Measured on the conjugation tests at cutoff 20, rho = 1:
// ~1e-2 at dim 60, ~5e-6 at dim 80, ~2e-10 at dim 100; tests therefore run at
// dim 100 where the quoted tolerances hold with real margin.
//
// Branch note: the number-state representation is a double cover of the 2x2
// picture.  mu = exp(-i*delta/2) determines delta only modulo 2*pi at the matrix
// level, and the two candidate operators S(b3) R(delta) and S(b3) R(delta + 2*pi)
// genuinely differ.  check_composition_identity evaluates both and labels which
// branch matched; for products of two squeezes the principal branch always wins
// (Re mu > 0 plus continuity from the identity), and tests assert that.

namespace sqboost {

/// Dense operator on the number basis {|0>, ..., |dim-1>}.
struct FockOperator {
  Eigen::MatrixXcd mat;

  int dim() const { return static_cast<int>(mat.rows()); }
};

struct LadderPair {
  FockOperator a;     // annihilation: a|n> = sqrt(n)|n-1>
  FockOperator adag;  // creation, exact transpose-conjugate of the truncated a
};

struct KOps {
  FockOperator k0;      // (a adag + adag a)/4; diagonal (2n+1)/4 below the edge
  FockOperator kplus;   // adag^2 / 2
  FockOperator kminus;  // a^2 / 2
};

/// Outcome of a truncation-limited operator comparison.
struct TruncationReport {
  int dim = 0;
  int cutoff = 0;          // comparisons ran on indices <= cutoff (cutoff < dim)
  double residual = 0.0;   // max-abs entry mismatch on the safe block, best branch
  std::string branch;      // "principal" or "plus_2pi"
  double residual_alt = 0.0;  // residual of the branch that lost
};

/// Default safe-block cutoff for a given dimension.
inline int default_cutoff(int dim) { return dim / 3; }

/// Throws InvalidDimension unless dim >= 2.
LadderPair build_ladder(int dim);

KOps build_k_ops(int dim);

/// Scaling-and-squaring with a plain Taylor core: m is halved until its max-norm
/// is below 1, the series is summed until the next term drops below tol (scaled
/// to survive the re-squarings), then squared back.  Throws NonConvergence if a
/// series needs more than 200 terms, which signals dim or rho far out of budget.
FockOperator matrix_exp(const FockOperator& m, double tol);

/// S(beta) = exp(beta K+ - conj(beta) K-) on the truncated space.  The truncated
/// generator is exactly antihermitian, so the result is unitary to roughly the
/// exponential tolerance; its low-index matrix elements are faithful only as far
/// as the truncation leakage allows (see the header note).
FockOperator squeeze_unitary(const SqueezeParam& s, int dim);

/// R(delta) = exp(i delta K0) built directly as the exact diagonal
/// diag(exp(i delta (2n+1)/4)); delta = 4*pi gives the global phase -1.
FockOperator rotation_unitary(double delta, int dim);

/// Measures max |(S(b1) S(b2) - S(beta3) R(delta))_jk| over j,k <= cutoff for the
/// proposed composition `result`, trying both delta branches (see header note).
/// Requires cutoff <= dim/2.
TruncationReport check_composition_identity(const SqueezeParam& s1, const SqueezeParam& s2,
                                            const CompositionResult& result, int dim,
                                            int cutoff, double tol);

/// Conjugates the hermitian generators K0, K1 = -i(K+ - K-)/2, K2 = -(K+ + K-)/2
/// by S(beta), projects each result back onto span{K0, K1, K2} with the
/// Frobenius inner product on the safe block, and assembles the coordinate-space
/// boost matrix (metric signs included).  Matches adjoint_boost_from_squeeze to
/// ~1e-10 at dim 100, cutoff 20, rho <= 1 (see the header note for how the error
/// grows at smaller dim).  Throws IllConditionedProjection when the restricted
/// Gram matrix has condition number above 1e8 (cutoff too small).
Mat3 adjoint_action_matrix(const SqueezeParam& s, int dim, int cutoff);

}  // namespace sqboost
