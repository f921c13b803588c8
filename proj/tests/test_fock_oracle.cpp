#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "sqboost/fock_oracle.hpp"
#include "sqboost/relativity.hpp"
#include "sqboost/sampling.hpp"

using namespace sqboost;
using Cd = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

double block_max(const Eigen::MatrixXcd& m, int count) {
  return m.topLeftCorner(count, count).cwiseAbs().maxCoeff();
}

/// Vacuum amplitudes of S(beta)|0>, from the annihilator condition
/// (mu a + nu adag) S|0> = 0: only even levels populated, with
///   c0 = 1/sqrt(cosh(rho/2)),  c_{n+2} = -(nu/mu) sqrt((n+1)/(n+2)) c_n.
std::vector<Cd> vacuum_amplitudes(const SqueezeParam& s, int dim) {
  const BogoliubovMatrix b = to_bogoliubov(s);
  std::vector<Cd> c(dim, Cd(0.0, 0.0));
  c[0] = 1.0 / std::sqrt(std::cosh(s.rho() / 2.0));
  for (int n = 0; n + 2 < dim; n += 2) {
    c[n + 2] = -(b.nu / b.mu) * std::sqrt((n + 1.0) / (n + 2.0)) * c[n];
  }
  return c;
}

}  // namespace

TEST_CASE("ladder operators") {
  SUBCASE("smallest dimension is written out exactly") {
    const LadderPair l = build_ladder(2);
    CHECK(l.a.mat(0, 1) == Cd(1.0, 0.0));
    CHECK(l.a.mat(0, 0) == Cd(0.0, 0.0));
    CHECK(l.a.mat(1, 0) == Cd(0.0, 0.0));
    CHECK(l.a.mat(1, 1) == Cd(0.0, 0.0));
    CHECK(l.adag.mat(1, 0) == Cd(1.0, 0.0));
  }
  SUBCASE("canonical commutator holds except in the last diagonal slot") {
    const int dim = 12;
    const LadderPair l = build_ladder(dim);
    const Eigen::MatrixXcd comm = l.a.mat * l.adag.mat - l.adag.mat * l.a.mat;
    for (int n = 0; n < dim - 1; ++n) CHECK(std::abs(comm(n, n) - 1.0) < 1e-14);
    CHECK(std::abs(comm(dim - 1, dim - 1) - (1.0 - dim)) < 1e-13);
  }
  SUBCASE("dimension guard") {
    CHECK_THROWS_AS(build_ladder(1), InvalidDimension);
    CHECK_THROWS_AS(build_ladder(0), InvalidDimension);
  }
}

TEST_CASE("su(1,1) generators on the number basis") {
  const int dim = 40;
  const KOps k = build_k_ops(dim);

  SUBCASE("k0 is diagonal with the expected weights") {
    for (int n = 0; n < dim - 1; ++n) {
      CHECK(std::abs(k.k0.mat(n, n) - (2.0 * n + 1.0) / 4.0) < 1e-13);
    }
    // the corner slot loses the a adag contribution to truncation
    CHECK(std::abs(k.k0.mat(dim - 1, dim - 1) - (dim - 1.0) / 4.0) < 1e-12);
  }

  SUBCASE("commutation relations on the truncation-safe block") {
    const Eigen::MatrixXcd c0p = k.k0.mat * k.kplus.mat - k.kplus.mat * k.k0.mat;
    const Eigen::MatrixXcd c0m = k.k0.mat * k.kminus.mat - k.kminus.mat * k.k0.mat;
    const Eigen::MatrixXcd cpm = k.kplus.mat * k.kminus.mat - k.kminus.mat * k.kplus.mat;
    const int safe = dim - 3;  // indices <= dim-4 never touch the edge
    CHECK(block_max(c0p - k.kplus.mat, safe) < 1e-12);
    CHECK(block_max(c0m + k.kminus.mat, safe) < 1e-12);
    CHECK(block_max(cpm + 2.0 * k.k0.mat, safe) < 1e-12);
  }
}

TEST_CASE("matrix exponential") {
  SUBCASE("exponential of zero is the identity") {
    FockOperator z;
    z.mat = Eigen::MatrixXcd::Zero(5, 5);
    const FockOperator e = matrix_exp(z, 1e-13);
    CHECK((e.mat - Eigen::MatrixXcd::Identity(5, 5)).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("diagonal matrices exponentiate entrywise") {
    FockOperator d;
    d.mat = Eigen::MatrixXcd::Zero(3, 3);
    d.mat(0, 0) = Cd(0.5, 0.0);
    d.mat(1, 1) = Cd(0.0, 2.0);
    d.mat(2, 2) = Cd(-3.0, 1.0);
    const FockOperator e = matrix_exp(d, 1e-13);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(e.mat(i, i) - std::exp(d.mat(i, i))) < 1e-13);
    }
    CHECK(std::abs(e.mat(0, 1)) == 0.0);
  }
  SUBCASE("nilpotent generator terminates the series exactly") {
    FockOperator n;
    n.mat = Eigen::MatrixXcd::Zero(2, 2);
    n.mat(0, 1) = Cd(3.0, -4.0);
    const FockOperator e = matrix_exp(n, 1e-13);
    CHECK(std::abs(e.mat(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(e.mat(0, 1) - n.mat(0, 1)) < 1e-14);
    CHECK(std::abs(e.mat(1, 0)) < 1e-15);
  }
  SUBCASE("antihermitian generator gives a unitary") {
    UniformRng rng(2468);
    FockOperator h;
    h.mat = Eigen::MatrixXcd::Zero(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) h.mat(i, j) = Cd(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    FockOperator g;
    g.mat = 0.5 * (h.mat - h.mat.adjoint());
    const FockOperator u = matrix_exp(g, 1e-13);
    const Eigen::MatrixXcd defect =
        u.mat.adjoint() * u.mat - Eigen::MatrixXcd::Identity(6, 6);
    CHECK(defect.cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("hopelessly large norms are reported, not silently mangled") {
    FockOperator big;
    big.mat = Eigen::MatrixXcd::Identity(2, 2) * 1e30;
    CHECK_THROWS_AS(matrix_exp(big, 1e-13), NonConvergence);
  }
  SUBCASE("argument guards") {
    FockOperator empty;
    empty.mat = Eigen::MatrixXcd::Zero(0, 0);
    CHECK_THROWS_AS(matrix_exp(empty, 1e-13), InvalidDimension);
    FockOperator ok;
    ok.mat = Eigen::MatrixXcd::Zero(2, 2);
    CHECK_THROWS_AS(matrix_exp(ok, 0.0), InvalidParameter);
    CHECK_THROWS_AS(matrix_exp(ok, -1.0), InvalidParameter);
  }
}

TEST_CASE("squeeze unitary against the vacuum recursion") {
  const int dim = 60;
  UniformRng rng(90210);
  for (int trial = 0; trial < 4; ++trial) {
    const SqueezeParam s(rng.uniform(0.2, 1.0), rng.uniform(-kPi, kPi));
    CAPTURE(s.rho());
    CAPTURE(s.phi());
    const FockOperator u = squeeze_unitary(s, dim);
    const std::vector<Cd> c = vacuum_amplitudes(s, dim);
    for (int n = 0; n <= 20; ++n) {
      CHECK(std::abs(u.mat(n, 0) - c[static_cast<std::size_t>(n)]) < 1e-7);
    }
    // parity: the generator only couples even to even
    for (int n = 1; n < dim; n += 2) CHECK(std::abs(u.mat(n, 0)) < 1e-12);
    // the survival amplitude is real positive, 1/sqrt(cosh(rho/2))
    CHECK(std::abs(u.mat(0, 0) - 1.0 / std::sqrt(std::cosh(s.rho() / 2.0))) < 1e-8);
  }
}

TEST_CASE("squeeze unitary implements the bogoliubov transform") {
  const int dim = 100;
  const LadderPair l = build_ladder(dim);
  UniformRng rng(31415);
  for (int trial = 0; trial < 3; ++trial) {
    const SqueezeParam s(rng.uniform(0.3, 1.0), rng.uniform(-kPi, kPi));
    CAPTURE(s.rho());
    CAPTURE(s.phi());
    const BogoliubovMatrix b = to_bogoliubov(s);
    const FockOperator u = squeeze_unitary(s, dim);
    const Eigen::MatrixXcd conj = u.mat * l.a.mat * u.mat.adjoint();
    const Eigen::MatrixXcd expect = b.mu * l.a.mat + b.nu * l.adag.mat;
    CHECK(block_max(conj - expect, 21) < 1e-6);
  }
}

TEST_CASE("rotation unitary") {
  const int dim = 10;
  SUBCASE("zero angle is the identity") {
    const FockOperator r = rotation_unitary(0.0, dim);
    CHECK((r.mat - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("angles add") {
    const FockOperator r1 = rotation_unitary(0.7, dim);
    const FockOperator r2 = rotation_unitary(-1.9, dim);
    const FockOperator r12 = rotation_unitary(0.7 - 1.9, dim);
    CHECK((r1.mat * r2.mat - r12.mat).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("full turn is not the identity, two turns are minus one") {
    const FockOperator r2pi = rotation_unitary(2.0 * kPi, dim);
    // one 2*pi turn multiplies level n by i*(-1)^n
    for (int n = 0; n < dim; ++n) {
      const Cd expect = (n % 2 == 0) ? Cd(0.0, 1.0) : Cd(0.0, -1.0);
      CHECK(std::abs(r2pi.mat(n, n) - expect) < 1e-14);
    }
    const FockOperator r4pi = rotation_unitary(4.0 * kPi, dim);
    for (int n = 0; n < dim; ++n) CHECK(std::abs(r4pi.mat(n, n) + 1.0) < 1e-13);
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(rotation_unitary(0.5, 1), InvalidDimension);
    CHECK_THROWS_AS(rotation_unitary(std::nan(""), 4), InvalidParameter);
  }
}

TEST_CASE("composition law holds on the truncated space") {
  SUBCASE("collinear squeezes") {
    const SqueezeParam s1(0.4, 1.1), s2(0.35, 1.1);
    const CompositionResult comp = compose_squeezes_closed_form(s1, s2);
    const TruncationReport rep = check_composition_identity(s1, s2, comp, 60, 20, 1e-13);
    CHECK(rep.residual < 1e-7);
    CHECK(rep.branch == "principal");
  }
  SUBCASE("the perpendicular strong-squeeze pair") {
    const SqueezeParam s1(1.0, 0.0), s2(1.0, kPi / 2.0);
    const CompositionResult comp = compose_squeezes_closed_form(s1, s2);
    const TruncationReport rep = check_composition_identity(s1, s2, comp, 100, 20, 1e-13);
    CHECK(rep.residual < 1e-6);
    CHECK(rep.branch == "principal");
    // the two delta branches are genuinely different operators
    CHECK(rep.residual_alt > 0.1);
  }
  SUBCASE("random pairs stay on the principal branch") {
    UniformRng rng(8675309);
    for (int trial = 0; trial < 5; ++trial) {
      const SqueezeParam s1(rng.uniform(0.1, 0.8), rng.uniform(-kPi, kPi));
      const SqueezeParam s2(rng.uniform(0.1, 0.8), rng.uniform(-kPi, kPi));
      const CompositionResult comp = compose_squeezes_closed_form(s1, s2);
      const TruncationReport rep = check_composition_identity(s1, s2, comp, 100, 20, 1e-13);
      CAPTURE(s1.rho());
      CAPTURE(s2.rho());
      CHECK(rep.residual < 1e-6);
      CHECK(rep.branch == "principal");
      CHECK(rep.residual < rep.residual_alt);
    }
  }
  SUBCASE("residual shrinks as the truncation recedes") {
    const SqueezeParam s1(0.6, 0.3), s2(0.5, -1.1);
    const CompositionResult comp = compose_squeezes_closed_form(s1, s2);
    const double r40 = check_composition_identity(s1, s2, comp, 40, 13, 1e-13).residual;
    const double r60 = check_composition_identity(s1, s2, comp, 60, 13, 1e-13).residual;
    const double r80 = check_composition_identity(s1, s2, comp, 80, 13, 1e-13).residual;
    CHECK(r40 > r60);
    CHECK(r60 > r80);
    CHECK(r80 < 1e-8);
  }
  SUBCASE("cutoff guard") {
    const SqueezeParam s(0.3, 0.0);
    const CompositionResult comp = compose_squeezes_closed_form(s, s);
    CHECK_THROWS_AS(check_composition_identity(s, s, comp, 20, 11, 1e-13), InvalidDimension);
  }
}

TEST_CASE("generator conjugation recovered from the truncated space") {
  SUBCASE("x-direction squeeze gives the textbook boost block") {
    const double rho = 0.8;
    const Mat3 m = adjoint_action_matrix(SqueezeParam(rho, 0.0), 100, 20);
    const double ch = std::cosh(rho), sh = std::sinh(rho);
    CHECK(std::abs(m(0, 0) - ch) < 1e-5);
    CHECK(std::abs(m(0, 1) + sh) < 1e-5);
    CHECK(std::abs(m(1, 0) + sh) < 1e-5);
    CHECK(std::abs(m(1, 1) - ch) < 1e-5);
    CHECK(std::abs(m(2, 2) - 1.0) < 1e-5);
    CHECK(std::abs(m(0, 2)) < 1e-5);
    CHECK(std::abs(m(2, 1)) < 1e-5);
  }
  SUBCASE("matches the closed-form adjoint boost") {
    UniformRng rng(112358);
    for (int trial = 0; trial < 3; ++trial) {
      const SqueezeParam s(rng.uniform(0.2, 1.0), rng.uniform(-kPi, kPi));
      CAPTURE(s.rho());
      CAPTURE(s.phi());
      const Mat3 fock = adjoint_action_matrix(s, 100, 20);
      const Mat3 closed = boost_matrix_rapidity(s.rho(), s.phi()).mat();
      CHECK(max_abs_diff(fock, closed) < 1e-5);
      CHECK(metric_residual(fock) < 1e-5);
    }
  }
  SUBCASE("a starved projection is reported") {
    CHECK_THROWS_AS(adjoint_action_matrix(SqueezeParam(0.5, 0.2), 40, 1),
                    IllConditionedProjection);
  }
  SUBCASE("cutoff guard") {
    CHECK_THROWS_AS(adjoint_action_matrix(SqueezeParam(0.5, 0.2), 10, 10), InvalidDimension);
  }
}
