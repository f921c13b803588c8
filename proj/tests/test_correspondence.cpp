#include <doctest.h>

#include <cmath>

#include "sqboost/correspondence.hpp"
#include "sqboost/sampling.hpp"
#include "test_support.hpp"

using namespace sqboost;
using testsup::scaled_mat_diff;

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("squeeze to velocity dictionary") {
  SUBCASE("speed is tanh of the squeeze strength") {
    const Velocity2 v = squeeze_to_velocity(SqueezeParam(1.0986122886681098, 0.0));
    CHECK(v.vx() == doctest::Approx(0.8).epsilon(1e-13));
    CHECK(v.vy() == doctest::Approx(0.0));
  }
  SUBCASE("direction follows phi") {
    const Velocity2 v = squeeze_to_velocity(SqueezeParam(1.0, kPi / 4.0));
    const double expect = std::tanh(1.0) / std::sqrt(2.0);
    CHECK(expect == doctest::Approx(0.53853).epsilon(1e-4));  // pins tanh(rho), not tanh(rho/2)
    CHECK(v.vx() == doctest::Approx(expect).epsilon(1e-15));
    CHECK(v.vy() == doctest::Approx(expect).epsilon(1e-15));
  }
  SUBCASE("zero squeeze is the rest frame") {
    const Velocity2 v = squeeze_to_velocity(SqueezeParam(0.0, 0.0));
    CHECK(v.norm() == 0.0);
  }
  SUBCASE("double precision cannot represent the speed beyond rho of about 19") {
    CHECK_NOTHROW(squeeze_to_velocity(SqueezeParam(13.0, 0.3)));
    CHECK_THROWS_AS(squeeze_to_velocity(SqueezeParam(40.0, 0.3)), SuperluminalInput);
  }
}

TEST_CASE("dictionary round trips") {
  UniformRng rng(424242);
  SUBCASE("squeeze -> velocity -> squeeze") {
    for (int trial = 0; trial < 300; ++trial) {
      const SqueezeParam s(rng.uniform(1e-3, 5.0), rng.uniform(-kPi, kPi));
      const SqueezeParam back = velocity_to_squeeze(squeeze_to_velocity(s));
      CHECK(std::abs(back.rho() - s.rho()) < 1e-10 * std::max(1.0, s.rho()));
      CHECK(std::abs(std::remainder(back.phi() - s.phi(), 2.0 * kPi)) < 1e-12);
    }
  }
  SUBCASE("velocity -> squeeze -> velocity") {
    for (int trial = 0; trial < 300; ++trial) {
      const double speed = rng.uniform(0.0, 0.999);
      const double dir = rng.uniform(-kPi, kPi);
      const Velocity2 v(speed * std::cos(dir), speed * std::sin(dir));
      const Velocity2 back = squeeze_to_velocity(velocity_to_squeeze(v));
      CHECK(std::abs(back.vx() - v.vx()) < 1e-14);
      CHECK(std::abs(back.vy() - v.vy()) < 1e-14);
    }
  }
  SUBCASE("pair factory keeps both views consistent") {
    const CorrespondencePair p = CorrespondencePair::from_velocity(Velocity2(0.6, 0.0));
    CHECK(std::cosh(p.squeeze.rho()) == doctest::Approx(1.25).epsilon(1e-13));
    const CorrespondencePair q = CorrespondencePair::from_squeeze(p.squeeze);
    CHECK(q.velocity.vx() == doctest::Approx(0.6).epsilon(1e-14));
  }
}

TEST_CASE("generator conjugation reproduces the coordinate boost") {
  UniformRng rng(998877);
  for (int trial = 0; trial < 200; ++trial) {
    const SqueezeParam s(rng.uniform(0.0, 5.0), rng.uniform(-kPi, kPi));
    const Boost3 via_adjoint = adjoint_boost_from_squeeze(s);
    const Boost3 via_rapidity = boost_matrix_rapidity(s.rho(), s.phi());
    CHECK(scaled_mat_diff(via_adjoint.mat(), via_rapidity.mat()) < 1e-12);
  }
}

TEST_CASE("event transformation") {
  SUBCASE("preserves the minkowski norm") {
    UniformRng rng(55005);
    for (int trial = 0; trial < 200; ++trial) {
      const SqueezeParam s(rng.uniform(0.0, 3.0), rng.uniform(-kPi, kPi));
      MinkowskiVector x;
      x.x0 = rng.uniform(-10.0, 10.0);
      x.x1 = rng.uniform(-10.0, 10.0);
      x.x2 = rng.uniform(-10.0, 10.0);
      const MinkowskiVector y = transform_event(s, x);
      const double scale = x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2;
      CHECK(std::abs(y.minkowski_norm_sq() - x.minkowski_norm_sq()) <
            1e-10 * std::max(1.0, scale) * std::cosh(2.0 * s.rho()));
    }
  }
  SUBCASE("boosts the time axis onto the frame four-velocity") {
    const SqueezeParam s = velocity_to_squeeze(Velocity2(0.6, 0.0));
    MinkowskiVector e0;
    e0.x0 = 1.0;
    const MinkowskiVector y = transform_event(s, e0);
    CHECK(y.x0 == doctest::Approx(1.25).epsilon(1e-13));
    CHECK(y.x1 == doctest::Approx(-0.75).epsilon(1e-13));
    CHECK(y.x2 == doctest::Approx(0.0));
  }
  SUBCASE("rejects non-finite input") {
    MinkowskiVector x;
    x.x1 = std::nan("");
    CHECK_THROWS_AS(transform_event(SqueezeParam(0.5, 0.0), x), InvalidParameter);
  }
}

TEST_CASE("velocity addition computed through squeeze composition") {
  SUBCASE("headline perpendicular pair") {
    const VelocityAdditionResult r =
        velocity_addition_via_squeeze(Velocity2(0.5, 0.0), Velocity2(0.0, 0.5));
    CHECK(r.w.vx() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.w.vy() == doctest::Approx(0.43301270189221935).epsilon(1e-12));
    // delta = asin(1/7) for this pair
    CHECK(r.delta == doctest::Approx(0.14334756890536532).epsilon(1e-12));
    CHECK(std::sin(r.delta) == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
  }
  SUBCASE("agrees with direct velocity addition") {
    UniformRng rng(13579);
    for (int trial = 0; trial < 500; ++trial) {
      const double su = rng.uniform(0.0, 0.99), du = rng.uniform(-kPi, kPi);
      const double sv = rng.uniform(0.0, 0.99), dv = rng.uniform(-kPi, kPi);
      const Velocity2 u(su * std::cos(du), su * std::sin(du));
      const Velocity2 v(sv * std::cos(dv), sv * std::sin(dv));
      const VelocityAdditionResult r = velocity_addition_via_squeeze(u, v);
      const Velocity2 direct = add_velocities(u, v);
      CHECK(std::abs(r.w.vx() - direct.vx()) < 1e-10);
      CHECK(std::abs(r.w.vy() - direct.vy()) < 1e-10);
    }
  }
  SUBCASE("collinear input leaves no rotation") {
    const VelocityAdditionResult r =
        velocity_addition_via_squeeze(Velocity2(0.3, 0.4), Velocity2(0.15, 0.2));
    CHECK(std::abs(r.delta) < 1e-13);
  }
  SUBCASE("wigner angle matches the spatial rotation left in the boost product") {
    UniformRng rng(86420);
    for (int trial = 0; trial < 100; ++trial) {
      const double su = rng.uniform(0.05, 0.9), du = rng.uniform(-kPi, kPi);
      const double sv = rng.uniform(0.05, 0.9), dv = rng.uniform(-kPi, kPi);
      const Velocity2 u(su * std::cos(du), su * std::sin(du));
      const Velocity2 v(sv * std::cos(dv), sv * std::sin(dv));
      const Mat3 prod = boost_matrix_velocity(u).mat() * boost_matrix_velocity(v).mat();
      const BoostDecomposition d = boost_polar_decompose(prod);
      const VelocityAdditionResult r = velocity_addition_via_squeeze(u, v);
      CHECK(std::abs(d.angle + r.delta) < 1e-10);  // opposite sign conventions
      CHECK(std::abs(-d.boost(1, 0) / d.boost(0, 0) - r.w.vx()) < 1e-9);
      CHECK(std::abs(-d.boost(2, 0) / d.boost(0, 0) - r.w.vy()) < 1e-9);
    }
  }
}
