#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bitop/config.hpp"
#include "bitop/reduction.hpp"

#include <random>

using namespace bitop;

namespace {
const Params kParams{1.0, 2.0, 0.3, 0.1};
}

TEST_CASE("chi split lands on the axial slots") {
  const auto [c1, c2] = split(kParams.chi());
  CHECK(c1(0) == 0.0);
  CHECK(c1(1) == 0.0);
  CHECK(c1(2) == doctest::Approx(-0.2));  // -(chi12 + chi34)/2
  CHECK(c2(2) == doctest::Approx(-0.1));  // -(chi12 - chi34)/2
}

TEST_CASE("to_twisted: zero state, norm policy, linear round trip") {
  const TwistedState z = to_twisted(BodyState{}, kParams, GammaNorm::allow_any);
  CHECK(z.omega1.norm() == 0.0);
  CHECK(z.omega2.norm() == 0.0);
  CHECK(z.gamma1.norm() == 0.0);
  CHECK_THROWS_AS(to_twisted(BodyState{}, kParams), std::invalid_argument);

  std::mt19937_64 rng(301);
  for (int k = 0; k < 50; ++k) {
    const BodyState s = random_state(rng());
    const TwistedState ts = to_twisted(s, kParams);  // unit norms by construction
    const BodyState back = from_twisted(ts, kParams);
    CHECK((back - s).max_abs() < 1e-13 * (1.0 + s.max_abs()));
  }
}

TEST_CASE("pushforward: the twisted field is the transported field") {
  std::mt19937_64 rng(302);
  for (int k = 0; k < 50; ++k) {
    const BodyState s = random_state(rng());
    const BodyState tangent = rhs(s, kParams);
    const TwistedState mapped = to_twisted(tangent, kParams, GammaNorm::allow_any);
    const TwistedState direct = twisted_rhs(to_twisted(s, kParams), kParams);
    const double scale = 1.0 + tangent.max_abs();
    CHECK((mapped.omega1 - direct.omega1).cwiseAbs().maxCoeff() / scale < 1e-10);
    CHECK((mapped.omega2 - direct.omega2).cwiseAbs().maxCoeff() / scale < 1e-10);
    CHECK((mapped.gamma1 - direct.gamma1).cwiseAbs().maxCoeff() / scale < 1e-10);
    CHECK((mapped.gamma2 - direct.gamma2).cwiseAbs().maxCoeff() / scale < 1e-10);
  }

  CHECK(twisted_rhs(TwistedState{}, kParams).omega1.norm() == 0.0);
  CHECK(twisted_rhs(TwistedState{}, kParams).gamma2.norm() == 0.0);
}

TEST_CASE("axial rates vanish and stay constant along flows") {
  std::mt19937_64 rng(303);
  const BodyState s = random_state(rng());
  const TwistedState d = twisted_rhs(to_twisted(s, kParams), kParams);
  CHECK(d.omega1(2) == 0.0);
  CHECK(d.omega2(2) == 0.0);

  const Trajectory traj = integrate(s, kParams, 1e-3, 10000, Method::rk4);
  const TwistedState t0 = to_twisted(traj.states.front(), kParams);
  double drift = 0.0;
  for (const BodyState& st : traj.states) {
    const TwistedState ts = to_twisted(st, kParams, GammaNorm::allow_any);
    drift = std::max(drift, std::abs(ts.omega1(2) - t0.omega1(2)));
    drift = std::max(drift, std::abs(ts.omega2(2) - t0.omega2(2)));
  }
  CHECK(drift < 1e-9);
}

TEST_CASE("reduction constants: frozen values and conservation adjudication") {
  const BodyState s = random_state(304);
  TwistedState ts = to_twisted(s, kParams);
  ts.omega1(2) = 0.0;
  ts.omega2(2) = 0.0;
  const ReductionConstants rc0 = reduction_constants(ts, kParams);
  CHECK(rc0.m == doctest::Approx(2.0 / 3.0));  // -2(1-2)/3
  CHECK(rc0.alpha1 == doctest::Approx(0.0));
  CHECK(rc0.alpha2 == doctest::Approx(0.0));
  CHECK(rc0.gamma1_norm == doctest::Approx(1.0));
  CHECK(rc0.gamma2_norm == doctest::Approx(1.0));

  // the (a+b)^2 leading coefficient conserves; the (a-b)^2 variant drifts
  const Trajectory traj = integrate(s, kParams, 1e-3, 5000, Method::rk4);
  const TwistedState first = to_twisted(traj.states.front(), kParams);
  const double f22_0 = reduction_constants(first, kParams).f22;
  const double amb_0 = f22_with_leading_amb(first, kParams);
  double drift_sym = 0.0, drift_amb = 0.0;
  for (const BodyState& st : traj.states) {
    const TwistedState t = to_twisted(st, kParams, GammaNorm::allow_any);
    drift_sym = std::max(drift_sym,
                         std::abs(reduction_constants(t, kParams).f22 - f22_0));
    drift_amb = std::max(drift_amb, std::abs(f22_with_leading_amb(t, kParams) - amb_0));
  }
  CHECK(drift_sym < 1e-9);
  CHECK(drift_amb > 1e-4);

  // the remaining level-set constants all conserve
  const ReductionConstants ref = reduction_constants(first, kParams);
  double worst = 0.0;
  for (const BodyState& st : traj.states) {
    const TwistedState t = to_twisted(st, kParams, GammaNorm::allow_any);
    const ReductionConstants rc = reduction_constants(t, kParams);
    for (double diff : {rc.f11 - ref.f11, rc.f12 - ref.f12, rc.f13 - ref.f13,
                        rc.f21 - ref.f21, rc.f23 - ref.f23})
      worst = std::max(worst, std::abs(diff));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("cubic data: zero constants and the sign of the constant term") {
  const CubicData zero = cubic_data(ReductionConstants{}, kParams);
  CHECK(zero.b1 == 0.0);
  CHECK(zero.c1 == 0.0);
  CHECK(zero.d1 == 0.0);
  CHECK(zero.b2 == 0.0);
  CHECK(zero.c2 == 0.0);
  CHECK(zero.d2 == 0.0);
  const auto [ez1, ez2] = elliptic_curves(zero);
  CHECK(ez1.g2 == 0.0);
  CHECK(ez1.g3 == 0.0);
  CHECK(ez2.g2 == 0.0);
  CHECK(ez2.g3 == 0.0);

  ReductionConstants rc{};
  rc.n1 = 1.0;
  rc.n2 = 1.0;
  CubicData cd = cubic_data(rc, kParams);
  CHECK(cd.b1 == 0.0);
  CHECK(cd.d1 == 0.0);

  std::mt19937_64 rng(305);
  for (int k = 0; k < 20; ++k) {
    const BodyState s = random_state(rng());
    const ReductionConstants c = reduction_constants(to_twisted(s, kParams), kParams);
    const CubicData d = cubic_data(c, kParams);
    CHECK(d.d1 <= 0.0);  // minus a square
    CHECK(d.d2 <= 0.0);
  }
}

TEST_CASE("cubic closure: equilibrium, generic flows, stencil-order scaling") {
  // equilibrium: u is constant, both sides vanish
  BodyState eq;
  eq.g = merge(Vec3(0, 0, -1), Vec3(0, 0, -1));
  const Trajectory t_eq = integrate(eq, kParams, 1e-3, 100, Method::rk4);
  const CubicResidual r_eq = cubic_residual(t_eq, kParams);
  CHECK(r_eq.res1 < 1e-12);
  CHECK(r_eq.res2 < 1e-12);

  const BodyState s0 = random_state(306);
  const Trajectory traj = integrate(s0, kParams, 1e-3, 5000, Method::rk4);
  const CubicResidual cr = cubic_residual(traj, kParams);
  CHECK(cr.res1 / cr.scale1 < 1e-5);
  CHECK(cr.res2 / cr.scale2 < 1e-5);

  // the residual is dominated by the stencil truncation where resolved
  const CubicResidual coarse = cubic_residual(integrate(s0, kParams, 4e-2, 250, Method::rk4), kParams);
  const CubicResidual fine = cubic_residual(integrate(s0, kParams, 2e-2, 500, Method::rk4), kParams);
  const double ratio = std::max(coarse.res1, coarse.res2) / std::max(fine.res1, fine.res2);
  CHECK(ratio > 8.0);
  CHECK(ratio < 40.0);

  Trajectory tooshort;
  tooshort.params = kParams;
  tooshort.dt = 1e-3;
  for (int k = 0; k < 3; ++k) {
    tooshort.times.push_back(k * 1e-3);
    tooshort.states.push_back(s0);
  }
  CHECK_THROWS_AS(cubic_residual(tooshort, kParams), std::invalid_argument);
}

TEST_CASE("quadrature variants: only the derived square term closes") {
  const BodyState s0 = random_state(307);
  const Trajectory traj = integrate(s0, kParams, 1e-3, 4000, Method::rk4);
  const QuadratureVariants qv = quadrature_variant_residuals(traj, kParams);
  CHECK(qv.derived1 < 1e-8);
  CHECK(qv.derived2 < 1e-8);
  CHECK(qv.undivided1 > 1e-6);
  CHECK(qv.undivided2 > 1e-6);
  CHECK(qv.mispaired2 > 1e-6);
}

TEST_CASE("elliptic curves from the cubics are nondegenerate on generic data") {
  std::mt19937_64 rng(308);
  for (int k = 0; k < 10; ++k) {
    const BodyState s = random_state(rng());
    const CubicData cd =
        cubic_data(reduction_constants(to_twisted(s, kParams), kParams), kParams);
    const auto [e1, e2] = elliptic_curves(cd);
    CHECK(e1.discriminant() != 0.0);
    CHECK(e2.discriminant() != 0.0);
  }
}
