#pragma once

#include "bitop/dynamics.hpp"
#include "bitop/params.hpp"
#include "bitop/spectral.hpp"

#include <utility>

namespace bitop {

/// The classical picture: two coupled three-dimensional tops with angular
/// velocities omega1 = (p1, q1, r1), omega2 = (p2, q2, r2) and unit Poisson
/// vectors gamma1, gamma2.
struct TwistedState {
  Vec3 omega1 = Vec3::Zero();
  Vec3 omega2 = Vec3::Zero();
  Vec3 gamma1 = Vec3::Zero();
  Vec3 gamma2 = Vec3::Zero();
};

enum class GammaNorm { require_unit, allow_any };

/// Linear bijection from the full phase point.  With `require_unit` the
/// gamma norms must equal 1 within 1e-9 (the natural normalization of the
/// reduced integrals); `allow_any` skips the check (zero fixtures, scans).
TwistedState to_twisted(const BodyState& s, const Params& p,
                        GammaNorm norm = GammaNorm::require_unit);
BodyState from_twisted(const TwistedState& ts, const Params& p);

/// Vector field in twisted coordinates; r1 and r2 are constants of motion
/// (their two coupled equations have the invertible coefficient matrix
/// [[a+b, a-b], [a-b, a+b]], det 4ab).
TwistedState twisted_rhs(const TwistedState& ts, const Params& p);

/// Gyroscopic and level-set constants of the reduced system.  f22 uses the
/// conserved leading coefficient (a+b)^2; see f22_with_leading_amb for the
/// non-conserved variant kept for adjudication.
struct ReductionConstants {
  double m = 0, n1 = 0, n2 = 0;
  double alpha1 = 0, alpha2 = 0;
  double a1 = 0, a2 = 0;
  double f11 = 0, f12 = 0, f13 = 0;
  double f21 = 0, f22 = 0, f23 = 0;
  double gamma1_norm = 0, gamma2_norm = 0;
};

ReductionConstants reduction_constants(const TwistedState& ts, const Params& p);
/// f22 variant with leading coefficient (a-b)^2 instead of (a+b)^2.
double f22_with_leading_amb(const TwistedState& ts, const Params& p);

/// Coefficients of the two cubics P_i(u) = -4u^3 - 4 B_i u^2 + 4 C_i u + D_i
/// governing u_i = p_i^2 + q_i^2 through udot_i^2 = P_i(u_i).
struct CubicData {
  double b1 = 0, c1 = 0, d1 = 0;
  double b2 = 0, c2 = 0, d2 = 0;
};

CubicData cubic_data(const ReductionConstants& rc, const Params& p);

/// Closure residuals max_t |udot_i^2 - P_i(u_i)| with udot from a 5-point
/// central stencil on the stored trajectory (independent of the vector
/// field).  Throws when the trajectory is too short for the stencil.
struct CubicResidual {
  double res1 = 0, res2 = 0;
  double scale1 = 1, scale2 = 1;
};

CubicResidual cubic_residual(const Trajectory& t, const Params& p);

/// Closure residuals of the quadrature right-hand sides for group i written
/// three ways: the derived form (f_i3/(a+b) - (alpha_i/n_i)(a_i + u)) inside
/// the square, the variant with the alpha_i a_i term not divided by n_i, and
/// (group 2 only) the variant pairing alpha_1 with group 2.  The derived
/// form is the one the cubic coefficients expand from.
struct QuadratureVariants {
  double derived1 = 0, undivided1 = 0;
  double derived2 = 0, undivided2 = 0, mispaired2 = 0;
};

QuadratureVariants quadrature_variant_residuals(const Trajectory& t, const Params& p);

/// Weierstrass invariants of the two reduced elliptic curves y^2 = P_i(u).
std::pair<QuarticInvariants, QuarticInvariants> elliptic_curves(const CubicData& cd);

}  // namespace bitop
