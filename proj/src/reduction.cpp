#include "bitop/reduction.hpp"

#include <cmath>
#include <stdexcept>

namespace bitop {

namespace {

constexpr double kUnitNormTol = 1e-9;

Vec3 chi_vec(const Params& p, int group) {
  const auto [cp, cm] = split(p.chi());
  return group == 1 ? cp : cm;
}

}  // namespace

TwistedState to_twisted(const BodyState& s, const Params& p, GammaNorm norm) {
  p.validate();
  const auto [m1, m2] = split(s.m);
  const auto [g1, g2] = split(s.g);
  TwistedState ts;
  ts.gamma1 = g1;
  ts.gamma2 = g2;
  // First two angular-velocity components decouple; the third components
  // solve the 2x2 system [[a+b, a-b], [a-b, a+b]] (omega1_3, omega2_3)^T =
  // (m1_3, m2_3)^T with determinant 4ab.
  const double ab = p.a + p.b;
  const double amb = p.a - p.b;
  const double det = 4.0 * p.a * p.b;
  ts.omega1(0) = m1(0) / ab;
  ts.omega1(1) = m1(1) / ab;
  ts.omega2(0) = m2(0) / ab;
  ts.omega2(1) = m2(1) / ab;
  ts.omega1(2) = (ab * m1(2) - amb * m2(2)) / det;
  ts.omega2(2) = (-amb * m1(2) + ab * m2(2)) / det;
  if (norm == GammaNorm::require_unit) {
    if (std::abs(ts.gamma1.norm() - 1.0) > kUnitNormTol ||
        std::abs(ts.gamma2.norm() - 1.0) > kUnitNormTol)
      throw std::invalid_argument("to_twisted: gamma vectors are not unit");
  }
  return ts;
}

BodyState from_twisted(const TwistedState& ts, const Params& p) {
  p.validate();
  const double ab = p.a + p.b;
  const double amb = p.a - p.b;
  Vec3 m1, m2;
  m1 << ab * ts.omega1(0), ab * ts.omega1(1), ab * ts.omega1(2) + amb * ts.omega2(2);
  m2 << ab * ts.omega2(0), ab * ts.omega2(1), amb * ts.omega1(2) + ab * ts.omega2(2);
  BodyState s;
  s.m = merge(m1, m2);
  s.g = merge(ts.gamma1, ts.gamma2);
  return s;
}

TwistedState twisted_rhs(const TwistedState& ts, const Params& p) {
  p.validate();
  const double ab = p.a + p.b;
  const double m = -2.0 * (p.a - p.b) / ab;
  const double n1 = -2.0 * chi_vec(p, 1)(2) / ab;
  const double n2 = -2.0 * chi_vec(p, 2)(2) / ab;
  const double p1 = ts.omega1(0), q1 = ts.omega1(1);
  const double p2 = ts.omega2(0), q2 = ts.omega2(1);
  const double r1 = ts.omega1(2), r2 = ts.omega2(2);
  TwistedState d;
  d.omega1(0) = m * q1 * r2 - n1 * ts.gamma1(1);
  d.omega1(1) = -m * p1 * r2 + n1 * ts.gamma1(0);
  d.omega2(0) = m * q2 * r1 - n2 * ts.gamma2(1);
  d.omega2(1) = -m * p2 * r1 + n2 * ts.gamma2(0);
  // The homogeneous pair of r-equations has an invertible matrix (det 4ab),
  // so both axial rates vanish.
  d.omega1(2) = 0.0;
  d.omega2(2) = 0.0;
  d.gamma1 = 2.0 * ts.gamma1.cross(ts.omega1);
  d.gamma2 = 2.0 * ts.gamma2.cross(ts.omega2);
  return d;
}

ReductionConstants reduction_constants(const TwistedState& ts, const Params& p) {
  p.validate();
  const double ab = p.a + p.b;
  const double amb = p.a - p.b;
  ReductionConstants rc;
  rc.m = -2.0 * amb / ab;
  const double chi13 = chi_vec(p, 1)(2);
  const double chi23 = chi_vec(p, 2)(2);
  rc.n1 = -2.0 * chi13 / ab;
  rc.n2 = -2.0 * chi23 / ab;
  const double r1 = ts.omega1(2), r2 = ts.omega2(2);
  const double axial1 = ab * r1 + amb * r2;
  const double axial2 = amb * r1 + ab * r2;
  rc.alpha1 = axial1 / ab;
  rc.alpha2 = axial2 / ab;
  const double p1 = ts.omega1(0), q1 = ts.omega1(1);
  const double p2 = ts.omega2(0), q2 = ts.omega2(1);
  rc.f11 = axial1 * chi13;
  rc.f12 = ab * ab * (p1 * p1 + q1 * q1) + axial1 * axial1 + 2.0 * ab * chi13 * ts.gamma1(2);
  rc.f13 = ab * p1 * ts.gamma1(0) + ab * q1 * ts.gamma1(1) + axial1 * ts.gamma1(2);
  rc.f21 = axial2 * chi23;
  // Conserved leading coefficient (a+b)^2 (adjudicated; see
  // f22_with_leading_amb for the drifting variant).
  rc.f22 = ab * ab * (p2 * p2 + q2 * q2) + axial2 * axial2 + 2.0 * ab * chi23 * ts.gamma2(2);
  rc.f23 = ab * p2 * ts.gamma2(0) + ab * q2 * ts.gamma2(1) + axial2 * ts.gamma2(2);
  rc.a1 = (rc.alpha1 * rc.alpha1 * ab * ab - rc.f12) / (ab * ab);
  rc.a2 = (rc.alpha2 * rc.alpha2 * ab * ab - rc.f22) / (ab * ab);
  rc.gamma1_norm = ts.gamma1.norm();
  rc.gamma2_norm = ts.gamma2.norm();
  return rc;
}

double f22_with_leading_amb(const TwistedState& ts, const Params& p) {
  const double ab = p.a + p.b;
  const double amb = p.a - p.b;
  const double chi23 = chi_vec(p, 2)(2);
  const double axial2 = amb * ts.omega1(2) + ab * ts.omega2(2);
  const double p2 = ts.omega2(0), q2 = ts.omega2(1);
  return amb * amb * (p2 * p2 + q2 * q2) + axial2 * axial2 +
         2.0 * ab * chi23 * ts.gamma2(2);
}

CubicData cubic_data(const ReductionConstants& rc, const Params& p) {
  const double ab2 = (p.a + p.b) * (p.a + p.b);
  const double chi13 = chi_vec(p, 1)(2);
  const double chi23 = chi_vec(p, 2)(2);
  auto one_group = [&](double ai, double alphai, double chii, double fi3, double ni,
                       double& bo, double& co, double& do_) {
    bo = 2.0 * ai + alphai * alphai;
    co = ni * ni - ai * ai - 4.0 * alphai * chii * fi3 / ab2 -
         2.0 * alphai * alphai * ai;
    const double w = 2.0 * chii * fi3 / ab2 + alphai * ai;
    do_ = -4.0 * w * w;
  };
  CubicData cd;
  one_group(rc.a1, rc.alpha1, chi13, rc.f13, rc.n1, cd.b1, cd.c1, cd.d1);
  one_group(rc.a2, rc.alpha2, chi23, rc.f23, rc.n2, cd.b2, cd.c2, cd.d2);
  return cd;
}

namespace {

double cubic_eval(double u, double bc, double cc, double dc) {
  return -4.0 * u * u * u - 4.0 * bc * u * u + 4.0 * cc * u + dc;
}

struct StencilSeries {
  std::vector<double> u1, u2;
};

StencilSeries twisted_series(const Trajectory& t, const Params& p) {
  StencilSeries ss;
  ss.u1.reserve(t.states.size());
  ss.u2.reserve(t.states.size());
  for (const BodyState& s : t.states) {
    const TwistedState ts = to_twisted(s, p, GammaNorm::allow_any);
    ss.u1.push_back(ts.omega1(0) * ts.omega1(0) + ts.omega1(1) * ts.omega1(1));
    ss.u2.push_back(ts.omega2(0) * ts.omega2(0) + ts.omega2(1) * ts.omega2(1));
  }
  return ss;
}

}  // namespace

CubicResidual cubic_residual(const Trajectory& t, const Params& p) {
  if (t.states.size() < 5)
    throw std::invalid_argument("cubic_residual: trajectory too short for the stencil");
  const TwistedState ts0 = to_twisted(t.states.front(), p, GammaNorm::allow_any);
  const ReductionConstants rc = reduction_constants(ts0, p);
  const CubicData cd = cubic_data(rc, p);
  const StencilSeries ss = twisted_series(t, p);
  const double dt = t.dt;
  CubicResidual out;
  auto run = [&](const std::vector<double>& u, double bc, double cc, double dc,
                 double& res, double& scale) {
    for (std::size_t k = 2; k + 2 < u.size(); ++k) {
      const double ud =
          (u[k - 2] - 8.0 * u[k - 1] + 8.0 * u[k + 1] - u[k + 2]) / (12.0 * dt);
      const double rhs = cubic_eval(u[k], bc, cc, dc);
      res = std::max(res, std::abs(ud * ud - rhs));
      scale = std::max(scale, std::max(std::abs(ud * ud), std::abs(rhs)));
    }
  };
  run(ss.u1, cd.b1, cd.c1, cd.d1, out.res1, out.scale1);
  run(ss.u2, cd.b2, cd.c2, cd.d2, out.res2, out.scale2);
  return out;
}

QuadratureVariants quadrature_variant_residuals(const Trajectory& t, const Params& p) {
  if (t.states.size() < 5)
    throw std::invalid_argument("quadrature variants: trajectory too short");
  const TwistedState ts0 = to_twisted(t.states.front(), p, GammaNorm::allow_any);
  const ReductionConstants rc = reduction_constants(ts0, p);
  const StencilSeries ss = twisted_series(t, p);
  const double ab = p.a + p.b;
  const double dt = t.dt;

  // udot^2 = 4 n^2 u [1 - (a + u)^2 / n^2] - 4 n^2 (f3/(a+b) - S(u))^2 with
  // three candidate square terms S(u).
  auto residual = [&](const std::vector<double>& u, double ni, double ai, double fi3,
                      double alpha_sq_term, bool divided) {
    double res = 0.0;
    for (std::size_t k = 2; k + 2 < u.size(); ++k) {
      const double ud =
          (u[k - 2] - 8.0 * u[k - 1] + 8.0 * u[k + 1] - u[k + 2]) / (12.0 * dt);
      const double bracket = 1.0 - (ai + u[k]) * (ai + u[k]) / (ni * ni);
      const double sterm = divided ? (alpha_sq_term / ni) * (ai + u[k])
                                   : alpha_sq_term * ai + (alpha_sq_term / ni) * u[k];
      const double sq = fi3 / ab - sterm;
      const double rhs = 4.0 * ni * ni * u[k] * bracket - 4.0 * ni * ni * sq * sq;
      res = std::max(res, std::abs(ud * ud - rhs));
    }
    return res;
  };

  QuadratureVariants qv;
  qv.derived1 = residual(ss.u1, rc.n1, rc.a1, rc.f13, rc.alpha1, true);
  qv.undivided1 = residual(ss.u1, rc.n1, rc.a1, rc.f13, rc.alpha1, false);
  qv.derived2 = residual(ss.u2, rc.n2, rc.a2, rc.f23, rc.alpha2, true);
  qv.undivided2 = residual(ss.u2, rc.n2, rc.a2, rc.f23, rc.alpha2, false);
  // alpha1 paired with group 2 (suspected index slip).
  double res = 0.0;
  for (std::size_t k = 2; k + 2 < ss.u2.size(); ++k) {
    const double ud = (ss.u2[k - 2] - 8.0 * ss.u2[k - 1] + 8.0 * ss.u2[k + 1] -
                       ss.u2[k + 2]) /
                      (12.0 * dt);
    const double bracket = 1.0 - (rc.a2 + ss.u2[k]) * (rc.a2 + ss.u2[k]) / (rc.n2 * rc.n2);
    const double sq = rc.f23 / ab - rc.alpha2 * rc.a2 - (rc.alpha1 / rc.n2) * ss.u2[k];
    const double rhs =
        4.0 * rc.n2 * rc.n2 * ss.u2[k] * bracket - 4.0 * rc.n2 * rc.n2 * sq * sq;
    res = std::max(res, std::abs(ud * ud - rhs));
  }
  qv.mispaired2 = res;
  return qv;
}

std::pair<QuarticInvariants, QuarticInvariants> elliptic_curves(const CubicData& cd) {
  return {weierstrass_from_cubic(cd.b1, cd.c1, cd.d1),
          weierstrass_from_cubic(cd.b2, cd.c2, cd.d2)};
}

}  // namespace bitop
