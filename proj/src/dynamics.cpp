#include "bitop/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace bitop {

Skew4 omega_from_m(const Skew4& m, const Params& p) {
  p.validate();
  Skew4 w;
  w.m12 = m.m12 / p.inertia_sum(0, 1);
  w.m13 = m.m13 / p.inertia_sum(0, 2);
  w.m14 = m.m14 / p.inertia_sum(0, 3);
  w.m23 = m.m23 / p.inertia_sum(1, 2);
  w.m24 = m.m24 / p.inertia_sum(1, 3);
  w.m34 = m.m34 / p.inertia_sum(2, 3);
  return w;
}

Skew4 m_from_omega(const Skew4& omega, const Params& p) {
  p.validate();
  Skew4 m;
  m.m12 = omega.m12 * p.inertia_sum(0, 1);
  m.m13 = omega.m13 * p.inertia_sum(0, 2);
  m.m14 = omega.m14 * p.inertia_sum(0, 3);
  m.m23 = omega.m23 * p.inertia_sum(1, 2);
  m.m24 = omega.m24 * p.inertia_sum(1, 3);
  m.m34 = omega.m34 * p.inertia_sum(2, 3);
  return m;
}

BodyState rhs(const BodyState& s, const Params& p) {
  const Skew4 omega = omega_from_m(s.m, p);
  const Skew4 chi = p.chi();
  BodyState tangent;
  tangent.m = commutator(s.m, omega) + commutator(s.g, chi);
  tangent.g = commutator(s.g, omega);
  return tangent;
}

MatPoly lax_matrix(const BodyState& s, const Params& p) {
  return MatPoly({s.g.cmatrix(), s.m.cmatrix(), p.cmat().cmatrix()});
}

MatPoly lax_flow_matrix(const BodyState& s, const Params& p) {
  return MatPoly({omega_from_m(s.m, p).cmatrix(), p.chi().cmatrix()});
}

std::pair<CMat4, CMat4> lax_pair(const BodyState& s, const Params& p, cplx lambda) {
  return {lax_matrix(s, p).eval(lambda), lax_flow_matrix(s, p).eval(lambda)};
}

double lax_residual(const BodyState& s, const Params& p, cplx lambda) {
  const auto [l, a] = lax_pair(s, p, lambda);
  const BodyState tangent = rhs(s, p);
  const CMat4 ldot = lambda * tangent.m.cmatrix() + tangent.g.cmatrix();
  const double res = (ldot - commutator(l, a)).norm();
  return res / (1.0 + l.norm() * a.norm());
}

double hamiltonian(const BodyState& s, const Params& p, HamiltonianForm form) {
  const Skew4 w = omega_from_m(s.m, p);
  double kinetic = s.m.m13 * w.m13 + s.m.m14 * w.m14 + s.m.m23 * w.m23 +
                   s.m.m12 * w.m12 + s.m.m34 * w.m34;
  if (form == HamiltonianForm::full_kinetic) kinetic += s.m.m24 * w.m24;
  return 0.5 * kinetic + p.chi12 * s.g.m12 + p.chi34 * s.g.m34;
}

namespace {

BodyState rk4_step(const BodyState& s, const Params& p, double dt) {
  const BodyState k1 = rhs(s, p);
  const BodyState k2 = rhs(s + (0.5 * dt) * k1, p);
  const BodyState k3 = rhs(s + (0.5 * dt) * k2, p);
  const BodyState k4 = rhs(s + dt * k3, p);
  return s + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

BodyState midpoint_step(const BodyState& s, const Params& p, double dt) {
  constexpr double kTol = 1e-13;
  constexpr int kMaxIter = 50;
  BodyState next = s + dt * rhs(s, p);  // forward-Euler predictor
  for (int it = 0; it < kMaxIter; ++it) {
    const BodyState candidate = s + dt * rhs(0.5 * (s + next), p);
    const double delta = (candidate - next).max_abs();
    next = candidate;
    if (delta <= kTol * (1.0 + next.max_abs())) return next;
  }
  throw std::runtime_error("implicit midpoint iteration did not converge");
}

}  // namespace

Trajectory integrate(const BodyState& s0, const Params& p, double dt, int steps,
                     Method method) {
  p.validate();
  if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");
  if (steps < 1) throw std::invalid_argument("integrate: steps must be >= 1");
  Trajectory traj;
  traj.params = p;
  traj.method = method;
  traj.dt = dt;
  traj.times.reserve(static_cast<std::size_t>(steps) + 1);
  traj.states.reserve(static_cast<std::size_t>(steps) + 1);
  BodyState s = s0;
  traj.times.push_back(0.0);
  traj.states.push_back(s);
  for (int k = 1; k <= steps; ++k) {
    s = method == Method::rk4 ? rk4_step(s, p, dt) : midpoint_step(s, p, dt);
    if (!s.is_finite()) throw std::runtime_error("integrate: state became non-finite");
    traj.times.push_back(k * dt);
    traj.states.push_back(s);
  }
  return traj;
}

}  // namespace bitop
