#pragma once

#include "bitop/matpoly.hpp"
#include "bitop/params.hpp"
#include "bitop/skew4.hpp"

#include <utility>
#include <vector>

namespace bitop {

/// Phase point: kinetic momentum m and Poisson matrix g, both in so(4).
struct BodyState {
  Skew4 m;
  Skew4 g;

  BodyState& operator+=(const BodyState& o) {
    m += o.m;
    g += o.g;
    return *this;
  }
  BodyState& operator-=(const BodyState& o) {
    m -= o.m;
    g -= o.g;
    return *this;
  }
  BodyState& operator*=(double c) {
    m *= c;
    g *= c;
    return *this;
  }
  friend BodyState operator+(BodyState a, const BodyState& b) { return a += b; }
  friend BodyState operator-(BodyState a, const BodyState& b) { return a -= b; }
  friend BodyState operator*(double c, BodyState a) { return a *= c; }

  double max_abs() const { return std::max(m.max_abs(), g.max_abs()); }
  bool is_finite() const { return m.is_finite() && g.is_finite(); }
};

/// Angular velocity from kinetic momentum: omega_ij = m_ij / (I_i + I_j).
Skew4 omega_from_m(const Skew4& m, const Params& p);
Skew4 m_from_omega(const Skew4& omega, const Params& p);

/// Equations of motion: dm = [m, omega] + [g, chi], dg = [g, omega].
BodyState rhs(const BodyState& s, const Params& p);

/// L(lambda) = lambda^2 C + lambda m + g as a matrix polynomial.
MatPoly lax_matrix(const BodyState& s, const Params& p);
/// A(lambda) = lambda chi + omega.
MatPoly lax_flow_matrix(const BodyState& s, const Params& p);

/// (L(lambda), A(lambda)) evaluated at a spectral parameter value.
std::pair<CMat4, CMat4> lax_pair(const BodyState& s, const Params& p, cplx lambda);

/// || lambda*dm + dg - [L, A] ||_F / (1 + ||L|| ||A||).  Vanishes identically
/// along the equations of motion (algebraic identity, not an approximation).
double lax_residual(const BodyState& s, const Params& p, cplx lambda);

/// The kinetic sum of the energy has six momentum/velocity products.  The
/// `omit_m24` variant drops the m24*omega24 term; it is kept only so the
/// conservation oracle can document that it is not a first integral.
enum class HamiltonianForm { full_kinetic, omit_m24 };

double hamiltonian(const BodyState& s, const Params& p,
                   HamiltonianForm form = HamiltonianForm::full_kinetic);

enum class Method { rk4, midpoint };

struct Trajectory {
  std::vector<double> times;
  std::vector<BodyState> states;
  Params params;
  Method method = Method::rk4;
  double dt = 0.0;

  int steps() const { return static_cast<int>(states.size()) - 1; }
};

/// Fixed-step integration: classical RK4 or the implicit midpoint rule
/// (fixed-point iteration, tolerance 1e-13, at most 50 sweeps).
/// Throws std::runtime_error on non-convergence or non-finite states.
Trajectory integrate(const BodyState& s0, const Params& p, double dt, int steps,
                     Method method);

}  // namespace bitop
