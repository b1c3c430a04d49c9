#include "bitop/basis.hpp"

#include <cmath>

namespace bitop {

namespace {

CMat4 make_u() {
  const double h = std::sqrt(2.0) / 2.0;
  const cplx ih(0.0, h);
  CMat4 u;
  // clang-format off
  u << 0.0, 0.0,  ih,   h,
       0.0, 0.0,   h,  ih,
        ih,   h, 0.0, 0.0,
         h,  ih, 0.0, 0.0;
  // clang-format on
  return u;
}

}  // namespace

const CMat4& basis_u() {
  static const CMat4 u = make_u();
  return u;
}

const CMat4& basis_u_inverse() {
  static const CMat4 uinv = basis_u().inverse().eval();
  return uinv;
}

CMat4 to_tilde(const CMat4& x) { return basis_u_inverse() * x * basis_u(); }

MatPoly to_tilde(const MatPoly& l) {
  MatPoly out;
  out.coeffs.reserve(l.coeffs.size());
  for (const CMat4& c : l.coeffs) out.coeffs.push_back(to_tilde(c));
  return out;
}

BetaCoords beta_coords(const BodyState& s, const Params& p) {
  const Skew4 c = p.cmat();
  BetaCoords bc;
  bc.x3 = 0.5 * cplx(s.g.m13, s.g.m23);
  bc.x4 = 0.5 * cplx(s.g.m14, s.g.m24);
  bc.y3 = 0.5 * cplx(s.m.m13, s.m.m23);
  bc.y4 = 0.5 * cplx(s.m.m14, s.m.m24);
  bc.delta12 = ScalarPoly({cplx(s.g.m12), cplx(s.m.m12), cplx(c.m12)});
  bc.delta34 = ScalarPoly({cplx(s.g.m34), cplx(s.m.m34), cplx(c.m34)});
  return bc;
}

CMat4 BetaCoords::tilde_matrix(cplx lambda) const {
  const cplx i(0.0, 1.0);
  const cplx d12 = delta12.eval(lambda);
  const cplx d34 = delta34.eval(lambda);
  const cplx b3 = beta3(lambda), b4 = beta4(lambda);
  const cplx b3s = beta3_star(lambda), b4s = beta4_star(lambda);
  CMat4 t;
  // clang-format off
  t << -i * d34,      cplx(0.0),    -b3s - i * b4s,  i * b3 - b4,
       cplx(0.0),     i * d34,      -i * b3s - b4s,  -b3 + i * b4,
       b3 - i * b4,   -i * b3 + b4, -i * d12,        cplx(0.0),
       i * b3s + b4s, b3s + i * b4s, cplx(0.0),      i * d12;
  // clang-format on
  return t;
}

}  // namespace bitop
