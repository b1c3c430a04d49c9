#pragma once

#include "bitop/dynamics.hpp"
#include "bitop/matpoly.hpp"
#include "bitop/params.hpp"
#include "bitop/poly.hpp"

namespace bitop {

/// The constant unitary change of basis that diagonalizes C.
const CMat4& basis_u();
/// Numeric inverse of basis_u(), computed once and cached.
const CMat4& basis_u_inverse();

CMat4 to_tilde(const CMat4& x);
MatPoly to_tilde(const MatPoly& l);

/// Entries of the transformed Lax matrix in closed form: two quadratic
/// diagonal blocks delta12, delta34 and linear off-diagonal generators
/// beta3 = x3 + lambda*y3, beta4 = x4 + lambda*y4.  The starred variants
/// carry conjugated coefficients (they equal the conjugates only for real
/// lambda).
struct BetaCoords {
  cplx x3, x4, y3, y4;
  ScalarPoly delta12, delta34;  ///< quadratic in the spectral parameter

  cplx beta3(cplx lambda) const { return x3 + lambda * y3; }
  cplx beta4(cplx lambda) const { return x4 + lambda * y4; }
  cplx beta3_star(cplx lambda) const { return std::conj(x3) + lambda * std::conj(y3); }
  cplx beta4_star(cplx lambda) const { return std::conj(x4) + lambda * std::conj(y4); }

  /// The transformed Lax matrix assembled from the closed-form entry
  /// pattern; equals to_tilde(L)(lambda) entrywise.
  CMat4 tilde_matrix(cplx lambda) const;
};

BetaCoords beta_coords(const BodyState& s, const Params& p);

}  // namespace bitop
