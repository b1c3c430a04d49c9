#pragma once

#include "bitop/basis.hpp"
#include "bitop/dynamics.hpp"
#include "bitop/invariants.hpp"
#include "bitop/params.hpp"
#include "bitop/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bitop {

/// The two real quartics of the spectral polynomial
///   det(Ltilde(l) - mu) = mu^4 + P(l) mu^2 + Q(l)^2,
/// built from the closed-form entries (delta/beta route).  Imaginary parts
/// of the result stay below 1e-12 and are dropped.
std::pair<ScalarPoly, ScalarPoly> pq_from_state(const BodyState& s, const Params& p);

/// Same quartics assembled from the ten conserved coefficients.
std::pair<ScalarPoly, ScalarPoly> pq_from_integrals(const IntegralSet& f);

/// Max scaled residual between the characteristic polynomial of Ltilde(l)
/// (Newton-identity expansion in mu) and mu^4 + P(l) mu^2 + Q(l)^2.  The
/// mu^3 and mu^1 coefficients are part of the residual (they must vanish).
double char_poly_check(const BodyState& s, const Params& p, cplx lambda);

/// Genus bookkeeping for the spectral curve at a phase point.  Genus fields
/// are set only when the degree-8 discriminant-like polynomial P^2/4 - Q^2 is
/// squarefree and Q has four simple roots; otherwise `degenerate` is set with
/// a reason.
struct CurveSummary {
  ScalarPoly disc8;  ///< P^2/4 - Q^2
  std::vector<cplx> qroots;
  std::optional<int> genus_quotient;    ///< hyperelliptic quotient curve
  std::optional<int> arith_genus;       ///< singular spectral curve
  std::optional<int> genus_normalized;  ///< after resolving the double points
  bool degenerate = false;
  std::string degenerate_reason;
  double min_qroot_gap = 0.0;
  double squarefree_min_remainder = 0.0;
};

CurveSummary curve_summary(const ScalarPoly& pquartic, const ScalarPoly& qquartic);

/// Singular-point conditions at the four zeros of Q: the point (l_k, 0)
/// must annihilate the spectral polynomial and both first partials.
struct DoublePointCheck {
  std::vector<cplx> points;
  double max_residual = 0.0;
  /// Smallest |Hessian determinant| over the four points; nonzero means the
  /// double points are ordinary.
  double min_hessian = 0.0;
  bool degenerate = false;
  std::string degenerate_reason;
};

DoublePointCheck double_point_check(const BodyState& s, const Params& p);

/// Closed-form (non-normalized) eigenvector of Ltilde(lambda) at a point
/// (lambda, mu) of the spectral curve.  Throws std::invalid_argument off the
/// curve and std::domain_error when the formula degenerates (zero vector).
Eigen::Vector4cd curve_eigenvector(const BodyState& s, const Params& p, cplx lambda,
                                   cplx mu);

/// Max drift over time and sample values of (P(l), Q(l)) relative to t=0.
double isospectral_drift(const Trajectory& t, const std::vector<double>& lambda_samples);

/// The two covering quartics scaled by s = 2/(a+b)^2:
///   quartic+ = s (P/2 + Q),  quartic- = s (P/2 - Q).
std::pair<ScalarPoly, ScalarPoly> covering_quartics(const ScalarPoly& pquartic,
                                                    const ScalarPoly& qquartic,
                                                    const Params& p);
double covering_scale(const Params& p);

/// Coefficients (constant term first) of P/2 + sign*Q assembled directly
/// from factored matrix-entry products.  `opposed_gamma_sign` selects the
/// sign pairing of the (g13, g24) factor in the linear coefficient: the
/// opposed pairing (g13 - sign*g24) is the one that matches s(P/2 + sign*Q);
/// the aligned variant is kept for the adjudication report.
std::array<double, 5> covering_coeffs_direct(const BodyState& s, const Params& p,
                                             int sign, bool opposed_gamma_sign);

struct QuarticInvariants {
  double g2 = 0.0;
  double g3 = 0.0;
  double discriminant() const { return g2 * g2 * g2 - 27.0 * g3 * g3; }
  /// j = 1728 g2^3 / (g2^3 - 27 g3^2); classifies the curve up to isomorphism.
  double j_invariant() const;
};

/// Weierstrass invariants of y^2 = quartic via the (1,4,6,4,1) normalization
///   y^2 = a l^4 + 4b l^3 + 6c l^2 + 4d l + e,
///   g2 = ae - 4bd + 3c^2,  g3 = ace + 2bcd - ad^2 - eb^2 - c^3.
/// Throws std::invalid_argument when the quartic degenerates to lower degree.
QuarticInvariants weierstrass_from_quartic(const ScalarPoly& quartic);

/// Invariants of y^2 = -4u^3 - 4B u^2 + 4C u + D brought to canonical form
/// by u -> -(w + B/3):  g2 = 4(B^2/3 + C),  g3 = 4(2B^3/27 + BC/3 - D/4).
QuarticInvariants weierstrass_from_cubic(double bcoef, double ccoef, double dcoef);

}  // namespace bitop
