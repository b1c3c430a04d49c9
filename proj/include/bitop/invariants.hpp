#pragma once

#include "bitop/dynamics.hpp"
#include "bitop/params.hpp"

#include <Eigen/Dense>

#include <array>
#include <string_view>

namespace bitop {

/// The ten conserved coefficients of the two spectral quartics,
///   trace quartic     P(l) = p4 l^4 + p3 l^3 + p2 l^2 + p1 l + p0
///   pfaffian quartic  Q(l) = q4 l^4 + q3 l^3 + q2 l^2 + q1 l + q0.
/// p4 and q4 depend on the parameters only; p1, p0, q1, q0 are the Casimirs
/// of the coadjoint orbit; p3, p2, q3, q2 are the nontrivial integrals.
struct IntegralSet {
  double p4 = 0, p3 = 0, p2 = 0, p1 = 0, p0 = 0;
  double q4 = 0, q3 = 0, q2 = 0, q1 = 0, q0 = 0;

  std::array<double, 10> values() const {
    return {p4, p3, p2, p1, p0, q4, q3, q2, q1, q0};
  }
  static const std::array<std::string_view, 10>& names();
};

/// Coefficients via the vector pairing of the +/- correspondence.
IntegralSet integral_set(const BodyState& s, const Params& p);
/// Coefficients via direct entrywise expansion; agrees with integral_set
/// to rounding.
IntegralSet integral_set_components(const BodyState& s, const Params& p);
/// Variant of p2 with the m24^2 term dropped.  Not conserved; kept so the
/// adjudication in the verification report can demonstrate that the term
/// is required.
double p2_without_m24(const BodyState& s, const Params& p);

struct IntegralClassification {
  std::array<std::string_view, 4> casimirs;
  std::array<std::string_view, 4> integrals;
  std::array<std::string_view, 2> parameter_constants;
};
IntegralClassification classify(const Params& p);

struct ConservationReport {
  std::array<double, 10> max_rel_drift{};
  double worst() const;
};
/// Per-coefficient max over time of |f(t) - f(0)| / (1 + |f(0)|).
ConservationReport conservation_report(const Trajectory& t);

/// Pairwise numeric brackets among {p3, p2, q3, q2, hamiltonian}.
Eigen::Matrix<double, 5, 5> involution_matrix(const BodyState& s, const Params& p);

/// Largest |{casimir, coordinate}| over the four Casimirs and twelve
/// coordinate functions.
double max_casimir_coordinate_bracket(const BodyState& s, const Params& p);
/// Largest |{integral, hamiltonian}| over the four nontrivial integrals.
double max_integral_hamiltonian_bracket(const BodyState& s, const Params& p);

struct RankReport {
  int rank = 0;
  Eigen::Vector4d singular_values;
};
/// Numeric rank (relative threshold 1e-8) of the 4x12 finite-difference
/// Jacobian of (p3, p2, q3, q2).
RankReport independence_rank(const BodyState& s, const Params& p);

/// Polynomial-fit checks of the Casimir-bearing scalar polynomials:
/// Pf(L(l)) must reproduce the pfaffian quartic coefficientwise, and
/// -1/2 tr(Ltilde(l)^2) must reproduce the l^0, l^1, l^4 coefficients of
/// the trace quartic.  The l^2 and l^3 trace coefficients are recorded but
/// not part of the residual.
struct CasimirPolyCheck {
  double pfaffian_fit_residual = 0.0;
  double trace_fit_residual = 0.0;  ///< l^0, l^1, l^4 coefficients only
  double trace_coeff_l2 = 0.0;
  double trace_coeff_l3 = 0.0;
  double max_imag = 0.0;
};
CasimirPolyCheck casimir_poly_check(const BodyState& s, const Params& p);

}  // namespace bitop
