#pragma once

#include "bitop/dynamics.hpp"
#include "bitop/params.hpp"
#include "bitop/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bitop {

/// State of the degree-N flow: L(l) = l^N B + l^{N-1} M_1 + ... + M_N with
/// B = d*chi.  mats holds M_1 ... M_N.
struct HierState {
  double d = 1.0;
  std::vector<Skew4> mats;

  int order() const { return static_cast<int>(mats.size()); }
  Skew4 bmat(const Params& p) const { return d * p.chi(); }
};

HierState make_hier_state(double d, std::vector<Skew4> mats);

struct HierTangent {
  std::vector<Skew4> dmats;
  /// || [chi, M_1] - [B, omega] ||_F for the omega actually used.
  double constraint_residual = 0.0;
};

/// dM_N = [M_N, omega]; dM_k = [M_k, omega] - [chi, M_{k+1}] for k < N.
HierTangent hier_rhs(const HierState& hs, const Skew4& omega, const Params& p);

struct OmegaPolicyResult {
  Skew4 omega;
  double constraint_residual = 0.0;
  double scale = 1.0;        ///< least-squares multiplier applied to omega_from_m(M_1)
  double chi_component = 0.0;  ///< along chi; always 0 ([B, chi] = 0)
  int centralizer_dim = 2;   ///< skew centralizer of chi (spans of the two blocks)
};

/// Angular velocity for the degree-N flow: least squares over the family
/// s * omega_from_m(M_1) + t * chi against the constraint [chi, M_1] = [B, omega].
/// The two commutators are parallel, so the residual vanishes to rounding and
/// the flow below is isospectral; the t-direction lies in the centralizer of
/// chi and drops out.  At N = 2 with B = (a+b) chi this is omega_from_m(M).
OmegaPolicyResult omega_policy(const HierState& hs, const Params& p);

std::vector<HierState> integrate_hier(const HierState& hs0, const Params& p, double dt,
                                      int steps);

/// Spectral data of the degree-N matrix polynomial: P_N and Q_N with
/// deg P_N = deg Q_N = 2N, extracted by interpolation of the characteristic
/// coefficients at 4N+1 Chebyshev sample points; genus 2N-1 of the
/// hyperelliptic model when P_N^2/4 - Q_N^2 is squarefree.
struct HierSpectral {
  ScalarPoly ppoly, qpoly;
  int degree_p = 0, degree_q = 0;
  std::optional<int> genus;
  bool degenerate = false;
  std::string note;
  double interp_tail = 0.0;  ///< largest fitted coefficient above degree 2N
};

HierSpectral hier_spectral(const HierState& hs, const Params& p);

/// Branch points of the hyperelliptic model labeled by which covering factor
/// (P/2 - Q or P/2 + Q) annihilates them.
struct CoveringPartition {
  std::vector<cplx> roots;
  std::vector<int> side;  ///< 0 = plus factor, 1 = minus factor
  int plus_count = 0, minus_count = 0;
  int ambiguous = 0;
  double factorization_residual = 0.0;  ///< (P/2-Q)(P/2+Q) vs P^2/4 - Q^2
  double max_match_distance = 0.0;      ///< roots vs factor roots
};

CoveringPartition equal_split(const ScalarPoly& pn, const ScalarPoly& qn);

/// True iff both sides of the branch-point partition have g+1 = half of the
/// points.  Throws std::invalid_argument when a side is empty or odd-sized.
bool is_equally_split(const std::vector<int>& sides);

}  // namespace bitop
