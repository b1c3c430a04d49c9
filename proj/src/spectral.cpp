#include "bitop/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bitop {

namespace {

ScalarPoly conj_coeffs(const ScalarPoly& p) {
  std::vector<cplx> c = p.coeffs();
  for (cplx& v : c) v = std::conj(v);
  return ScalarPoly(std::move(c));
}

/// Coefficients of det(x - mu I) in mu via Newton's identities on the power
/// sums tr(x^k):  det(x - mu I) = mu^4 - e1 mu^3 + e2 mu^2 - e3 mu + e4.
std::array<cplx, 5> char_poly_coeffs(const CMat4& x) {
  const CMat4 x2 = x * x;
  const CMat4 x3 = x2 * x;
  const cplx s1 = x.trace();
  const cplx s2 = x2.trace();
  const cplx s3 = x3.trace();
  const cplx s4 = (x2 * x2).trace();
  const cplx e1 = s1;
  const cplx e2 = (e1 * s1 - s2) / 2.0;
  const cplx e3 = (e2 * s1 - e1 * s2 + s3) / 3.0;
  const cplx e4 = (e3 * s1 - e2 * s2 + e1 * s3 - s4) / 4.0;
  return {e4, -e3, e2, -e1, cplx(1.0)};  // constant term first
}

}  // namespace

std::pair<ScalarPoly, ScalarPoly> pq_from_state(const BodyState& s, const Params& p) {
  const BetaCoords bc = beta_coords(s, p);
  const ScalarPoly b3({bc.x3, bc.y3});
  const ScalarPoly b4({bc.x4, bc.y4});
  const ScalarPoly b3s = conj_coeffs(b3);
  const ScalarPoly b4s = conj_coeffs(b4);

  ScalarPoly pq = bc.delta12 * bc.delta12 + bc.delta34 * bc.delta34 +
                  cplx(4.0) * (b3 * b3s) + cplx(4.0) * (b4 * b4s);
  ScalarPoly qq = bc.delta12 * bc.delta34 + cplx(0.0, 2.0) * (b3s * b4 - b3 * b4s);

  const double scale = std::max(1.0, std::max(pq.norm_inf(), qq.norm_inf()));
  if (std::max(pq.max_imag(), qq.max_imag()) > 1e-12 * scale)
    throw std::runtime_error("pq_from_state: spectral quartics acquired imaginary parts");
  return {pq.real_part(), qq.real_part()};
}

std::pair<ScalarPoly, ScalarPoly> pq_from_integrals(const IntegralSet& f) {
  return {ScalarPoly::from_real({f.p0, f.p1, f.p2, f.p3, f.p4}),
          ScalarPoly::from_real({f.q0, f.q1, f.q2, f.q3, f.q4})};
}

double char_poly_check(const BodyState& s, const Params& p, cplx lambda) {
  const auto [pq, qq] = pq_from_state(s, p);
  const CMat4 lt = to_tilde(lax_matrix(s, p)).eval(lambda);
  const auto coeffs = char_poly_coeffs(lt);
  const cplx pval = pq.eval(lambda);
  const cplx qval = qq.eval(lambda);
  const std::array<cplx, 5> expected = {qval * qval, cplx(0.0), pval, cplx(0.0),
                                        cplx(1.0)};
  double scale = 1.0;
  for (const cplx& c : expected) scale = std::max(scale, std::abs(c));
  double worst = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    worst = std::max(worst, std::abs(coeffs[k] - expected[k]));
  return worst / scale;
}

CurveSummary curve_summary(const ScalarPoly& pquartic, const ScalarPoly& qquartic) {
  if (pquartic.degree() != 4 || qquartic.degree() != 4)
    throw std::invalid_argument("curve_summary: spectral quartics must have degree 4");
  CurveSummary out;
  out.disc8 = cplx(0.25) * (pquartic * pquartic) - qquartic * qquartic;
  out.qroots = qquartic.roots();

  out.min_qroot_gap = std::numeric_limits<double>::infinity();
  double root_scale = 1.0;
  for (const cplx& r : out.qroots) root_scale = std::max(root_scale, std::abs(r));
  for (std::size_t i = 0; i < out.qroots.size(); ++i)
    for (std::size_t j = i + 1; j < out.qroots.size(); ++j)
      out.min_qroot_gap =
          std::min(out.min_qroot_gap, std::abs(out.qroots[i] - out.qroots[j]));

  if (out.disc8.degree() != 8) {
    out.degenerate = true;
    out.degenerate_reason = "P^2/4 - Q^2 does not have degree 8";
    return out;
  }
  const SquarefreeResult sq = squarefree_test(out.disc8);
  out.squarefree_min_remainder = sq.min_remainder;
  if (sq.status != SquarefreeStatus::squarefree) {
    out.degenerate = true;
    out.degenerate_reason = sq.status == SquarefreeStatus::repeated_factor
                                ? "P^2/4 - Q^2 has a repeated factor"
                                : "squarefreeness of P^2/4 - Q^2 is borderline";
    return out;
  }
  if (out.min_qroot_gap < 1e-6 * root_scale) {
    out.degenerate = true;
    out.degenerate_reason = "Q has (numerically) multiple roots";
    return out;
  }
  // Degree-8 squarefree hyperelliptic model; the double cover ramifies over
  // its 8 branch points, and resolving the four nodes drops the genus by 4.
  out.genus_quotient = 3;
  out.arith_genus = 9;
  out.genus_normalized = 5;
  return out;
}

DoublePointCheck double_point_check(const BodyState& s, const Params& p) {
  const auto [pq, qq] = pq_from_state(s, p);
  DoublePointCheck out;
  out.points = qq.roots();
  if (out.points.size() != 4) {
    out.degenerate = true;
    out.degenerate_reason = "Q does not have four roots";
    return out;
  }
  double gap = std::numeric_limits<double>::infinity();
  double root_scale = 1.0;
  for (const cplx& r : out.points) root_scale = std::max(root_scale, std::abs(r));
  for (std::size_t i = 0; i < out.points.size(); ++i)
    for (std::size_t j = i + 1; j < out.points.size(); ++j)
      gap = std::min(gap, std::abs(out.points[i] - out.points[j]));
  if (gap < 1e-6 * root_scale) {
    out.degenerate = true;
    out.degenerate_reason = "multiple roots of Q";
    return out;
  }

  const ScalarPoly pd = pq.derivative();
  const ScalarPoly qd = qq.derivative();
  const double scale =
      1.0 + std::max(pq.norm_inf(), qq.norm_inf()) * std::pow(root_scale, 4.0);
  out.min_hessian = std::numeric_limits<double>::infinity();
  for (const cplx& lk : out.points) {
    const cplx qv = qq.eval(lk);
    // p(l, 0) = Q(l)^2 ; dp/dl(l, 0) = 2 Q Q' ; dp/dmu(l, 0) = 0 identically.
    const double v0 = std::abs(qv * qv);
    const double vl = std::abs(2.0 * qv * qd.eval(lk));
    const double vm = 0.0;
    out.max_residual = std::max({out.max_residual, v0 / scale, vl / scale, vm});
    // Hessian determinant 4 Q'(l)^2 P(l); nonzero for an ordinary node.
    const double hess = std::abs(4.0 * qd.eval(lk) * qd.eval(lk) * pq.eval(lk));
    out.min_hessian = std::min(out.min_hessian, hess);
  }
  return out;
}

Eigen::Vector4cd curve_eigenvector(const BodyState& s, const Params& p, cplx lambda,
                                   cplx mu) {
  const auto [pq, qq] = pq_from_state(s, p);
  const cplx pv = pq.eval(lambda);
  const cplx qv = qq.eval(lambda);
  const cplx curve = std::pow(mu, 4) + pv * mu * mu + qv * qv;
  const double curve_scale =
      1.0 + std::pow(std::abs(mu), 4) + std::abs(pv) * std::abs(mu) * std::abs(mu) +
      std::abs(qv) * std::abs(qv);
  if (std::abs(curve) > 1e-8 * curve_scale)
    throw std::invalid_argument("curve_eigenvector: (lambda, mu) is not on the curve");

  const BetaCoords bc = beta_coords(s, p);
  const cplx i(0.0, 1.0);
  const cplx d12 = bc.delta12.eval(lambda);
  const cplx d34 = bc.delta34.eval(lambda);
  const cplx b3 = bc.beta3(lambda), b4 = bc.beta4(lambda);
  const cplx b3s = bc.beta3_star(lambda), b4s = bc.beta4_star(lambda);
  const cplx cross = b3 * b4s - b3s * b4;

  Eigen::Vector4cd f;
  f(0) = (d12 * d12 + mu * mu) * (i * d34 - mu) - 2.0 * mu * (b3 * b3s + b4 * b4s) +
         2.0 * d12 * (b3 * b4s - b4 * b3s);
  f(1) = 2.0 * mu * (b3 - i * b4) * (i * b3s + b4s);
  f(2) = (-b3 + i * b4) * ((i * d12 - mu) * (i * d34 - mu) + 2.0 * i * cross);
  f(3) = (i * b3s + b4s) * ((i * d12 + mu) * (i * d34 - mu) + 2.0 * i * cross);

  const double entry_scale = 1.0 + std::pow(1.0 + std::abs(mu) + std::abs(d12) +
                                                std::abs(d34) + std::abs(b3) +
                                                std::abs(b4),
                                            3.0);
  if (f.norm() < 1e-10 * entry_scale)
    throw std::domain_error("curve_eigenvector: formula degenerates (zero vector)");
  return f;
}

double isospectral_drift(const Trajectory& t, const std::vector<double>& lambda_samples) {
  if (t.states.empty())
    throw std::invalid_argument("isospectral_drift: empty trajectory");
  const auto [p0, q0] = pq_from_state(t.states.front(), t.params);
  std::vector<cplx> ref;
  ref.reserve(2 * lambda_samples.size());
  for (double x : lambda_samples) {
    ref.push_back(p0.eval(x));
    ref.push_back(q0.eval(x));
  }
  double worst = 0.0;
  for (const BodyState& s : t.states) {
    const auto [pp, qq] = pq_from_state(s, t.params);
    std::size_t k = 0;
    for (double x : lambda_samples) {
      worst = std::max(worst,
                       std::abs(pp.eval(x) - ref[k]) / (1.0 + std::abs(ref[k])));
      ++k;
      worst = std::max(worst,
                       std::abs(qq.eval(x) - ref[k]) / (1.0 + std::abs(ref[k])));
      ++k;
    }
  }
  return worst;
}

double covering_scale(const Params& p) { return 2.0 / ((p.a + p.b) * (p.a + p.b)); }

std::pair<ScalarPoly, ScalarPoly> covering_quartics(const ScalarPoly& pquartic,
                                                    const ScalarPoly& qquartic,
                                                    const Params& p) {
  p.validate();
  const cplx s(covering_scale(p));
  const ScalarPoly half = cplx(0.5) * pquartic;
  return {s * (half + qquartic), s * (half - qquartic)};
}

std::array<double, 5> covering_coeffs_direct(const BodyState& s, const Params& p,
                                             int sign, bool opposed_gamma_sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("covering_coeffs_direct: sign must be +1 or -1");
  const double sg = static_cast<double>(sign);
  const double gsign = opposed_gamma_sign ? -sg : sg;
  const Skew4 c = p.cmat();
  const Skew4& m = s.m;
  const Skew4& g = s.g;
  const double c_pm = c.m12 + sg * c.m34;
  const double m12_pm = m.m12 + sg * m.m34;
  const double m23_pm = m.m23 + sg * m.m14;
  const double m13_mp = m.m13 - sg * m.m24;
  const double g12_pm = g.m12 + sg * g.m34;
  std::array<double, 5> a{};  // constant term first
  a[4] = 0.5 * c_pm * c_pm;
  a[3] = c_pm * m12_pm;
  a[2] = 0.5 * (m12_pm * m12_pm + m23_pm * m23_pm + m13_mp * m13_mp) + c_pm * g12_pm;
  a[1] = m12_pm * g12_pm + m23_pm * (g.m23 + sg * g.m14) + m13_mp * (g.m13 + gsign * g.m24);
  a[0] = 2.0;
  return a;
}

double QuarticInvariants::j_invariant() const {
  const double disc = discriminant();
  if (disc == 0.0) throw std::domain_error("j_invariant: degenerate curve");
  return 1728.0 * g2 * g2 * g2 / disc;
}

QuarticInvariants weierstrass_from_quartic(const ScalarPoly& quartic) {
  if (quartic.degree() != 4)
    throw std::invalid_argument("weierstrass_from_quartic: polynomial must have degree 4");
  if (quartic.max_imag() > 1e-10 * quartic.norm_inf())
    throw std::invalid_argument("weierstrass_from_quartic: coefficients must be real");
  const double a = quartic.coeff(4).real();
  const double b = quartic.coeff(3).real() / 4.0;
  const double c = quartic.coeff(2).real() / 6.0;
  const double d = quartic.coeff(1).real() / 4.0;
  const double e = quartic.coeff(0).real();
  QuarticInvariants out;
  out.g2 = a * e - 4.0 * b * d + 3.0 * c * c;
  out.g3 = a * c * e + 2.0 * b * c * d - a * d * d - e * b * b - c * c * c;
  return out;
}

QuarticInvariants weierstrass_from_cubic(double bcoef, double ccoef, double dcoef) {
  QuarticInvariants out;
  out.g2 = 4.0 * (bcoef * bcoef / 3.0 + ccoef);
  out.g3 = 4.0 * (2.0 * bcoef * bcoef * bcoef / 27.0 + bcoef * ccoef / 3.0 -
                  dcoef / 4.0);
  return out;
}

}  // namespace bitop
