#include "bitop/verify.hpp"

#include "bitop/basis.hpp"
#include "bitop/bracket.hpp"
#include "bitop/hierarchy.hpp"
#include "bitop/invariants.hpp"
#include "bitop/reduction.hpp"
#include "bitop/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace bitop {

namespace {

CheckResult make_result(std::string name, double value, double tol) {
  CheckResult r;
  r.name = std::move(name);
  r.value = value;
  r.tolerance = tol;
  r.pass = value < tol;
  return r;
}

cplx random_lambda(std::mt19937_64& rng, bool complex_part) {
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  const double re = uni(rng);
  return complex_part ? cplx(re, uni(rng)) : cplx(re);
}

Trajectory reference_trajectory(const RunConfig& cfg, const char* purpose, double dt,
                                double horizon) {
  const BodyState s0 = random_state(derive_seed(cfg.seed, purpose));
  const int steps = static_cast<int>(std::lround(horizon / dt));
  return integrate(s0, cfg.params, dt, steps, Method::rk4);
}

double rel_diff(double x, double ref) { return std::abs(x - ref) / (1.0 + std::abs(ref)); }

}  // namespace

CheckResult check_lax_identity(const RunConfig& cfg) {
  std::mt19937_64 rng(derive_seed(cfg.seed, "lax-identity"));
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const BodyState s = random_state(rng());
    const cplx lambda = random_lambda(rng, k % 2 == 0);
    worst = std::max(worst, lax_residual(s, cfg.params, lambda));
  }
  return make_result("lax-identity", worst, cfg.tolerance("lax-identity", 1e-10));
}

CheckResult check_conservation(const RunConfig& cfg) {
  const Params p = random_params(derive_seed(cfg.seed, "conservation-params"));
  const BodyState s0 = random_state(derive_seed(cfg.seed, "conservation-state"));
  const Trajectory traj = integrate(s0, p, 1e-3, 10000, Method::rk4);
  const ConservationReport rep = conservation_report(traj);
  CheckResult r = make_result("conservation", rep.worst(),
                              cfg.tolerance("conservation", 1e-6));
  r.details["params"] = {p.a, p.b, p.chi12, p.chi34};
  for (std::size_t k = 0; k < rep.max_rel_drift.size(); ++k)
    r.details["drift"][std::string(IntegralSet::names()[k])] = rep.max_rel_drift[k];
  return r;
}

CheckResult check_conservation_order(const RunConfig& cfg) {
  // The halving ratio is measured where the drift is resolved; at dt = 1e-3
  // the drift sits at the rounding floor and the ratio is noise.
  const Params p = random_params(derive_seed(cfg.seed, "conservation-params"));
  const BodyState s0 = random_state(derive_seed(cfg.seed, "conservation-state"));
  const double coarse =
      conservation_report(integrate(s0, p, 1e-2, 1000, Method::rk4)).worst();
  const double fine =
      conservation_report(integrate(s0, p, 5e-3, 2000, Method::rk4)).worst();
  const double ratio = coarse / std::max(fine, 1e-300);
  CheckResult r;
  r.name = "conservation-order";
  r.value = ratio;
  r.tolerance = cfg.tolerance("conservation-order", 8.0);  // lower bound of the band
  r.pass = ratio >= r.tolerance && ratio <= 4.0 * r.tolerance;
  r.details["drift_coarse"] = coarse;
  r.details["drift_fine"] = fine;
  r.details["band"] = {r.tolerance, 4.0 * r.tolerance};
  r.details["expected"] = 16.0;
  return r;
}

CheckResult check_route_equivalence(const RunConfig& cfg, TypoList* typos) {
  std::mt19937_64 rng(derive_seed(cfg.seed, "route-equivalence"));
  const bool faulted = cfg.fault_inject == "route-equivalence";
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const BodyState s = random_state(rng());
    const IntegralSet vec = integral_set(s, cfg.params);
    IntegralSet comp = integral_set_components(s, cfg.params);
    if (faulted) comp.p2 += 1e-3;  // deliberate corruption fixture
    const auto va = vec.values();
    const auto ca = comp.values();
    for (std::size_t i = 0; i < va.size(); ++i)
      worst = std::max(worst, rel_diff(ca[i], va[i]));
    const auto [pp, qq] = pq_from_state(s, cfg.params);
    const auto [pi, qi] = pq_from_integrals(vec);
    for (int c = 0; c <= 4; ++c) {
      worst = std::max(worst, std::abs((pp.coeff(c) - pi.coeff(c)).real()) /
                                  (1.0 + std::abs(pi.coeff(c))));
      worst = std::max(worst, std::abs((qq.coeff(c) - qi.coeff(c)).real()) /
                                  (1.0 + std::abs(qi.coeff(c))));
    }
  }
  CheckResult r = make_result("route-equivalence", worst,
                              cfg.tolerance("route-equivalence", 1e-11));
  if (typos) {
    // Demonstrate that the m24^2 term in p2 is load-bearing: without it the
    // coefficient is not conserved.
    const BodyState s0 = random_state(derive_seed(cfg.seed, "route-typo"));
    const Trajectory traj = integrate(s0, cfg.params, 1e-3, 2000, Method::rk4);
    const double with0 = integral_set(traj.states.front(), cfg.params).p2;
    const double without0 = p2_without_m24(traj.states.front(), cfg.params);
    double with_drift = 0.0, without_drift = 0.0;
    for (const BodyState& s : traj.states) {
      with_drift = std::max(with_drift, rel_diff(integral_set(s, cfg.params).p2, with0));
      without_drift =
          std::max(without_drift, rel_diff(p2_without_m24(s, cfg.params), without0));
    }
    typos->push_back(
        {"route-equivalence",
         "entrywise expansion of p2 requires the m24^2 term: drift with term " +
             format_double(with_drift) + ", without " + format_double(without_drift),
         "m24^2 included"});
    r.details["p2_variant_drift_with_m24"] = with_drift;
    r.details["p2_variant_drift_without_m24"] = without_drift;
  }
  return r;
}

CheckResult check_charpoly_identity(const RunConfig& cfg) {
  std::mt19937_64 rng(derive_seed(cfg.seed, "charpoly-identity"));
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const BodyState s = random_state(rng());
    const cplx lambda = random_lambda(rng, k % 2 == 0);
    worst = std::max(worst, char_poly_check(s, cfg.params, lambda));
  }
  return make_result("charpoly-identity", worst,
                     cfg.tolerance("charpoly-identity", 1e-10));
}

CheckResult check_casimir_polynomials(const RunConfig& cfg) {
  const BodyState s = random_state(derive_seed(cfg.seed, "casimir-polynomials"));
  const CasimirPolyCheck c = casimir_poly_check(s, cfg.params);
  const double worst = std::max({c.pfaffian_fit_residual, c.trace_fit_residual,
                                 c.max_imag});
  CheckResult r = make_result("casimir-polynomials", worst,
                              cfg.tolerance("casimir-polynomials", 1e-9));
  r.details["trace_coeff_l2"] = c.trace_coeff_l2;
  r.details["trace_coeff_l3"] = c.trace_coeff_l3;
  return r;
}

CheckResult check_involution(const RunConfig& cfg) {
  const BodyState s = random_state(derive_seed(cfg.seed, "involution"));
  const auto mat = involution_matrix(s, cfg.params);
  const double worst = mat.cwiseAbs().maxCoeff();
  CheckResult r = make_result("involution", worst, cfg.tolerance("involution", 1e-4));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      r.details["matrix"][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          mat(i, j);
  return r;
}

CheckResult check_casimir_brackets(const RunConfig& cfg) {
  const BodyState s = random_state(derive_seed(cfg.seed, "casimir-brackets"));
  const double coord = max_casimir_coordinate_bracket(s, cfg.params);
  const double ham = max_integral_hamiltonian_bracket(s, cfg.params);
  CheckResult r = make_result("casimir-brackets", std::max(coord, ham),
                              cfg.tolerance("casimir-brackets", 1e-5));
  r.details["casimir_vs_coordinates"] = coord;
  r.details["integrals_vs_hamiltonian"] = ham;
  return r;
}

CheckResult check_independence_rank(const RunConfig& cfg) {
  const BodyState s = random_state(derive_seed(cfg.seed, "independence-rank"));
  const RankReport rep = independence_rank(s, cfg.params);
  CheckResult r;
  r.name = "independence-rank";
  r.value = static_cast<double>(rep.rank);
  r.tolerance = 4.0;
  r.pass = rep.rank == 4;
  for (int k = 0; k < 4; ++k)
    r.details["singular_values"].push_back(rep.singular_values(k));
  // Zero momentum and Poisson parts: gradient degeneracies are reported, not
  // asserted.
  const RankReport zero = independence_rank(BodyState{}, cfg.params);
  r.details["rank_at_zero"] = zero.rank;
  return r;
}

CheckResult check_degenerate_rank(const RunConfig& cfg) {
  Params p = cfg.params;
  p.chi34 = p.chi12;
  p.allow_degenerate = true;
  const BodyState s = random_state(derive_seed(cfg.seed, "degenerate-rank"));
  const RankReport rep = independence_rank(s, p);
  const IntegralSet f = integral_set(s, p);
  const double linear_relation = std::abs(2.0 * f.q3 - f.p3);
  CheckResult r;
  r.name = "degenerate-rank";
  r.value = linear_relation;
  r.tolerance = cfg.tolerance("degenerate-rank", 1e-9);
  r.pass = rep.rank == 3 && linear_relation < r.tolerance;
  r.details["rank"] = rep.rank;
  for (int k = 0; k < 4; ++k)
    r.details["singular_values"].push_back(rep.singular_values(k));
  return r;
}

CheckResult check_curve_structure(const RunConfig& cfg) {
  std::mt19937_64 rng(derive_seed(cfg.seed, "curve-structure"));
  double worst = 0.0;
  bool genus_ok = true;
  int degenerate = 0;
  for (int k = 0; k < 20; ++k) {
    const BodyState s = random_state(rng());
    const auto [pp, qq] = pq_from_state(s, cfg.params);
    const CurveSummary cs = curve_summary(pp, qq);
    if (cs.degenerate) {
      ++degenerate;
      genus_ok = false;
      continue;
    }
    genus_ok = genus_ok && cs.genus_quotient == 3 && cs.arith_genus == 9 &&
               cs.genus_normalized == 5 && cs.disc8.degree() == 8;
    const DoublePointCheck dp = double_point_check(s, cfg.params);
    if (dp.degenerate || dp.points.size() != 4) {
      ++degenerate;
      genus_ok = false;
      continue;
    }
    worst = std::max(worst, dp.max_residual);
  }
  CheckResult r = make_result("curve-structure", worst,
                              cfg.tolerance("curve-structure", 1e-8));
  r.pass = r.pass && genus_ok;
  r.details["genus"] = {3, 9, 5};
  r.details["degenerate_states"] = degenerate;
  return r;
}

CheckResult check_eigenvector_formula(const RunConfig& cfg) {
  std::mt19937_64 rng(derive_seed(cfg.seed, "eigenvector-formula"));
  double worst_residual = 0.0;
  double worst_angle = 0.0;
  int evaluated = 0;
  int draws = 0;
  while (evaluated < 50 && draws++ < 500) {
    const BodyState s = random_state(rng());
    const cplx lambda = random_lambda(rng, evaluated % 2 == 0);
    const CMat4 lt = to_tilde(lax_matrix(s, cfg.params)).eval(lambda);
    Eigen::ComplexEigenSolver<CMat4> es(lt, /*computeEigenvectors=*/true);
    if (es.info() != Eigen::Success) continue;
    // Pick the best-separated eigenvalue; near-coalescing pairs are the
    // double-point regime handled elsewhere.
    int pick = -1;
    double best_gap = 0.0;
    for (int i = 0; i < 4; ++i) {
      double gap = 1e300;
      for (int j = 0; j < 4; ++j)
        if (j != i) gap = std::min(gap, std::abs(es.eigenvalues()(i) - es.eigenvalues()(j)));
      if (gap > best_gap) {
        best_gap = gap;
        pick = i;
      }
    }
    if (pick < 0 || best_gap < 1e-3) continue;
    const cplx mu = es.eigenvalues()(pick);
    Eigen::Vector4cd f;
    try {
      f = curve_eigenvector(s, cfg.params, lambda, mu);
    } catch (const std::domain_error&) {
      continue;  // formula degenerates at this point; draw another
    }
    const double res = (lt * f - mu * f).norm() / f.norm();
    const Eigen::Vector4cd ref = es.eigenvectors().col(pick);
    const double cosine = std::abs(ref.dot(f)) / (ref.norm() * f.norm());
    const double sine = std::sqrt(std::max(0.0, 1.0 - cosine * cosine));
    worst_residual = std::max(worst_residual, res);
    worst_angle = std::max(worst_angle, sine);
    ++evaluated;
  }
  CheckResult r = make_result("eigenvector-formula", worst_residual,
                              cfg.tolerance("eigenvector-formula", 1e-7));
  r.pass = r.pass && worst_angle < 1e-6 && evaluated == 50;
  r.details["max_sine_vs_eigensolver"] = worst_angle;
  r.details["points_evaluated"] = evaluated;
  return r;
}

CheckResult check_isospectral_drift(const RunConfig& cfg) {
  const Trajectory traj = reference_trajectory(cfg, "isospectral-drift", 1e-3, 10.0);
  std::vector<double> samples = chebyshev_nodes(std::max(cfg.lambda_samples, 3), 1.5);
  const double drift = isospectral_drift(traj, samples);
  return make_result("isospectral-drift", drift,
                     cfg.tolerance("isospectral-drift", 1e-6));
}

CheckResult check_reduction_pushforward(const RunConfig& cfg) {
  std::mt19937_64 rng(derive_seed(cfg.seed, "reduction-pushforward"));
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const BodyState s = random_state(rng());
    const BodyState tangent = rhs(s, cfg.params);
    // to_twisted is linear, so it is its own derivative.
    const TwistedState mapped = to_twisted(tangent, cfg.params, GammaNorm::allow_any);
    const TwistedState direct = twisted_rhs(to_twisted(s, cfg.params), cfg.params);
    const double scale = 1.0 + tangent.max_abs();
    worst = std::max(worst, (mapped.omega1 - direct.omega1).cwiseAbs().maxCoeff() / scale);
    worst = std::max(worst, (mapped.omega2 - direct.omega2).cwiseAbs().maxCoeff() / scale);
    worst = std::max(worst, (mapped.gamma1 - direct.gamma1).cwiseAbs().maxCoeff() / scale);
    worst = std::max(worst, (mapped.gamma2 - direct.gamma2).cwiseAbs().maxCoeff() / scale);
    // round trip
    const BodyState back = from_twisted(to_twisted(s, cfg.params), cfg.params);
    worst = std::max(worst, (back - s).max_abs() / (1.0 + s.max_abs()));
  }
  return make_result("reduction-pushforward", worst,
                     cfg.tolerance("reduction-pushforward", 1e-10));
}

CheckResult check_reduction_r_constants(const RunConfig& cfg) {
  const Trajectory traj = reference_trajectory(cfg, "reduction-r", 1e-3, 10.0);
  const TwistedState ts0 = to_twisted(traj.states.front(), cfg.params);
  double worst = 0.0;
  for (const BodyState& s : traj.states) {
    const TwistedState ts = to_twisted(s, cfg.params, GammaNorm::allow_any);
    worst = std::max(worst, rel_diff(ts.omega1(2), ts0.omega1(2)));
    worst = std::max(worst, rel_diff(ts.omega2(2), ts0.omega2(2)));
  }
  return make_result("reduction-r-constants", worst,
                     cfg.tolerance("reduction-r-constants", 1e-9));
}

CheckResult check_reduction_f_conservation(const RunConfig& cfg, TypoList* typos) {
  const Trajectory traj = reference_trajectory(cfg, "reduction-f", 1e-3, 10.0);
  const TwistedState ts0 = to_twisted(traj.states.front(), cfg.params);
  const ReductionConstants rc0 = reduction_constants(ts0, cfg.params);
  const double amb0 = f22_with_leading_amb(ts0, cfg.params);
  const std::array<double, 8> ref = {rc0.f11, rc0.f12, rc0.f13, rc0.f21,
                                     rc0.f22, rc0.f23, rc0.gamma1_norm, rc0.gamma2_norm};
  std::array<double, 8> drift{};
  double amb_drift = 0.0;
  for (const BodyState& s : traj.states) {
    const TwistedState ts = to_twisted(s, cfg.params, GammaNorm::allow_any);
    const ReductionConstants rc = reduction_constants(ts, cfg.params);
    const std::array<double, 8> cur = {rc.f11, rc.f12, rc.f13, rc.f21,
                                       rc.f22, rc.f23, rc.gamma1_norm, rc.gamma2_norm};
    for (std::size_t k = 0; k < cur.size(); ++k)
      drift[k] = std::max(drift[k], rel_diff(cur[k], ref[k]));
    amb_drift = std::max(amb_drift, rel_diff(f22_with_leading_amb(ts, cfg.params), amb0));
  }
  const double worst = *std::max_element(drift.begin(), drift.end());
  CheckResult r = make_result("reduction-f-conservation", worst,
                              cfg.tolerance("reduction-f-conservation", 1e-6));
  static const std::array<const char*, 8> names = {
      "f11", "f12", "f13", "f21", "f22", "f23", "gamma1_norm", "gamma2_norm"};
  for (std::size_t k = 0; k < names.size(); ++k) r.details["drift"][names[k]] = drift[k];
  r.details["f22_leading_amb_variant_drift"] = amb_drift;
  if (typos)
    typos->push_back({"reduction-f-conservation",
                      "f22 leading coefficient: (a+b)^2 drifts " +
                          format_double(drift[4]) + ", (a-b)^2 variant drifts " +
                          format_double(amb_drift),
                      "(a+b)^2 selected"});
  return r;
}

CheckResult check_reduction_cubic_closure(const RunConfig& cfg, TypoList* typos) {
  const Trajectory traj = reference_trajectory(cfg, "reduction-cubic", 1e-3, 5.0);
  const CubicResidual cr = cubic_residual(traj, cfg.params);
  const double worst = std::max(cr.res1 / cr.scale1, cr.res2 / cr.scale2);
  CheckResult r = make_result("reduction-cubic-closure", worst,
                              cfg.tolerance("reduction-cubic-closure", 1e-5));
  r.details["res1"] = cr.res1;
  r.details["res2"] = cr.res2;
  r.details["scale1"] = cr.scale1;
  r.details["scale2"] = cr.scale2;
  const QuadratureVariants qv = quadrature_variant_residuals(traj, cfg.params);
  r.details["quadrature_variants"] = {
      {"derived1", qv.derived1},    {"undivided1", qv.undivided1},
      {"derived2", qv.derived2},    {"undivided2", qv.undivided2},
      {"mispaired2", qv.mispaired2}};
  if (typos) {
    typos->push_back({"reduction-cubic-closure",
                      "square term of the quadrature line: (alpha_i/n_i)(a_i+u) closes "
                      "(residuals " +
                          format_double(qv.derived1) + ", " + format_double(qv.derived2) +
                          "); the variant with alpha_i*a_i undivided by n_i leaves " +
                          format_double(qv.undivided1) + ", " + format_double(qv.undivided2),
                      "divided form selected (matches the cubic coefficients)"});
    typos->push_back({"reduction-cubic-closure",
                      "group-2 quadrature with alpha_1 in place of alpha_2 leaves residual " +
                          format_double(qv.mispaired2),
                      "alpha_2 selected"});
  }
  return r;
}

CheckResult check_prym_weierstrass(const RunConfig& cfg, TypoList* typos) {
  const Trajectory traj = reference_trajectory(cfg, "prym-weierstrass", 1e-3, 2.0);
  const std::size_t stride = std::max<std::size_t>(1, traj.states.size() / 8);

  double worst_match = 0.0;
  double worst_j = 0.0;
  double worst_direct = 0.0;      // factored-coefficient route vs P/2 +- Q
  double worst_aligned = 1e300;   // the aligned-sign variant must NOT match
  double worst_const = 0.0;       // constant term of (P/2 +- Q) vs 2
  int pairing_plus = 0;
  int g3_sign = 0;
  bool consistent = true;

  for (std::size_t k = 0; k < traj.states.size(); k += stride) {
    const BodyState& s = traj.states[k];
    const auto [pp, qq] = pq_from_state(s, cfg.params);
    const auto [qplus, qminus] = covering_quartics(pp, qq, cfg.params);
    const double scale = covering_scale(cfg.params);

    const QuarticInvariants wplus = weierstrass_from_quartic(qplus);
    const QuarticInvariants wminus = weierstrass_from_quartic(qminus);
    const TwistedState ts = to_twisted(s, cfg.params, GammaNorm::allow_any);
    const CubicData cd = cubic_data(reduction_constants(ts, cfg.params), cfg.params);
    const auto [e1, e2] = elliptic_curves(cd);

    auto pair_err = [](const QuarticInvariants& qa, const QuarticInvariants& qb) {
      return std::max(rel_diff(qa.g2, qb.g2), rel_diff(std::abs(qa.g3), std::abs(qb.g3)));
    };
    const double err_12 = std::max(pair_err(wplus, e1), pair_err(wminus, e2));
    const double err_21 = std::max(pair_err(wplus, e2), pair_err(wminus, e1));
    const int plus_pair = err_12 <= err_21 ? 1 : 2;
    const QuarticInvariants& eplus = plus_pair == 1 ? e1 : e2;
    const QuarticInvariants& eminus = plus_pair == 1 ? e2 : e1;
    if (pairing_plus == 0) pairing_plus = plus_pair;
    consistent = consistent && pairing_plus == plus_pair;

    const int sign = (wplus.g3 * eplus.g3) >= 0.0 ? 1 : -1;
    if (g3_sign == 0) g3_sign = sign;
    consistent = consistent && g3_sign == sign;

    worst_match = std::max({worst_match, rel_diff(wplus.g2, eplus.g2),
                            rel_diff(wminus.g2, eminus.g2),
                            rel_diff(wplus.g3, sign * eplus.g3),
                            rel_diff(wminus.g3, sign * eminus.g3)});
    worst_j = std::max({worst_j, rel_diff(wplus.j_invariant(), eplus.j_invariant()),
                        rel_diff(wminus.j_invariant(), eminus.j_invariant())});

    for (int sgn : {1, -1}) {
      const ScalarPoly& quartic = sgn == 1 ? qplus : qminus;
      const auto direct = covering_coeffs_direct(s, cfg.params, sgn, true);
      const auto aligned = covering_coeffs_direct(s, cfg.params, sgn, false);
      double dmax = 0.0, amax = 0.0;
      for (int c = 0; c <= 4; ++c) {
        const double unscaled = quartic.coeff(c).real() / scale;
        dmax = std::max(dmax, rel_diff(direct[static_cast<std::size_t>(c)], unscaled));
        amax = std::max(amax, rel_diff(aligned[static_cast<std::size_t>(c)], unscaled));
      }
      worst_direct = std::max(worst_direct, dmax);
      worst_aligned = std::min(worst_aligned, amax);
      worst_const = std::max(worst_const, std::abs(quartic.coeff(0).real() / scale - 2.0));
    }
  }

  CheckResult r = make_result("prym-weierstrass-match",
                              std::max({worst_match, worst_j, worst_direct, worst_const}),
                              cfg.tolerance("prym-weierstrass-match", 1e-7));
  r.pass = r.pass && consistent;
  r.details["pairing_plus_quartic"] = pairing_plus;
  r.details["g3_sign"] = g3_sign;
  r.details["max_g_match"] = worst_match;
  r.details["max_j_match"] = worst_j;
  r.details["factored_coeff_residual"] = worst_direct;
  r.details["aligned_variant_min_residual"] = worst_aligned;
  r.details["constant_term_vs_2"] = worst_const;
  if (typos) {
    if (g3_sign < 0)
      typos->push_back({"prym-weierstrass-match",
                        "g3 of the covering quartics matches the cubic-route g3 only "
                        "after a global sign flip (g2 and j-invariants match directly)",
                        "sign-adjudicated match; orientation slip recorded"});
    typos->push_back({"prym-weierstrass-match",
                      "linear coefficient of the factored covering quartic: the "
                      "(g13 -+ g24) pairing matches to " +
                          format_double(worst_direct) +
                          "; the aligned (g13 +- g24) variant is off by at least " +
                          format_double(worst_aligned),
                      "opposed pairing selected"});
  }
  return r;
}

CheckResult check_hierarchy_base_case(const RunConfig& cfg) {
  const BodyState s = random_state(derive_seed(cfg.seed, "hierarchy-base"));
  const Params& p = cfg.params;
  const HierState hs = make_hier_state(p.a + p.b, {s.m, s.g});
  const OmegaPolicyResult pol = omega_policy(hs, p);
  double worst = pol.constraint_residual;
  worst = std::max(worst, (pol.omega - omega_from_m(s.m, p)).max_abs());
  const HierTangent ht = hier_rhs(hs, pol.omega, p);
  const BodyState ref = rhs(s, p);
  worst = std::max(worst, (ht.dmats[0] - ref.m).max_abs());
  worst = std::max(worst, (ht.dmats[1] - ref.g).max_abs());
  const HierSpectral spec = hier_spectral(hs, p);
  const auto [pp, qq] = pq_from_state(s, p);
  for (int c = 0; c <= 4; ++c) {
    worst = std::max(worst, std::abs((spec.ppoly.coeff(c) - pp.coeff(c)).real()) /
                                (1.0 + std::abs(pp.coeff(c))));
    worst = std::max(worst, std::abs((spec.qpoly.coeff(c) - qq.coeff(c)).real()) /
                                (1.0 + std::abs(qq.coeff(c))));
  }
  return make_result("hierarchy-base-case", worst,
                     cfg.tolerance("hierarchy-base-case", 1e-9));
}

CheckResult check_hierarchy_curves(const RunConfig& cfg) {
  std::mt19937_64 rng(derive_seed(cfg.seed, "hierarchy-curves"));
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  bool ok = true;
  double worst_fact = 0.0;
  Json per_n = Json::array();
  for (int n : {3, 4}) {
    std::vector<Skew4> mats;
    for (int k = 0; k < n; ++k) {
      std::array<double, 6> e{};
      for (double& v : e) v = uni(rng);
      mats.push_back(Skew4::from_entries(e));
    }
    const HierState hs = make_hier_state(cfg.hierarchy_d, std::move(mats));
    const HierSpectral spec = hier_spectral(hs, cfg.params);
    Json entry;
    entry["n"] = n;
    entry["degree_p"] = spec.degree_p;
    entry["degree_q"] = spec.degree_q;
    entry["genus"] = spec.genus ? Json(*spec.genus) : Json();
    if (spec.degenerate || spec.degree_p != 2 * n || spec.degree_q != 2 * n ||
        !spec.genus || *spec.genus != 2 * n - 1) {
      ok = false;
      per_n.push_back(entry);
      continue;
    }
    const CoveringPartition part = equal_split(spec.ppoly, spec.qpoly);
    entry["plus_count"] = part.plus_count;
    entry["minus_count"] = part.minus_count;
    entry["factorization_residual"] = part.factorization_residual;
    entry["root_match_distance"] = part.max_match_distance;
    worst_fact = std::max(worst_fact, part.factorization_residual);
    ok = ok && part.plus_count == 2 * n && part.minus_count == 2 * n &&
         is_equally_split(part.side) && part.ambiguous == 0;
    per_n.push_back(entry);
  }
  CheckResult r = make_result("hierarchy-curves", worst_fact,
                              cfg.tolerance("hierarchy-curves", 1e-9));
  r.pass = r.pass && ok;
  r.details["cases"] = per_n;
  return r;
}

CheckResult check_hierarchy_isospectral(const RunConfig& cfg) {
  std::mt19937_64 rng(derive_seed(cfg.seed, "hierarchy-isospectral"));
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int n = 3;
  std::vector<Skew4> mats;
  for (int k = 0; k < n; ++k) {
    std::array<double, 6> e{};
    for (double& v : e) v = uni(rng);
    mats.push_back(Skew4::from_entries(e));
  }
  const HierState hs0 = make_hier_state(cfg.hierarchy_d, std::move(mats));
  const auto traj = integrate_hier(hs0, cfg.params, 1e-3, 5000);
  const HierSpectral ref = hier_spectral(traj.front(), cfg.params);
  double drift = 0.0;
  double max_constraint = 0.0;
  for (std::size_t k = 0; k < traj.size(); k += 250) {
    const HierSpectral cur = hier_spectral(traj[k], cfg.params);
    for (int c = 0; c <= 2 * n; ++c) {
      drift = std::max(drift, std::abs((cur.ppoly.coeff(c) - ref.ppoly.coeff(c)).real()) /
                                  (1.0 + std::abs(ref.ppoly.coeff(c))));
      drift = std::max(drift, std::abs((cur.qpoly.coeff(c) - ref.qpoly.coeff(c)).real()) /
                                  (1.0 + std::abs(ref.qpoly.coeff(c))));
    }
    max_constraint = std::max(max_constraint, omega_policy(traj[k], cfg.params).constraint_residual);
  }
  CheckResult r = make_result("hierarchy-isospectral", drift,
                              cfg.tolerance("hierarchy-isospectral", 1e-5));
  r.details["constraint_residual"] = max_constraint;
  r.details["isospectral"] = r.pass;
  r.details["centralizer_dim"] = 2;
  return r;
}

const std::vector<std::string>& default_check_names() {
  static const std::vector<std::string> names = {
      "lax-identity",          "conservation",
      "conservation-order",    "route-equivalence",
      "charpoly-identity",     "casimir-polynomials",
      "involution",            "casimir-brackets",
      "independence-rank",     "curve-structure",
      "eigenvector-formula",   "isospectral-drift",
      "reduction-pushforward", "reduction-r-constants",
      "reduction-f-conservation", "reduction-cubic-closure",
      "prym-weierstrass-match",   "hierarchy-base-case",
      "hierarchy-curves",      "hierarchy-isospectral"};
  return names;
}

VerificationReport run_verification(const RunConfig& cfg,
                                    const std::vector<std::string>& subset) {
  cfg.params.validate();
  std::vector<std::string> wanted = subset;
  if (wanted.empty()) {
    wanted = default_check_names();
    if (cfg.params.allow_degenerate) wanted.push_back("degenerate-rank");
  }
  VerificationReport rep;
  rep.metadata["seed"] = cfg.seed;
  rep.metadata["generator"] = "mt19937_64";
  rep.metadata["params"] = {{"a", cfg.params.a},
                            {"b", cfg.params.b},
                            {"chi12", cfg.params.chi12},
                            {"chi34", cfg.params.chi34}};
  if (!cfg.fault_inject.empty()) rep.metadata["fault_inject"] = cfg.fault_inject;

  for (const std::string& name : wanted) {
    auto run = [&]() -> CheckResult {
      if (name == "lax-identity") return check_lax_identity(cfg);
      if (name == "conservation") return check_conservation(cfg);
      if (name == "conservation-order") return check_conservation_order(cfg);
      if (name == "route-equivalence")
        return check_route_equivalence(cfg, &rep.suspected_typos);
      if (name == "charpoly-identity") return check_charpoly_identity(cfg);
      if (name == "casimir-polynomials") return check_casimir_polynomials(cfg);
      if (name == "involution") return check_involution(cfg);
      if (name == "casimir-brackets") return check_casimir_brackets(cfg);
      if (name == "independence-rank") return check_independence_rank(cfg);
      if (name == "degenerate-rank") return check_degenerate_rank(cfg);
      if (name == "curve-structure") return check_curve_structure(cfg);
      if (name == "eigenvector-formula") return check_eigenvector_formula(cfg);
      if (name == "isospectral-drift") return check_isospectral_drift(cfg);
      if (name == "reduction-pushforward") return check_reduction_pushforward(cfg);
      if (name == "reduction-r-constants") return check_reduction_r_constants(cfg);
      if (name == "reduction-f-conservation")
        return check_reduction_f_conservation(cfg, &rep.suspected_typos);
      if (name == "reduction-cubic-closure")
        return check_reduction_cubic_closure(cfg, &rep.suspected_typos);
      if (name == "prym-weierstrass-match")
        return check_prym_weierstrass(cfg, &rep.suspected_typos);
      if (name == "hierarchy-base-case") return check_hierarchy_base_case(cfg);
      if (name == "hierarchy-curves") return check_hierarchy_curves(cfg);
      if (name == "hierarchy-isospectral") return check_hierarchy_isospectral(cfg);
      throw ConfigError("unknown check: " + name);
    };
    try {
      rep.checks.push_back(run());
    } catch (const ConfigError&) {
      throw;  // unknown check names are configuration errors
    } catch (const std::exception& e) {
      // a check that cannot complete (e.g. structurally degenerate data) is
      // a failed check, not a configuration error
      CheckResult r;
      r.name = name;
      r.value = std::numeric_limits<double>::infinity();
      r.tolerance = 0.0;
      r.pass = false;
      r.details["error"] = e.what();
      rep.checks.push_back(std::move(r));
    }
  }
  return rep;
}

}  // namespace bitop
