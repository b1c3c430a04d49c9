#include "bitop/invariants.hpp"

#include "bitop/basis.hpp"
#include "bitop/bracket.hpp"
#include "bitop/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace bitop {

const std::array<std::string_view, 10>& IntegralSet::names() {
  static const std::array<std::string_view, 10> n = {
      "p4", "p3", "p2", "p1", "p0", "q4", "q3", "q2", "q1", "q0"};
  return n;
}

IntegralSet integral_set(const BodyState& s, const Params& p) {
  p.validate();
  const auto [cp, cm] = unpack(p.cmat());
  const auto [mp, mm] = unpack(s.m);
  const auto [gp, gm] = unpack(s.g);
  IntegralSet out;
  out.p4 = cp.dot(cp) + cm.dot(cm);
  out.p3 = 2.0 * (cp.dot(mp) + cm.dot(mm));
  out.p2 = mp.dot(mp) + mm.dot(mm) + 2.0 * (cp.dot(gp) + cm.dot(gm));
  out.p1 = 2.0 * (gp.dot(mp) + gm.dot(mm));
  out.p0 = gp.dot(gp) + gm.dot(gm);
  out.q4 = cp.dot(cm);
  out.q3 = cp.dot(mm) + cm.dot(mp);
  out.q2 = cp.dot(gm) + cm.dot(gp) + mp.dot(mm);
  out.q1 = mp.dot(gm) + mm.dot(gp);
  out.q0 = gp.dot(gm);
  return out;
}

IntegralSet integral_set_components(const BodyState& s, const Params& p) {
  p.validate();
  const Skew4 c = p.cmat();
  const Skew4& m = s.m;
  const Skew4& g = s.g;
  IntegralSet out;
  out.p4 = c.m12 * c.m12 + c.m34 * c.m34;
  out.p3 = 2.0 * c.m34 * m.m34 + 2.0 * c.m12 * m.m12;
  // The m24^2 term is required for conservation; see p2_without_m24.
  out.p2 = m.m13 * m.m13 + m.m14 * m.m14 + m.m23 * m.m23 + m.m12 * m.m12 +
           m.m24 * m.m24 + m.m34 * m.m34 + 2.0 * c.m12 * g.m12 + 2.0 * c.m34 * g.m34;
  out.p1 = 2.0 * (g.m12 * m.m12 + g.m13 * m.m13 + g.m14 * m.m14 + g.m23 * m.m23 +
                  g.m24 * m.m24 + g.m34 * m.m34);
  out.p0 = g.m12 * g.m12 + g.m13 * g.m13 + g.m14 * g.m14 + g.m23 * g.m23 +
           g.m24 * g.m24 + g.m34 * g.m34;
  out.q4 = c.m12 * c.m34;
  out.q3 = c.m34 * m.m12 + c.m12 * m.m34;
  out.q2 = c.m34 * g.m12 + g.m34 * c.m12 + m.m12 * m.m34 + m.m23 * m.m14 -
           m.m13 * m.m24;
  out.q1 = m.m34 * g.m12 + m.m12 * g.m34 + m.m14 * g.m23 + m.m23 * g.m14 -
           g.m13 * m.m24 - g.m24 * m.m13;
  out.q0 = g.m34 * g.m12 + g.m23 * g.m14 - g.m13 * g.m24;
  return out;
}

double p2_without_m24(const BodyState& s, const Params& p) {
  return integral_set_components(s, p).p2 - s.m.m24 * s.m.m24;
}

IntegralClassification classify(const Params& p) {
  p.validate();
  return {{"p1", "p0", "q1", "q0"},
          {"p3", "p2", "q3", "q2"},
          {"p4", "q4"}};
}

double ConservationReport::worst() const {
  double w = 0.0;
  for (double d : max_rel_drift) w = std::max(w, d);
  return w;
}

ConservationReport conservation_report(const Trajectory& t) {
  if (t.states.empty()) throw std::invalid_argument("conservation_report: empty trajectory");
  ConservationReport rep;
  const auto f0 = integral_set(t.states.front(), t.params).values();
  for (const BodyState& s : t.states) {
    const auto f = integral_set(s, t.params).values();
    for (std::size_t k = 0; k < f.size(); ++k) {
      const double drift = std::abs(f[k] - f0[k]) / (1.0 + std::abs(f0[k]));
      rep.max_rel_drift[k] = std::max(rep.max_rel_drift[k], drift);
    }
  }
  return rep;
}

namespace {

std::array<Observable, 4> nontrivial_integrals() {
  return {Observable{[](const BodyState& s, const Params& p) { return integral_set(s, p).p3; }},
          Observable{[](const BodyState& s, const Params& p) { return integral_set(s, p).p2; }},
          Observable{[](const BodyState& s, const Params& p) { return integral_set(s, p).q3; }},
          Observable{[](const BodyState& s, const Params& p) { return integral_set(s, p).q2; }}};
}

std::array<Observable, 4> casimirs() {
  return {Observable{[](const BodyState& s, const Params& p) { return integral_set(s, p).p1; }},
          Observable{[](const BodyState& s, const Params& p) { return integral_set(s, p).p0; }},
          Observable{[](const BodyState& s, const Params& p) { return integral_set(s, p).q1; }},
          Observable{[](const BodyState& s, const Params& p) { return integral_set(s, p).q0; }}};
}

}  // namespace

Eigen::Matrix<double, 5, 5> involution_matrix(const BodyState& s, const Params& p) {
  std::array<Observable, 5> fs;
  const auto ints = nontrivial_integrals();
  for (int k = 0; k < 4; ++k) fs[static_cast<std::size_t>(k)] = ints[static_cast<std::size_t>(k)];
  fs[4] = [](const BodyState& st, const Params& pp) { return hamiltonian(st, pp); };
  Eigen::Matrix<double, 5, 5> out = Eigen::Matrix<double, 5, 5>::Zero();
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      const double v = poisson_bracket(fs[static_cast<std::size_t>(i)],
                                       fs[static_cast<std::size_t>(j)], s, p);
      out(i, j) = v;
      out(j, i) = -v;
    }
  return out;
}

double max_casimir_coordinate_bracket(const BodyState& s, const Params& p) {
  double worst = 0.0;
  const auto cas = casimirs();
  for (const auto& c : cas) {
    for (int k = 0; k < 12; ++k) {
      Observable coord = [k](const BodyState& st, const Params&) {
        const auto me = st.m.entries();
        const auto ge = st.g.entries();
        return k < 6 ? me[static_cast<std::size_t>(k)]
                     : ge[static_cast<std::size_t>(k - 6)];
      };
      worst = std::max(worst, std::abs(poisson_bracket(c, coord, s, p)));
    }
    for (const auto& f : nontrivial_integrals())
      worst = std::max(worst, std::abs(poisson_bracket(c, f, s, p)));
  }
  return worst;
}

double max_integral_hamiltonian_bracket(const BodyState& s, const Params& p) {
  double worst = 0.0;
  const Observable ham = [](const BodyState& st, const Params& pp) {
    return hamiltonian(st, pp);
  };
  for (const auto& f : nontrivial_integrals())
    worst = std::max(worst, std::abs(poisson_bracket(f, ham, s, p)));
  return worst;
}

RankReport independence_rank(const BodyState& s, const Params& p) {
  const auto ints = nontrivial_integrals();
  Eigen::Matrix<double, 4, 12> jac;
  for (int i = 0; i < 4; ++i) {
    const auto [gm, gg] = observable_gradient(ints[static_cast<std::size_t>(i)], s, p);
    const auto me = gm.entries();
    const auto ge = gg.entries();
    for (int k = 0; k < 6; ++k) {
      jac(i, k) = me[static_cast<std::size_t>(k)];
      jac(i, 6 + k) = ge[static_cast<std::size_t>(k)];
    }
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 4, 12>> svd(jac);
  RankReport rep;
  rep.singular_values = svd.singularValues();
  const double cut = 1e-8 * rep.singular_values(0);
  for (int k = 0; k < 4; ++k)
    if (rep.singular_values(k) > cut) ++rep.rank;
  return rep;
}

CasimirPolyCheck casimir_poly_check(const BodyState& s, const Params& p) {
  const IntegralSet f = integral_set(s, p);
  const MatPoly lt = to_tilde(lax_matrix(s, p));
  const std::vector<double> nodes = chebyshev_nodes(9, 1.5);

  std::vector<cplx> xs, pf_vals, tr_vals;
  for (double x : nodes) {
    xs.push_back(cplx(x));
    const CMat4 l = lax_matrix(s, p).eval(x);
    const Skew4 lre = Skew4::from_matrix(l.real());
    pf_vals.push_back(cplx(pfaffian(lre)));
    const CMat4 ltv = lt.eval(x);
    tr_vals.push_back(-0.5 * (ltv * ltv).trace());
  }
  const ScalarPoly pf_fit = fit_polynomial(xs, pf_vals, 8);
  const ScalarPoly tr_fit = fit_polynomial(xs, tr_vals, 8);

  CasimirPolyCheck out;
  out.max_imag = std::max(pf_fit.max_imag(), tr_fit.max_imag());
  const std::array<double, 5> q = {f.q0, f.q1, f.q2, f.q3, f.q4};
  for (int k = 0; k <= 8; ++k) {
    const double expected = k <= 4 ? q[static_cast<std::size_t>(k)] : 0.0;
    out.pfaffian_fit_residual =
        std::max(out.pfaffian_fit_residual, std::abs(pf_fit.coeff(k) - expected));
  }
  for (int k : {0, 1, 4}) {
    const double expected = k == 0 ? f.p0 : (k == 1 ? f.p1 : f.p4);
    out.trace_fit_residual =
        std::max(out.trace_fit_residual, std::abs(tr_fit.coeff(k) - expected));
  }
  for (int k = 5; k <= 8; ++k)
    out.trace_fit_residual = std::max(out.trace_fit_residual, std::abs(tr_fit.coeff(k)));
  out.trace_coeff_l2 = tr_fit.coeff(2).real();
  out.trace_coeff_l3 = tr_fit.coeff(3).real();
  return out;
}

}  // namespace bitop
