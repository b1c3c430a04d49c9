#include "bitop/hierarchy.hpp"

#include "bitop/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bitop {

HierState make_hier_state(double d, std::vector<Skew4> mats) {
  if (mats.size() < 2)
    throw std::invalid_argument("hier state: need at least two matrix coefficients");
  if (d == 0.0) throw std::invalid_argument("hier state: d must be nonzero");
  HierState hs;
  hs.d = d;
  hs.mats = std::move(mats);
  return hs;
}

HierTangent hier_rhs(const HierState& hs, const Skew4& omega, const Params& p) {
  p.validate();
  const Skew4 chi = p.chi();
  const int n = hs.order();
  HierTangent out;
  out.dmats.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Skew4 dk = commutator(hs.mats[static_cast<std::size_t>(k)], omega);
    if (k + 1 < n) dk -= commutator(chi, hs.mats[static_cast<std::size_t>(k + 1)]);
    out.dmats[static_cast<std::size_t>(k)] = dk;
  }
  out.constraint_residual =
      (commutator(chi, hs.mats.front()) - commutator(hs.bmat(p), omega)).norm();
  return out;
}

OmegaPolicyResult omega_policy(const HierState& hs, const Params& p) {
  p.validate();
  const Skew4 chi = p.chi();
  const Skew4 w0 = omega_from_m(hs.mats.front(), p);
  const Skew4 target = commutator(chi, hs.mats.front());
  const Skew4 image = commutator(hs.bmat(p), w0);
  OmegaPolicyResult out;
  const double denom = pairing(image, image);
  out.scale = denom > 0.0 ? pairing(target, image) / denom : 1.0;
  out.chi_component = 0.0;  // [B, chi] = 0: no effect on the residual
  out.omega = out.scale * w0;
  out.constraint_residual = (target - commutator(hs.bmat(p), out.omega)).norm();
  return out;
}

std::vector<HierState> integrate_hier(const HierState& hs0, const Params& p, double dt,
                                      int steps) {
  if (!(dt > 0.0) || steps < 1)
    throw std::invalid_argument("integrate_hier: bad step size or count");
  auto f = [&p](const HierState& hs) {
    return hier_rhs(hs, omega_policy(hs, p).omega, p).dmats;
  };
  auto axpy = [](const HierState& hs, double c, const std::vector<Skew4>& k) {
    HierState out = hs;
    for (std::size_t i = 0; i < out.mats.size(); ++i) out.mats[i] += c * k[i];
    return out;
  };
  std::vector<HierState> traj;
  traj.reserve(static_cast<std::size_t>(steps) + 1);
  traj.push_back(hs0);
  HierState hs = hs0;
  for (int s = 0; s < steps; ++s) {
    const auto k1 = f(hs);
    const auto k2 = f(axpy(hs, 0.5 * dt, k1));
    const auto k3 = f(axpy(hs, 0.5 * dt, k2));
    const auto k4 = f(axpy(hs, dt, k3));
    for (std::size_t i = 0; i < hs.mats.size(); ++i)
      hs.mats[i] += (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    traj.push_back(hs);
  }
  return traj;
}

namespace {

Skew4 eval_real(const HierState& hs, const Params& p, double lambda) {
  const int n = hs.order();
  Skew4 acc = hs.bmat(p);
  for (int k = 0; k < n; ++k) {
    acc *= lambda;
    acc += hs.mats[static_cast<std::size_t>(k)];
  }
  return acc;
}

}  // namespace

HierSpectral hier_spectral(const HierState& hs, const Params& p) {
  p.validate();
  const int n = hs.order();
  const int samples = 4 * n + 1;
  const std::vector<double> nodes = chebyshev_nodes(samples, 1.0);

  std::vector<cplx> xs, pvals, qvals;
  xs.reserve(static_cast<std::size_t>(samples));
  for (double x : nodes) {
    xs.push_back(cplx(x));
    const Skew4 l = eval_real(hs, p, x);
    // -1/2 tr(L^2) = sum of squared entries; Pf for the second quartic.
    double tr = 0.0;
    for (double e : l.entries()) tr += e * e;
    pvals.push_back(cplx(tr));
    qvals.push_back(cplx(pfaffian(l)));
  }
  const ScalarPoly pfit = fit_polynomial(xs, pvals, samples - 1);
  const ScalarPoly qfit = fit_polynomial(xs, qvals, samples - 1);

  HierSpectral out;
  for (int k = 2 * n + 1; k < samples; ++k)
    out.interp_tail = std::max(
        {out.interp_tail, std::abs(pfit.coeff(k)), std::abs(qfit.coeff(k))});

  auto truncate = [&](const ScalarPoly& f) {
    std::vector<cplx> c(f.coeffs().begin(), f.coeffs().begin() + 2 * n + 1);
    return ScalarPoly(std::move(c)).real_part();
  };
  out.ppoly = truncate(pfit);
  out.qpoly = truncate(qfit);
  out.degree_p = out.ppoly.degree(1e-9);
  out.degree_q = out.qpoly.degree(1e-9);

  const double tail_scale =
      1e-9 * std::max(1.0, std::max(pfit.norm_inf(), qfit.norm_inf()));
  if (out.interp_tail > tail_scale || out.degree_p != 2 * n || out.degree_q != 2 * n) {
    out.degenerate = true;
    out.note = "unexpected spectral degrees";
    return out;
  }
  const ScalarPoly disc =
      cplx(0.25) * (out.ppoly * out.ppoly) - out.qpoly * out.qpoly;
  const SquarefreeResult sq = squarefree_test(disc);
  if (sq.status != SquarefreeStatus::squarefree) {
    out.degenerate = true;
    out.note = "hyperelliptic model not squarefree";
    return out;
  }
  out.genus = 2 * n - 1;
  return out;
}

CoveringPartition equal_split(const ScalarPoly& pn, const ScalarPoly& qn) {
  const int deg = pn.degree();
  if (deg != qn.degree() || deg < 2)
    throw std::invalid_argument("equal_split: spectral polynomials of equal degree >= 2 required");
  const ScalarPoly half = cplx(0.5) * pn;
  const ScalarPoly plus = half + qn;
  const ScalarPoly minus = half - qn;
  const ScalarPoly disc = plus * minus;
  const ScalarPoly disc_direct = cplx(0.25) * (pn * pn) - qn * qn;

  CoveringPartition out;
  ScalarPoly fdiff = disc - disc_direct;
  out.factorization_residual =
      fdiff.norm_inf() / std::max(1.0, disc_direct.norm_inf());

  out.roots = disc.roots();
  const std::vector<cplx> plus_roots = plus.roots();
  const std::vector<cplx> minus_roots = minus.roots();

  double root_scale = 1.0;
  for (const cplx& r : out.roots) root_scale = std::max(root_scale, std::abs(r));

  auto nearest = [](const std::vector<cplx>& pool, cplx r) {
    double best = std::numeric_limits<double>::infinity();
    for (const cplx& c : pool) best = std::min(best, std::abs(c - r));
    return best;
  };

  out.side.reserve(out.roots.size());
  for (const cplx& r : out.roots) {
    const double dplus = nearest(plus_roots, r);
    const double dminus = nearest(minus_roots, r);
    const double tol = 1e-7 * root_scale;
    if (dplus < tol && dminus < tol) {
      ++out.ambiguous;  // root claimed by both factors
      out.side.push_back(dplus <= dminus ? 0 : 1);
    } else {
      out.side.push_back(dplus <= dminus ? 0 : 1);
    }
    out.max_match_distance = std::max(out.max_match_distance, std::min(dplus, dminus));
  }
  for (int s : out.side) (s == 0 ? out.plus_count : out.minus_count)++;
  return out;
}

bool is_equally_split(const std::vector<int>& sides) {
  int c0 = 0, c1 = 0;
  for (int s : sides) (s == 0 ? c0 : c1)++;
  if (c0 == 0 || c1 == 0)
    throw std::invalid_argument("is_equally_split: both subsets must be nonempty");
  if (c0 % 2 != 0 || c1 % 2 != 0)
    throw std::invalid_argument("is_equally_split: both subsets must have even size");
  return c0 == c1;
}

}  // namespace bitop
