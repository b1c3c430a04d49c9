#include "bitop/poly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bitop {

ScalarPoly::ScalarPoly(std::vector<cplx> c) : c_(std::move(c)) {
  if (c_.empty()) c_.push_back(cplx(0.0));
}

ScalarPoly ScalarPoly::from_real(const std::vector<double>& c) {
  std::vector<cplx> v(c.begin(), c.end());
  return ScalarPoly(std::move(v));
}

ScalarPoly ScalarPoly::monomial(int k, cplx c) {
  std::vector<cplx> v(static_cast<std::size_t>(k) + 1, cplx(0.0));
  v.back() = c;
  return ScalarPoly(std::move(v));
}

cplx ScalarPoly::coeff(int k) const {
  if (k < 0 || k >= size()) return cplx(0.0);
  return c_[static_cast<std::size_t>(k)];
}

int ScalarPoly::degree(double rel_tol) const {
  const double cut = rel_tol * norm_inf();
  for (int k = size() - 1; k >= 0; --k)
    if (std::abs(c_[static_cast<std::size_t>(k)]) > cut) return k;
  return -1;
}

ScalarPoly ScalarPoly::trimmed(double rel_tol) const {
  const int d = degree(rel_tol);
  if (d < 0) return ScalarPoly();
  std::vector<cplx> v(c_.begin(), c_.begin() + d + 1);
  return ScalarPoly(std::move(v));
}

cplx ScalarPoly::eval(cplx x) const {
  cplx acc(0.0);
  for (int k = size() - 1; k >= 0; --k) acc = acc * x + c_[static_cast<std::size_t>(k)];
  return acc;
}

ScalarPoly ScalarPoly::derivative() const {
  if (size() <= 1) return ScalarPoly();
  std::vector<cplx> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = static_cast<double>(k) * c_[k];
  return ScalarPoly(std::move(v));
}

double ScalarPoly::norm_inf() const {
  double m = 0.0;
  for (const cplx& v : c_) m = std::max(m, std::abs(v));
  return m;
}

double ScalarPoly::max_imag() const {
  double m = 0.0;
  for (const cplx& v : c_) m = std::max(m, std::abs(v.imag()));
  return m;
}

ScalarPoly ScalarPoly::real_part() const {
  std::vector<cplx> v(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) v[k] = cplx(c_[k].real(), 0.0);
  return ScalarPoly(std::move(v));
}

std::vector<cplx> ScalarPoly::roots(double rel_tol) const {
  const ScalarPoly p = trimmed(rel_tol);
  const int d = p.degree(0.0);
  if (d <= 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  const cplx lead = p.coeff(d);
  for (int k = 0; k < d; ++k) companion(k, d - 1) = -p.coeff(k) / lead;
  for (int k = 1; k < d; ++k) companion(k, k - 1) = cplx(1.0);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("companion eigensolver failed");
  std::vector<cplx> out(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) out[static_cast<std::size_t>(k)] = es.eigenvalues()(k);
  return out;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
  if (o.size() > size()) c_.resize(o.c_.size(), cplx(0.0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
  if (o.size() > size()) c_.resize(o.c_.size(), cplx(0.0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

ScalarPoly& ScalarPoly::operator*=(cplx v) {
  for (cplx& c : c_) c *= v;
  return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  std::vector<cplx> r(a.c_.size() + b.c_.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return ScalarPoly(std::move(r));
}

ScalarPoly poly_mod(const ScalarPoly& a, const ScalarPoly& b, double rel_tol) {
  const ScalarPoly bt = b.trimmed(rel_tol);
  const int db = bt.degree(0.0);
  if (db < 0) throw std::invalid_argument("poly_mod: zero divisor");
  std::vector<cplx> r = a.trimmed(rel_tol).coeffs();
  const cplx lead = bt.coeff(db);
  while (static_cast<int>(r.size()) - 1 >= db) {
    const int dr = static_cast<int>(r.size()) - 1;
    const cplx q = r.back() / lead;
    for (int k = 0; k <= db; ++k)
      r[static_cast<std::size_t>(dr - db + k)] -= q * bt.coeff(k);
    r.pop_back();
    if (r.empty()) break;
  }
  return r.empty() ? ScalarPoly() : ScalarPoly(std::move(r));
}

SquarefreeResult squarefree_test(const ScalarPoly& p, double tol, double borderline_band) {
  SquarefreeResult out;
  ScalarPoly a = p.trimmed();
  if (a.degree(0.0) <= 0) {
    out.status = SquarefreeStatus::squarefree;
    return out;
  }
  a *= cplx(1.0 / a.norm_inf());
  ScalarPoly b = a.derivative();
  b *= cplx(1.0 / b.norm_inf());
  while (true) {
    if (b.degree() <= 0) {
      // gcd is a constant: only check it is not numerically zero
      out.status = SquarefreeStatus::squarefree;
      return out;
    }
    ScalarPoly r = poly_mod(a, b);
    const double rnorm = r.norm_inf();
    out.min_remainder = std::min(out.min_remainder, rnorm);
    if (rnorm <= tol) {
      out.status = SquarefreeStatus::repeated_factor;
      out.gcd_degree = b.degree();
      return out;
    }
    if (rnorm <= borderline_band * tol) {
      out.status = SquarefreeStatus::borderline;
      out.gcd_degree = b.degree();
      return out;
    }
    a = b;
    b = r;
    b *= cplx(1.0 / rnorm);
  }
}

ScalarPoly fit_polynomial(const std::vector<cplx>& xs, const std::vector<cplx>& ys,
                          int degree) {
  if (xs.size() != ys.size() || static_cast<int>(xs.size()) < degree + 1)
    throw std::invalid_argument("fit_polynomial: need at least degree+1 samples");
  const int n = static_cast<int>(xs.size());
  Eigen::MatrixXcd vand(n, degree + 1);
  Eigen::VectorXcd rhs(n);
  for (int i = 0; i < n; ++i) {
    cplx pw(1.0);
    for (int j = 0; j <= degree; ++j) {
      vand(i, j) = pw;
      pw *= xs[static_cast<std::size_t>(i)];
    }
    rhs(i) = ys[static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXcd sol = vand.colPivHouseholderQr().solve(rhs);
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (int j = 0; j <= degree; ++j) c[static_cast<std::size_t>(j)] = sol(j);
  return ScalarPoly(std::move(c));
}

std::vector<double> chebyshev_nodes(int n, double radius) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    xs[static_cast<std::size_t>(k)] =
        radius * std::cos((2.0 * k + 1.0) / (2.0 * n) * M_PI);
  return xs;
}

}  // namespace bitop
