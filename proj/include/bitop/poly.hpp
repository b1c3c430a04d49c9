#pragma once

#include <complex>
#include <vector>

namespace bitop {

using cplx = std::complex<double>;

/// Univariate polynomial with complex coefficients, lowest degree first.
/// The coefficient vector may carry trailing (near-)zeros; `degree()` and
/// `trimmed()` apply a relative tolerance against the largest coefficient.
class ScalarPoly {
 public:
  ScalarPoly() : c_{cplx(0.0)} {}
  explicit ScalarPoly(std::vector<cplx> c);
  static ScalarPoly from_real(const std::vector<double>& c);
  static ScalarPoly constant(cplx v) { return ScalarPoly({v}); }
  /// c * lambda^k
  static ScalarPoly monomial(int k, cplx c = 1.0);

  const std::vector<cplx>& coeffs() const { return c_; }
  cplx coeff(int k) const;
  int size() const { return static_cast<int>(c_.size()); }

  /// Degree after trimming trailing coefficients below rel_tol * max|coeff|.
  /// The zero polynomial reports degree -1.
  int degree(double rel_tol = 1e-12) const;
  ScalarPoly trimmed(double rel_tol = 1e-12) const;

  cplx eval(cplx x) const;
  ScalarPoly derivative() const;

  double norm_inf() const;
  double max_imag() const;
  /// Copy with imaginary parts dropped.
  ScalarPoly real_part() const;

  /// Roots of the trimmed polynomial via companion-matrix eigenvalues.
  std::vector<cplx> roots(double rel_tol = 1e-12) const;

  ScalarPoly& operator+=(const ScalarPoly& o);
  ScalarPoly& operator-=(const ScalarPoly& o);
  ScalarPoly& operator*=(cplx v);
  friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
  friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
  friend ScalarPoly operator*(ScalarPoly a, cplx v) { return a *= v; }
  friend ScalarPoly operator*(cplx v, ScalarPoly a) { return a *= v; }
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);

 private:
  std::vector<cplx> c_;
};

/// Remainder of a by b (degrees via the given tolerance).  Throws when b is
/// (numerically) zero.
ScalarPoly poly_mod(const ScalarPoly& a, const ScalarPoly& b, double rel_tol = 1e-12);

enum class SquarefreeStatus { squarefree, repeated_factor, borderline };

struct SquarefreeResult {
  SquarefreeStatus status = SquarefreeStatus::squarefree;
  /// Smallest normalized remainder seen in the Euclidean sequence.
  double min_remainder = 1.0;
  /// Degree of the detected common factor (0 when squarefree).
  int gcd_degree = 0;
};

/// Numeric squarefreeness of p via the Euclidean remainder sequence of
/// (p, p').  Remainders within [tol, borderline_band*tol] of zero make the
/// verdict `borderline` instead of a genus-bearing claim.  A genuine
/// repeated factor collapses the remainder far below tol (double roots at
/// separation eps contribute ~eps^2), while the sequence of a squarefree
/// polynomial can dip to ~1e-7 from conditioning alone, so the band is kept
/// narrow.
SquarefreeResult squarefree_test(const ScalarPoly& p, double tol = 1e-9,
                                 double borderline_band = 50.0);

/// Coefficients (lowest first) of the degree-`degree` polynomial through
/// the sample set, solved in the least-squares sense (exact when the number
/// of samples is degree+1).
ScalarPoly fit_polynomial(const std::vector<cplx>& xs, const std::vector<cplx>& ys,
                          int degree);

/// n Chebyshev sample points scaled to [-radius, radius].
std::vector<double> chebyshev_nodes(int n, double radius = 1.0);

}  // namespace bitop
