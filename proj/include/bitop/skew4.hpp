#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <utility>

namespace bitop {

using Vec3 = Eigen::Vector3d;
using CMat4 = Eigen::Matrix4cd;

/// Real skew-symmetric 4x4 matrix stored as its six independent entries
/// (upper triangle, row-major order).  The full matrix view is materialized
/// on demand so no asymmetry can accumulate.
struct Skew4 {
  double m12 = 0.0;
  double m13 = 0.0;
  double m14 = 0.0;
  double m23 = 0.0;
  double m24 = 0.0;
  double m34 = 0.0;

  static Skew4 zero() { return {}; }
  static Skew4 from_entries(const std::array<double, 6>& e) {
    return {e[0], e[1], e[2], e[3], e[4], e[5]};
  }
  /// Antisymmetric part of `full`; exact round trip for skew input.
  static Skew4 from_matrix(const Eigen::Matrix4d& full);

  std::array<double, 6> entries() const { return {m12, m13, m14, m23, m24, m34}; }
  Eigen::Matrix4d matrix() const;
  CMat4 cmatrix() const { return matrix().cast<std::complex<double>>(); }

  double operator[](int k) const { return entries()[static_cast<std::size_t>(k)]; }

  Skew4& operator+=(const Skew4& o);
  Skew4& operator-=(const Skew4& o);
  Skew4& operator*=(double c);

  friend Skew4 operator+(Skew4 x, const Skew4& y) { return x += y; }
  friend Skew4 operator-(Skew4 x, const Skew4& y) { return x -= y; }
  friend Skew4 operator*(double c, Skew4 x) { return x *= c; }
  friend Skew4 operator*(Skew4 x, double c) { return x *= c; }
  friend Skew4 operator-(Skew4 x) { return x *= -1.0; }

  /// Frobenius norm of the full matrix.
  double norm() const { return std::sqrt(2.0 * squared_sum()); }
  double max_abs() const;
  bool is_finite() const;

 private:
  double squared_sum() const {
    return m12 * m12 + m13 * m13 + m14 * m14 + m23 * m23 + m24 * m24 + m34 * m34;
  }
};

/// [x, y] = xy - yx; skew-symmetric for skew inputs.
Skew4 commutator(const Skew4& x, const Skew4& y);
CMat4 commutator(const CMat4& x, const CMat4& y);

/// Pf(x) = m12 m34 - m13 m24 + m14 m23; Pf(x)^2 = det(x).
double pfaffian(const Skew4& x);

/// Invariant pairing <x,y> = -1/2 tr(xy), i.e. the dot product of the
/// six independent entries.
double pairing(const Skew4& x, const Skew4& y);

/// Correspondence between a vector pair and a skew matrix:
///
///   (u, v)  ->  [   0   -u3    u2   -v1 ]
///               [  u3    0   -u1   -v2 ]
///               [ -u2   u1     0   -v3 ]
///               [  v1   v2    v3    0  ]
Skew4 pack(const Vec3& plus, const Vec3& minus);
std::pair<Vec3, Vec3> unpack(const Skew4& x);

/// so(3)+so(3) splitting: (x1, x2) = ((x+ + x-)/2, (x+ - x-)/2).
std::pair<Vec3, Vec3> split(const Skew4& x);
Skew4 merge(const Vec3& first, const Vec3& second);

}  // namespace bitop
