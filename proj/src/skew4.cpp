#include "bitop/skew4.hpp"

namespace bitop {

Skew4 Skew4::from_matrix(const Eigen::Matrix4d& full) {
  const Eigen::Matrix4d a = 0.5 * (full - full.transpose());
  return {a(0, 1), a(0, 2), a(0, 3), a(1, 2), a(1, 3), a(2, 3)};
}

Eigen::Matrix4d Skew4::matrix() const {
  Eigen::Matrix4d x;
  // clang-format off
  x <<   0.0,  m12,  m13,  m14,
        -m12,  0.0,  m23,  m24,
        -m13, -m23,  0.0,  m34,
        -m14, -m24, -m34,  0.0;
  // clang-format on
  return x;
}

Skew4& Skew4::operator+=(const Skew4& o) {
  m12 += o.m12; m13 += o.m13; m14 += o.m14;
  m23 += o.m23; m24 += o.m24; m34 += o.m34;
  return *this;
}

Skew4& Skew4::operator-=(const Skew4& o) {
  m12 -= o.m12; m13 -= o.m13; m14 -= o.m14;
  m23 -= o.m23; m24 -= o.m24; m34 -= o.m34;
  return *this;
}

Skew4& Skew4::operator*=(double c) {
  m12 *= c; m13 *= c; m14 *= c;
  m23 *= c; m24 *= c; m34 *= c;
  return *this;
}

double Skew4::max_abs() const {
  double m = 0.0;
  for (double e : entries()) m = std::max(m, std::abs(e));
  return m;
}

bool Skew4::is_finite() const {
  for (double e : entries())
    if (!std::isfinite(e)) return false;
  return true;
}

Skew4 commutator(const Skew4& x, const Skew4& y) {
  const Eigen::Matrix4d a = x.matrix();
  const Eigen::Matrix4d b = y.matrix();
  return Skew4::from_matrix(a * b - b * a);
}

CMat4 commutator(const CMat4& x, const CMat4& y) { return x * y - y * x; }

double pfaffian(const Skew4& x) {
  return x.m12 * x.m34 - x.m13 * x.m24 + x.m14 * x.m23;
}

double pairing(const Skew4& x, const Skew4& y) {
  return x.m12 * y.m12 + x.m13 * y.m13 + x.m14 * y.m14 +
         x.m23 * y.m23 + x.m24 * y.m24 + x.m34 * y.m34;
}

Skew4 pack(const Vec3& plus, const Vec3& minus) {
  Skew4 x;
  x.m12 = -plus(2);
  x.m13 = plus(1);
  x.m14 = -minus(0);
  x.m23 = -plus(0);
  x.m24 = -minus(1);
  x.m34 = -minus(2);
  return x;
}

std::pair<Vec3, Vec3> unpack(const Skew4& x) {
  return {Vec3(-x.m23, x.m13, -x.m12), Vec3(-x.m14, -x.m24, -x.m34)};
}

std::pair<Vec3, Vec3> split(const Skew4& x) {
  const auto [p, m] = unpack(x);
  return {0.5 * (p + m), 0.5 * (p - m)};
}

Skew4 merge(const Vec3& first, const Vec3& second) {
  return pack(first + second, first - second);
}

}  // namespace bitop
