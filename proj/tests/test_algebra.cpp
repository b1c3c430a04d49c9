#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bitop/basis.hpp"
#include "bitop/config.hpp"
#include "bitop/dynamics.hpp"
#include "bitop/skew4.hpp"

#include <random>

using namespace bitop;

namespace {

Skew4 random_skew(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::array<double, 6> e{};
  for (double& v : e) v = uni(rng);
  return Skew4::from_entries(e);
}

const Params kParams{1.0, 2.0, 0.3, 0.1};

}  // namespace

TEST_CASE("matrix view is skew and round-trips") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    const Skew4 x = random_skew(rng);
    const Eigen::Matrix4d full = x.matrix();
    CHECK((full + full.transpose()).cwiseAbs().maxCoeff() == 0.0);
    const Skew4 back = Skew4::from_matrix(full);
    CHECK((back - x).max_abs() == 0.0);
  }
}

TEST_CASE("pack template entries and zero case") {
  CHECK(pack(Vec3::Zero(), Vec3::Zero()).max_abs() == 0.0);

  const Skew4 x = pack(Vec3(1, 0, 0), Vec3::Zero());
  CHECK(x.m23 == -1.0);
  CHECK(x.m12 == 0.0);
  CHECK(x.m13 == 0.0);
  CHECK(x.m14 == 0.0);
  CHECK(x.m24 == 0.0);
  CHECK(x.m34 == 0.0);

  // minus-vector slots live in the last column
  Skew4 y;
  y.m14 = 1.0;
  const auto [u, v] = unpack(y);
  CHECK(u.norm() == 0.0);
  CHECK(v(0) == -1.0);
  CHECK(v(1) == 0.0);
  CHECK(v(2) == 0.0);
}

TEST_CASE("pack/unpack and split/merge are mutually inverse") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    Vec3 u, v;
    for (int i = 0; i < 3; ++i) {
      u(i) = uni(rng);
      v(i) = uni(rng);
    }
    const auto [uu, vv] = unpack(pack(u, v));
    CHECK((uu - u).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((vv - v).cwiseAbs().maxCoeff() < 1e-15);

    const Skew4 x = random_skew(rng);
    const auto [a, b] = split(x);
    CHECK((merge(a, b) - x).max_abs() < 1e-15);
    // split then reconstruct the +/- pair
    const auto [p, m] = unpack(x);
    CHECK((a + b - p).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((a - b - m).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("split of a symmetric pair lands on one factor") {
  const Vec3 v(0.3, -0.7, 0.2);
  const auto [a, b] = split(pack(v, v));
  CHECK((a - v).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(b.cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("commutator: skewness, [x,x] = 0, scalars drop out, Jacobi") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const Skew4 x = random_skew(rng);
    const Skew4 y = random_skew(rng);
    const Skew4 z = random_skew(rng);
    CHECK(commutator(x, x).max_abs() == 0.0);

    const Eigen::Matrix4d c = commutator(x, y).matrix();
    CHECK((c + c.transpose()).cwiseAbs().maxCoeff() < 1e-14);

    const CMat4 id = 0.7 * CMat4::Identity();
    CHECK(commutator(x.cmatrix(), id).norm() == 0.0);

    const Skew4 jacobi = commutator(x, commutator(y, z)) +
                         commutator(y, commutator(z, x)) +
                         commutator(z, commutator(x, y));
    CHECK(jacobi.max_abs() < 1e-13);
  }
}

TEST_CASE("pairing matches -1/2 tr(xy) and pfaffian squares to det") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 20; ++k) {
    const Skew4 x = random_skew(rng);
    const Skew4 y = random_skew(rng);
    CHECK(pairing(x, y) ==
          doctest::Approx(-0.5 * (x.matrix() * y.matrix()).trace()).epsilon(1e-13));
    CHECK(pfaffian(x) * pfaffian(x) ==
          doctest::Approx(x.matrix().determinant()).epsilon(1e-12));
  }
}

TEST_CASE("basis change fixes the identity and diagonalizes C") {
  const CMat4 id = CMat4::Identity();
  CHECK((to_tilde(id) - id).norm() < 1e-14);

  // lambda^2 coefficient for a = 1, b = 2, chi12 = 0.3, chi34 = 0.1
  const CMat4 ct = to_tilde(kParams.cmat().cmatrix());
  CMat4 expected = CMat4::Zero();
  expected(0, 0) = cplx(0, -0.3);
  expected(1, 1) = cplx(0, 0.3);
  expected(2, 2) = cplx(0, -0.9);
  expected(3, 3) = cplx(0, 0.9);
  CHECK((ct - expected).norm() < 1e-14);
}

TEST_CASE("transformed Lax matrix: zero pattern and closed-form assembly") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const BodyState s{random_skew(rng), random_skew(rng)};
    const MatPoly lt = to_tilde(lax_matrix(s, kParams));
    const BetaCoords bc = beta_coords(s, kParams);
    for (const cplx lambda : {cplx(0.37), cplx(-1.2, 0.8), cplx(2.0, -0.3)}) {
      const CMat4 a = lt.eval(lambda);
      CHECK(std::abs(a(0, 1)) < 1e-12);
      CHECK(std::abs(a(1, 0)) < 1e-12);
      CHECK(std::abs(a(2, 3)) < 1e-12);
      CHECK(std::abs(a(3, 2)) < 1e-12);
      CHECK((a - bc.tilde_matrix(lambda)).norm() < 1e-12 * (1.0 + a.norm()));
    }
  }
}

TEST_CASE("conjugation preserves characteristic data of each coefficient") {
  std::mt19937_64 rng(6);
  const BodyState s{random_skew(rng), random_skew(rng)};
  const MatPoly l = lax_matrix(s, kParams);
  const MatPoly lt = to_tilde(l);
  for (std::size_t k = 0; k < l.coeffs.size(); ++k) {
    const CMat4& a = l.coeffs[k];
    const CMat4& b = lt.coeffs[k];
    CHECK(std::abs(a.trace() - b.trace()) < 1e-10);
    CHECK(std::abs((a * a).trace() - (b * b).trace()) < 1e-10);
    CHECK(std::abs(a.determinant() - b.determinant()) < 1e-10);
  }
}

TEST_CASE("beta coordinates: zero state and single-entry cases") {
  const Params& p = kParams;
  BodyState zero{};
  const BetaCoords b0 = beta_coords(zero, p);
  CHECK(std::abs(b0.x3) == 0.0);
  CHECK(std::abs(b0.x4) == 0.0);
  CHECK(std::abs(b0.y3) == 0.0);
  CHECK(std::abs(b0.y4) == 0.0);
  CHECK(std::abs(b0.delta12.coeff(0)) == 0.0);
  CHECK(std::abs(b0.delta12.coeff(1)) == 0.0);
  CHECK(std::abs(b0.delta12.coeff(2) - cplx(0.9)) < 1e-15);
  CHECK(std::abs(b0.delta34.coeff(2) - cplx(0.3)) < 1e-15);

  BodyState s{};
  s.g.m13 = 2.0;
  CHECK(std::abs(beta_coords(s, p).x3 - cplx(1.0)) < 1e-15);
}
