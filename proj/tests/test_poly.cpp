#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bitop/poly.hpp"

#include <algorithm>
#include <random>

using namespace bitop;

namespace {

ScalarPoly random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (cplx& v : c) v = cplx(uni(rng), uni(rng));
  if (std::abs(c.back()) < 0.1) c.back() += cplx(0.5);
  return ScalarPoly(std::move(c));
}

}  // namespace

TEST_CASE("degree, trim, eval") {
  const ScalarPoly p({cplx(1.0), cplx(2.0), cplx(0.0), cplx(1e-16)});
  CHECK(p.degree() == 1);
  CHECK(p.trimmed().size() == 2);
  CHECK(std::abs(p.eval(cplx(3.0)) - cplx(7.0)) < 1e-14);
  CHECK(ScalarPoly().degree() == -1);

  const ScalarPoly m = ScalarPoly::monomial(3, cplx(2.0));
  CHECK(m.degree() == 3);
  CHECK(std::abs(m.eval(cplx(2.0)) - cplx(16.0)) < 1e-14);
}

TEST_CASE("arithmetic against pointwise evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uni(-1.5, 1.5);
  for (int k = 0; k < 30; ++k) {
    const ScalarPoly a = random_poly(rng, 4);
    const ScalarPoly b = random_poly(rng, 3);
    const cplx x(uni(rng), uni(rng));
    CHECK(std::abs((a + b).eval(x) - (a.eval(x) + b.eval(x))) < 1e-12);
    CHECK(std::abs((a - b).eval(x) - (a.eval(x) - b.eval(x))) < 1e-12);
    CHECK(std::abs((a * b).eval(x) - a.eval(x) * b.eval(x)) < 1e-12);
    // derivative by central difference
    const cplx h(1e-6);
    const cplx fd = (a.eval(x + h) - a.eval(x - h)) / (2.0 * h);
    CHECK(std::abs(a.derivative().eval(x) - fd) < 1e-8);
  }
}

TEST_CASE("companion roots recover constructed zeros") {
  const std::vector<cplx> zeros = {cplx(1.0), cplx(-2.0, 0.5), cplx(0.3, -1.1),
                                   cplx(-0.4)};
  ScalarPoly p = ScalarPoly::constant(cplx(2.0));
  for (const cplx& z : zeros) p = p * ScalarPoly({-z, cplx(1.0)});
  std::vector<cplx> r = p.roots();
  REQUIRE(r.size() == zeros.size());
  for (const cplx& z : zeros) {
    double best = 1e300;
    for (const cplx& c : r) best = std::min(best, std::abs(c - z));
    CHECK(best < 1e-10);
  }
}

TEST_CASE("poly_mod: remainder of a multiple vanishes") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 20; ++k) {
    const ScalarPoly a = random_poly(rng, 3);
    const ScalarPoly b = random_poly(rng, 2);
    const ScalarPoly prod = a * b;
    CHECK(poly_mod(prod, b).norm_inf() < 1e-12 * prod.norm_inf());
    // generic remainder has degree below the divisor
    const ScalarPoly r = poly_mod(random_poly(rng, 5), b);
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(poly_mod(random_poly(rng, 2), ScalarPoly()), std::invalid_argument);
}

TEST_CASE("squarefree test separates the three verdicts") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 10; ++k) {
    // generic random polynomials are squarefree
    const ScalarPoly p = random_poly(rng, 8);
    CHECK(squarefree_test(p).status == SquarefreeStatus::squarefree);

    // an exact square factor is detected
    const ScalarPoly f = random_poly(rng, 2);
    const ScalarPoly g = random_poly(rng, 4);
    const SquarefreeResult rep = squarefree_test(f * f * g);
    CHECK(rep.status == SquarefreeStatus::repeated_factor);
    CHECK(rep.gcd_degree >= 1);
  }
  // nearly-coalescing roots are not reported as a clean squarefree verdict
  const double eps = 1e-11;
  const ScalarPoly near =
      ScalarPoly({cplx(-1.0), cplx(1.0)}) * ScalarPoly({cplx(-1.0 - eps), cplx(1.0)}) *
      ScalarPoly({cplx(2.0), cplx(1.0)});
  CHECK(squarefree_test(near).status != SquarefreeStatus::squarefree);
}

TEST_CASE("polynomial fit reproduces sampled coefficients") {
  std::mt19937_64 rng(14);
  const ScalarPoly p = random_poly(rng, 6);
  const std::vector<double> nodes = chebyshev_nodes(9, 1.3);
  std::vector<cplx> xs, ys;
  for (double t : nodes) {
    xs.push_back(cplx(t));
    ys.push_back(p.eval(cplx(t)));
  }
  const ScalarPoly fit = fit_polynomial(xs, ys, 8);
  for (int c = 0; c <= 8; ++c)
    CHECK(std::abs(fit.coeff(c) - p.coeff(c)) < 1e-10);
  CHECK_THROWS_AS(fit_polynomial(xs, ys, 9), std::invalid_argument);
}

TEST_CASE("chebyshev nodes are inside the scaled interval") {
  const std::vector<double> nodes = chebyshev_nodes(17, 2.0);
  CHECK(nodes.size() == 17);
  for (double t : nodes) CHECK(std::abs(t) < 2.0);
}
