#include <cmath>

#include <doctest.h>

#include "lactoep/errors.hpp"
#include "lactoep/quadrature.hpp"

using namespace lactoep;

TEST_CASE("single circle residues") {
  QuadratureConfig cfg;
  auto r1 = circle_quadrature([](cplx z) { return 1.0 / z; }, 0.7, cfg);
  CHECK(r1.converged);
  CHECK(std::abs(r1.value - cplx(1, 0)) < 1e-13);

  auto r2 = circle_quadrature([](cplx) { return cplx(1, 0); }, 1.3, cfg);
  CHECK(std::abs(r2.value) < 1e-14);

  auto r3 = circle_quadrature([](cplx z) { return std::exp(z) / (z * z * z); },
                              1.0, cfg);
  CHECK(std::abs(r3.value - cplx(0.5, 0)) < 1e-13);
}

TEST_CASE("double circle iterated residues") {
  QuadratureConfig cfg;
  auto r1 = double_circle_quadrature(
      [](cplx z, cplx s) { return 1.0 / (z - s); }, 0.8, 0.4, cfg);
  CHECK(std::abs(r1.value) < 1e-13);

  // inner residue at s = 0 gives 1/z, then the outer integral picks it up
  auto r2 = double_circle_quadrature(
      [](cplx z, cplx s) { return 1.0 / (s * (z - s)); }, 0.8, 0.4, cfg);
  CHECK(std::abs(r2.value - cplx(1, 0)) < 1e-13);

  // inner s-residues at 0 and z, then the outer pole at z = -0.3
  auto r3 = double_circle_quadrature(
      [](cplx z, cplx s) { return (1.0 + 0.3 / s) / ((1.0 + 0.3 / z) * (z - s)); },
      1.5, 2.5, cfg);
  CHECK(r3.converged);
  CHECK(std::abs(r3.value - cplx(0.3, 0)) < 1e-12);

  CHECK_THROWS_WITH_AS(double_circle_quadrature(
                           [](cplx, cplx) { return cplx(0, 0); }, 1.0, 1.0, cfg),
                       doctest::Contains("EqualRadii"), error);
}

TEST_CASE("non-convergence is reported, not thrown") {
  QuadratureConfig cfg;
  cfg.nodes = 4;
  cfg.max_doublings = 1;
  // pole very close to the contour: 8 nodes cannot resolve it
  auto r = circle_quadrature([](cplx z) { return 1.0 / (z - 0.69) / z; }, 0.7, cfg);
  CHECK(!r.converged);
  CHECK(r.last_change > cfg.tol);
}

TEST_CASE("spectral convergence under node doubling") {
  // trapezoid error for 1/(z-1/2) on |z|=0.7 decays like (0.5/0.7)^nodes
  auto at_nodes = [&](std::size_t n) {
    QuadratureConfig cfg;
    cfg.nodes = n;
    cfg.max_doublings = 0;
    return circle_quadrature([](cplx z) { return 1.0 / (z - 0.5); }, 0.7, cfg)
        .value;
  };
  const double err32 = std::abs(at_nodes(32) - cplx(1, 0));
  const double err64 = std::abs(at_nodes(64) - cplx(1, 0));
  CHECK(err32 > 0.0);
  CHECK(err64 < err32 / 100.0);
}

TEST_CASE("separated core agrees with the generic tensor rule") {
  QuadratureConfig cfg;
  auto a = [](cplx z) { return std::exp(z); };
  auto b = [](cplx s) { return 1.0 / (2.0 + s); };
  const auto sep = separated_double_integral(a, b, -3, 2, 1.0, 0.5, cfg);
  const auto gen = double_circle_quadrature(
      [&](cplx z, cplx s) {
        return a(z) * b(s) * s * s / (z * z * z) / (z - s);
      },
      1.0, 0.5, cfg);
  CHECK(std::abs(sep.value - gen.value) < 1e-12);

  // iterated-residue value: only the s^{-1} coefficient of b(s) s^2/(z-s)
  // expansion survives; direct check against exp-series coefficients
  const auto simple = separated_double_integral(
      a, [](cplx) { return cplx(1, 0); }, -3, -1, 1.0, 0.5, cfg);
  CHECK(std::abs(simple.value - cplx(1.0 / 6.0, 0)) < 1e-13);
}
