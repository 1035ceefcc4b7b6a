#include <cmath>
#include <numbers>

#include <doctest.h>

#include "corpus.hpp"
#include "lactoep/errors.hpp"
#include "lactoep/matrix.hpp"
#include "lactoep/symbol.hpp"

using namespace lactoep;

TEST_CASE("lacunary Toeplitz builder") {
  SUBCASE("identity symbol gives the identity matrix") {
    const CoefficientTable c = fourier_coefficients(corpus::identity_symbol(), -8, 8);
    const auto m = build_lacunary_toeplitz(c, 3, {1, 2, 3}, {1, 2, 3});
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        CHECK(std::abs(m(a, b) - (a == b ? cplx(1, 0) : cplx(0, 0))) < 1e-14);
  }
  SUBCASE("tridiagonal structure and a replaced line") {
    const CoefficientTable c =
        fourier_coefficients(corpus::tridiagonal_symbol(), -12, 12);
    const auto plain = build_lacunary_toeplitz(c, 4, {1, 2, 3, 4}, {1, 2, 3, 4});
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        const cplx want = a == b       ? cplx(1.12, 0)
                          : a == b + 1 ? cplx(0.4, 0)
                          : b == a + 1 ? cplx(0.3, 0)
                                       : cplx(0, 0);
        CHECK(std::abs(plain(a, b) - want) < 1e-12);
      }
    const auto replaced = build_lacunary_toeplitz(c, 4, {0, 2, 3, 4}, {1, 2, 3, 4});
    CHECK(std::abs(replaced(0, 0) - cplx(0.3, 0)) < 1e-12);
    for (std::size_t b = 1; b < 4; ++b) CHECK(std::abs(replaced(0, b)) < 1e-13);
  }
  SUBCASE("uncertified out-of-range index is an error") {
    CoefficientTable c;
    c.offset = -1;
    c.values = {cplx(0.3, 0), cplx(1.12, 0), cplx(0.4, 0)};
    c.tail_certified = false;
    CHECK_THROWS_WITH_AS(build_lacunary_toeplitz(c, 3, {1, 2, 3}, {1, 2, 3}),
                         doctest::Contains("CoefficientRangeTooSmall"), error);
    c.tail_certified = true;
    CHECK_NOTHROW(build_lacunary_toeplitz(c, 3, {1, 2, 3}, {1, 2, 3}));
  }
}

TEST_CASE("log determinant") {
  SUBCASE("identity") {
    ComplexMatrix eye(5, 5);
    for (std::size_t i = 0; i < 5; ++i) eye(i, i) = 1.0;
    const LogDet d = log_determinant(eye);
    CHECK(!d.is_zero);
    CHECK(std::abs(d.log_modulus) < 1e-14);
    CHECK(std::abs(d.phase) < 1e-14);
  }
  SUBCASE("diagonal (2, 3i)") {
    ComplexMatrix m(2, 2);
    m(0, 0) = cplx(2, 0);
    m(1, 1) = cplx(0, 3);
    const LogDet d = log_determinant(m);
    CHECK(d.log_modulus == doctest::Approx(std::log(6.0)).epsilon(1e-14));
    CHECK(d.phase == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
  }
  SUBCASE("random 3x3 against cofactor expansion") {
    corpus::Lcg rng;
    for (int trial = 0; trial < 20; ++trial) {
      ComplexMatrix m(3, 3);
      for (auto& v : m.data) v = rng.next_cplx();
      const cplx want = corpus::cofactor_det(m);
      const LogDet d = log_determinant(m);
      const cplx got = std::exp(cplx(d.log_modulus, d.phase));
      CHECK(std::abs(got - want) < 1e-12 * std::abs(want));
    }
  }
  SUBCASE("non-square rejected") {
    CHECK_THROWS_WITH_AS(log_determinant(ComplexMatrix(2, 3)),
                         doctest::Contains("NonSquare"), error);
  }
  SUBCASE("zero row flags an exact zero") {
    ComplexMatrix m(3, 3);
    m(1, 1) = 1.0;
    m(2, 0) = 1.0;
    CHECK(log_determinant(m).is_zero);
  }
}

TEST_CASE("determinant product and permutation properties") {
  corpus::Lcg rng;
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix a(6, 6), b(6, 6);
    for (auto& v : a.data) v = rng.next_cplx();
    for (auto& v : b.data) v = rng.next_cplx();
    const LogDet da = log_determinant(a);
    const LogDet db = log_determinant(b);
    const LogDet dab = log_determinant(matmul(a, b));
    CHECK(std::abs(da.log_modulus + db.log_modulus - dab.log_modulus) <
          1e-10 * std::abs(dab.log_modulus));
    const double phase_diff =
        std::remainder(da.phase + db.phase - dab.phase, 2 * std::numbers::pi);
    CHECK(std::abs(phase_diff) < 1e-10);

    // swapping two rows flips the phase by pi, same modulus
    ComplexMatrix swapped = a;
    for (std::size_t j = 0; j < 6; ++j) std::swap(swapped(1, j), swapped(4, j));
    const LogDet ds = log_determinant(swapped);
    CHECK(std::abs(ds.log_modulus - da.log_modulus) < 1e-11);
    CHECK(std::abs(std::abs(std::remainder(ds.phase - da.phase,
                                           2 * std::numbers::pi)) -
                   std::numbers::pi) < 1e-11);
  }
}

TEST_CASE("determinant_small") {
  CHECK(determinant_small(ComplexMatrix(0, 0)) == cplx(1, 0));
  ComplexMatrix one(1, 1);
  one(0, 0) = cplx(0.3, 0);
  CHECK(std::abs(determinant_small(one) - cplx(0.3, 0)) < 1e-15);
  ComplexMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 4;
  CHECK(std::abs(determinant_small(m) - cplx(-2, 0)) < 1e-14);
  CHECK_THROWS_WITH_AS(determinant_small(ComplexMatrix(65, 65)),
                       doctest::Contains("TooLarge"), error);
}

TEST_CASE("condition estimate") {
  ComplexMatrix eye(4, 4);
  for (std::size_t i = 0; i < 4; ++i) eye(i, i) = 1.0;
  const double c1 = condition_estimate(eye);
  CHECK(c1 >= 0.5);
  CHECK(c1 <= 2.0);

  ComplexMatrix d(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 1e-8;
  const double c2 = condition_estimate(d);
  CHECK(c2 >= 0.5e8);
  CHECK(c2 <= 2e8);

  ComplexMatrix z(1, 1);
  CHECK_THROWS_WITH_AS(condition_estimate(z), doctest::Contains("ExactlySingular"),
                       error);
}
