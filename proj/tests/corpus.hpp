// corpus.hpp -- shared test symbols and independent mini-oracles.

#ifndef LACTOEP_TESTS_CORPUS_HPP
#define LACTOEP_TESTS_CORPUS_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "lactoep/lacunary.hpp"
#include "lactoep/matrix.hpp"
#include "lactoep/symbol.hpp"

namespace corpus {

using lactoep::cplx;

// f == 1: the identity symbol.
inline lactoep::Symbol identity_symbol() {
  lactoep::CoefficientTable t;
  t.offset = 0;
  t.values = {cplx(0.0, 0.0)};
  return lactoep::build_symbol_from_log_coeffs(t, 1e-14);
}

// f(z) = (1 + a z)(1 + b/z): ln f has c_n = -(-a)^n/n, c_{-n} = -(-b)^n/n.
inline lactoep::Symbol product_symbol(double a, double b, int terms = 48,
                                      double tol = 1e-14) {
  lactoep::CoefficientTable t;
  t.offset = -terms;
  t.values.assign(2 * terms + 1, cplx(0.0, 0.0));
  double pa = 1.0, pb = 1.0;
  for (int n = 1; n <= terms; ++n) {
    pa *= -a;
    pb *= -b;
    t.at(n) = cplx(-pa / n, 0.0);
    t.at(-n) = cplx(-pb / n, 0.0);
  }
  return lactoep::build_symbol_from_log_coeffs(t, tol);
}

inline lactoep::Symbol tridiagonal_symbol() { return product_symbol(0.4, 0.3); }

// f(z) = exp(0.25 (z + 1/z)): entire log-symbol, real on the circle.
inline lactoep::Symbol exp_symbol() {
  lactoep::CoefficientTable t;
  t.offset = -1;
  t.values = {cplx(0.25, 0.0), cplx(0.0, 0.0), cplx(0.25, 0.0)};
  return lactoep::build_symbol_from_log_coeffs(t, 1e-14);
}

// A symbol with genuinely complex coefficients (no symmetry to hide behind).
inline lactoep::Symbol complex_symbol() {
  lactoep::CoefficientTable t;
  t.offset = -40;
  t.values.assign(81, cplx(0.0, 0.0));
  cplx p1(1.0, 0.0), q1(1.0, 0.0);
  const cplx a1(0.2, 0.1), am1(-0.15, 0.05);
  for (int n = 1; n <= 40; ++n) {
    p1 *= a1;
    q1 *= am1;
    t.at(n) = -p1 / static_cast<double>(n);
    t.at(-n) = -q1 / static_cast<double>(n);
  }
  return lactoep::build_symbol_from_log_coeffs(t, 1e-13);
}

// Brute-force coefficient of z^n in exp(x z) exp(x / z): the double series
// sum_{j-k=n} x^{j+k} / (j! k!).  Independent of the FFT path.
inline double exp_symbol_coefficient(int n, double x = 0.25) {
  double sum = 0.0;
  const int nn = std::abs(n);
  double term = std::pow(x, nn);
  for (int k = 0; k <= nn; ++k) term /= (k == 0 ? 1.0 : k);
  // term = x^nn / nn!; add k = 0,1,2,... with j = nn + k
  double fact_k = 1.0, fact_j = 1.0;
  for (int k = 1; k <= nn; ++k) fact_j *= k;
  double xpow = std::pow(x, nn);
  for (int k = 0; k <= 40; ++k) {
    sum += xpow / (fact_k * fact_j);
    fact_k *= (k + 1);
    fact_j *= (nn + k + 1);
    xpow *= x * x;
  }
  return sum;
}

// Cofactor-expansion determinant, usable as an independent oracle for n <= 6.
inline cplx cofactor_det(const lactoep::ComplexMatrix& m) {
  const std::size_t n = m.rows;
  if (n == 0) return cplx(1.0, 0.0);
  if (n == 1) return m(0, 0);
  cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    lactoep::ComplexMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    acc += sign * m(0, j) * cofactor_det(minor);
  }
  return acc;
}

// Deterministic pseudo-random doubles in [-1, 1].
struct Lcg {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  double next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return 2.0 * (static_cast<double>(state >> 11) /
                  static_cast<double>(1ull << 53)) - 1.0;
  }
  cplx next_cplx() {
    const double re = next();
    return cplx(re, next());
  }
};

// Closed-form plain determinant of the (1+az)(1+b/z) Toeplitz matrix:
// D_N = (1 - (ab)^{N+1}) / (1 - ab).
inline double product_plain_det(double a, double b, int n) {
  const double q = a * b;
  return (1.0 - std::pow(q, n + 1)) / (1.0 - q);
}

}  // namespace corpus

#endif
