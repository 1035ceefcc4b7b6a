// matrix.hpp -- dense complex matrices, overflow-safe log-determinants, and
// the lacunary Toeplitz builder used by the exact oracle.

#ifndef LACTOEP_MATRIX_HPP
#define LACTOEP_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "lactoep/coefficients.hpp"

namespace lactoep {

struct ComplexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> data;  // row-major

  ComplexMatrix() = default;
  // Zero-initialised; throws bad_input on a later set of a non-finite entry.
  ComplexMatrix(std::size_t r, std::size_t c);

  cplx& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }
  bool square() const { return rows == cols; }

  void check_finite() const;  // throws bad_input on NaN/Inf entries
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// det = exp(log_modulus + i phase) unless is_zero.
struct LogDet {
  double log_modulus = 0.0;
  double phase = 0.0;  // in (-pi, pi]
  bool is_zero = false;
};

// Entry (a,b) = c_{ell[a]-m[b]}.  Indices outside the table count as zero only
// when the table certifies its tail; otherwise coefficient_range_too_small.
ComplexMatrix build_lacunary_toeplitz(const CoefficientTable& coeffs,
                                      std::size_t n,
                                      const std::vector<std::int64_t>& ell,
                                      const std::vector<std::int64_t>& m);

// LU with partial pivoting; log-modulus and phase accumulated pivot by pivot,
// is_zero when any pivot modulus falls below 1e-300.
LogDet log_determinant(const ComplexMatrix& matrix);

// Plain determinant for small correction matrices (rows <= 64); det of the
// 0x0 matrix is 1.
cplx determinant_small(const ComplexMatrix& matrix);

// 1-norm condition estimate from the LU factors (Hager-style inverse-norm
// estimate via a few triangular solves).  Throws exactly_singular on a zero
// pivot.
double condition_estimate(const ComplexMatrix& matrix);

}  // namespace lactoep

#endif
