#include "lactoep/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lactoep/errors.hpp"

namespace lactoep {

namespace {

constexpr double kZeroPivot = 1e-300;

struct LuFactors {
  ComplexMatrix lu;              // L below the diagonal (unit), U on and above
  std::vector<std::size_t> ipiv; // row swapped with k at step k
  std::size_t swaps = 0;
  bool zero_pivot = false;
  std::size_t zero_at = 0;
};

LuFactors lu_factor(const ComplexMatrix& a) {
  LuFactors f;
  f.lu = a;
  const std::size_t n = a.rows;
  f.ipiv.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(f.lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = std::abs(f.lu(i, k));
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    f.ipiv[k] = piv;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
      ++f.swaps;
    }
    if (best < kZeroPivot) {
      f.zero_pivot = true;
      f.zero_at = k;
      return f;
    }
    const cplx inv = 1.0 / f.lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx l = f.lu(i, k) * inv;
      f.lu(i, k) = l;
      for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= l * f.lu(k, j);
    }
  }
  return f;
}

// Solve A x = b in place using PA = LU.
void lu_solve(const LuFactors& f, std::vector<cplx>& b) {
  const std::size_t n = f.lu.rows;
  for (std::size_t k = 0; k < n; ++k)
    if (f.ipiv[k] != k) std::swap(b[k], b[f.ipiv[k]]);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) b[i] -= f.lu(i, j) * b[j];
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) b[i] -= f.lu(i, j) * b[j];
    b[i] /= f.lu(i, i);
  }
}

// Solve A^H x = b using A = P^T L U: forward with U^H, back with L^H, unpermute.
void lu_solve_adjoint(const LuFactors& f, std::vector<cplx>& b) {
  const std::size_t n = f.lu.rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) b[i] -= std::conj(f.lu(j, i)) * b[j];
    b[i] /= std::conj(f.lu(i, i));
  }
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j < n; ++j) b[i] -= std::conj(f.lu(j, i)) * b[j];
  for (std::size_t k = n; k-- > 0;)
    if (f.ipiv[k] != k) std::swap(b[k], b[f.ipiv[k]]);
}

double wrap_phase(double phi) {
  phi = std::remainder(phi, 2.0 * std::numbers::pi);
  if (phi <= -std::numbers::pi) phi += 2.0 * std::numbers::pi;
  return phi;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t r, std::size_t c)
    : rows(r), cols(c), data(r * c, cplx(0.0, 0.0)) {}

void ComplexMatrix::check_finite() const {
  for (const cplx& v : data)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw error(errc::bad_input, "non-finite matrix entry");
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols != b.rows) throw error(errc::bad_input, "shape mismatch");
  ComplexMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const cplx aik = a(i, k);
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix build_lacunary_toeplitz(const CoefficientTable& coeffs,
                                      std::size_t n,
                                      const std::vector<std::int64_t>& ell,
                                      const std::vector<std::int64_t>& m) {
  if (ell.size() != n || m.size() != n)
    throw error(errc::bad_input, "index sequences must have length N");
  ComplexMatrix out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::int64_t idx = ell[a] - m[b];
      if (!coeffs.contains(idx) && !coeffs.tail_certified)
        throw error(errc::coefficient_range_too_small,
                    "coefficient index " + std::to_string(idx) +
                        " outside the table and the tail is not certified");
      out(a, b) = coeffs.get(idx);
    }
  out.check_finite();
  return out;
}

LogDet log_determinant(const ComplexMatrix& matrix) {
  if (!matrix.square()) throw error(errc::non_square, "log_determinant");
  LogDet d;
  if (matrix.rows == 0) return d;  // det of the empty matrix is 1
  LuFactors f = lu_factor(matrix);
  if (f.zero_pivot) {
    d.is_zero = true;
    return d;
  }
  double phase = f.swaps % 2 == 1 ? std::numbers::pi : 0.0;
  for (std::size_t k = 0; k < matrix.rows; ++k) {
    const cplx p = f.lu(k, k);
    d.log_modulus += std::log(std::abs(p));
    phase = wrap_phase(phase + std::arg(p));
  }
  d.phase = wrap_phase(phase);
  return d;
}

cplx determinant_small(const ComplexMatrix& matrix) {
  if (!matrix.square()) throw error(errc::non_square, "determinant_small");
  if (matrix.rows > 64) throw error(errc::too_large, "rows > 64");
  if (matrix.rows == 0) return cplx(1.0, 0.0);
  LuFactors f = lu_factor(matrix);
  if (f.zero_pivot) return cplx(0.0, 0.0);
  cplx det = f.swaps % 2 == 1 ? cplx(-1.0, 0.0) : cplx(1.0, 0.0);
  for (std::size_t k = 0; k < matrix.rows; ++k) det *= f.lu(k, k);
  return det;
}

double condition_estimate(const ComplexMatrix& matrix) {
  if (!matrix.square()) throw error(errc::non_square, "condition_estimate");
  const std::size_t n = matrix.rows;
  if (n == 0) return 1.0;

  LuFactors f = lu_factor(matrix);
  if (f.zero_pivot) throw error(errc::exactly_singular, "zero pivot in LU");

  double norm_a = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) col += std::abs(matrix(i, j));
    norm_a = std::max(norm_a, col);
  }

  // Hager's 1-norm estimator for ||A^{-1}||_1.
  std::vector<cplx> x(n, cplx(1.0 / static_cast<double>(n), 0.0));
  double est = 0.0;
  for (int iter = 0; iter < 5; ++iter) {
    std::vector<cplx> y = x;
    lu_solve(f, y);
    double norm_y = 0.0;
    for (const cplx& v : y) norm_y += std::abs(v);
    est = std::max(est, norm_y);

    std::vector<cplx> xi(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(y[i]);
      xi[i] = m > 0.0 ? y[i] / m : cplx(1.0, 0.0);
    }
    lu_solve_adjoint(f, xi);
    std::size_t jmax = 0;
    double zmax = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(xi[i]) > zmax) {
        zmax = std::abs(xi[i]);
        jmax = i;
      }
    cplx zx(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) zx += std::conj(xi[i]) * x[i];
    if (iter > 0 && zmax <= std::abs(zx) + 1e-15) break;
    std::fill(x.begin(), x.end(), cplx(0.0, 0.0));
    x[jmax] = cplx(1.0, 0.0);
  }
  return norm_a * est;
}

}  // namespace lactoep
