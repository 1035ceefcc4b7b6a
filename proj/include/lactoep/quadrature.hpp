// quadrature.hpp -- trapezoidal contour quadrature on circles.
//
// Integrands here are analytic near the contours, so the equispaced
// trapezoidal rule converges spectrally; node counts are doubled until the
// relative change drops below the configured tolerance.

#ifndef LACTOEP_QUADRATURE_HPP
#define LACTOEP_QUADRATURE_HPP

#include <functional>

#include "lactoep/coefficients.hpp"

namespace lactoep {

struct QuadratureConfig {
  double eta_z = 0.0;  // 0 means: derive from the annulus at the use site
  double eta_s = 0.0;
  std::size_t nodes = 64;  // starting nodes per circle (power of two)
  double tol = 1e-12;
  std::size_t max_doublings = 8;
};

struct QuadratureResult {
  cplx value{0.0, 0.0};
  bool converged = true;
  double last_change = 0.0;  // final relative change between doublings
  std::size_t nodes = 0;     // nodes per circle in the final pass
};

// (1/2 i pi) \oint_{|z|=radius} g(z) dz.  Non-convergence after max_doublings
// is reported in the result, not thrown.
QuadratureResult circle_quadrature(const std::function<cplx(cplx)>& integrand,
                                   double radius, const QuadratureConfig& config);

// (1/2 i pi)^2 \oint_{|z|=radius_z} dz \oint_{|s|=radius_s} ds g(z, s),
// tensor-product trapezoid with the two node counts doubled together.
// Throws equal_radii when the circles coincide.
QuadratureResult double_circle_quadrature(
    const std::function<cplx(cplx, cplx)>& integrand, double radius_z,
    double radius_s, const QuadratureConfig& config);

// Specialised core for integrands A(z) B(s) s^m z^q / (z - s).  The monomial
// moduli are factored out of the tensor sum and restored in log form, so
// exponents of order N never overflow and never drown the sum in roundoff.
QuadratureResult separated_double_integral(
    const std::function<cplx(cplx)>& a_of_z,
    const std::function<cplx(cplx)>& b_of_s, std::int64_t q_z, std::int64_t m_s,
    double radius_z, double radius_s, const QuadratureConfig& config);

}  // namespace lactoep

#endif
