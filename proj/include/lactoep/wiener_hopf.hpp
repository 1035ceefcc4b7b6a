// wiener_hopf.hpp -- scalar Wiener-Hopf factor alpha of a symbol.
//
// alpha is the piecewise analytic function with interior exponent
// -sum_{n>=0} c_n[ln f] z^n and exterior exponent +sum_{n>=1} c_{-n}[ln f] z^{-n},
// so that alpha_- = f alpha_+ on the unit circle and alpha(inf) = 1.  Both
// branches continue through the annulus of the symbol, which is what every
// contour deformation in the asymptotics module relies on.

#ifndef LACTOEP_WIENER_HOPF_HPP
#define LACTOEP_WIENER_HOPF_HPP

#include <vector>

#include "lactoep/symbol.hpp"

namespace lactoep {

struct WienerHopfFactorization {
  std::vector<cplx> plus_coeffs;   // interior exponent: entry n is the z^n coefficient
  std::vector<cplx> minus_coeffs;  // exterior exponent: entry n is the z^{-(n+1)} coefficient
  double inner_radius = 0.0;
  double outer_radius = 0.0;
  double tol = 0.0;

  double safe_inner() const;
  double safe_outer() const;
};

WienerHopfFactorization factorize(const Symbol& symbol);

// Interior branch at |z| < r_plus (exp of the truncated interior exponent).
cplx alpha_interior(const WienerHopfFactorization& fact, cplx z);

// Exterior branch at |z| > r_minus, normalised to 1 at infinity.
cplx alpha_exterior(const WienerHopfFactorization& fact, cplx z);

// Max over the grid of |alpha_-(z) - f(z) alpha_+(z)| / |alpha_-(z)| on |z|=1.
double verify_jump(const WienerHopfFactorization& fact, const Symbol& symbol,
                   std::size_t grid_size);

// Swap interior and exterior data: the factorization of z -> f(1/z).
WienerHopfFactorization invert_circle(const WienerHopfFactorization& fact);

}  // namespace lactoep

#endif
