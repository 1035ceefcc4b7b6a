// symbol.hpp -- symbols f on the unit circle, stored through ln f.
//
// A Symbol is canonically the coefficient table of ln f, so every Symbol is
// automatically non-vanishing with winding number zero, and f itself is
// recovered as exp of the stored series.  The annulus of holomorphy of ln f
// is estimated from the geometric decay of the coefficients.

#ifndef LACTOEP_SYMBOL_HPP
#define LACTOEP_SYMBOL_HPP

#include <cstdint>
#include <vector>

#include "lactoep/coefficients.hpp"

namespace lactoep {

struct Symbol {
  CoefficientTable log_coeffs;   // c_n[ln f], n in [-K_minus, K_plus]
  std::int64_t truncation = 0;   // K: max |index| retained
  double inner_radius = 0.0;     // r_minus, 0 when the exterior tail is entire
  double outer_radius = 0.0;     // r_plus, +inf when the interior tail is entire
  double tol = 0.0;              // construction tolerance

  // Annulus shrunk 10% toward the unit circle; contour deformations stay here.
  double safe_inner() const;
  double safe_outer() const;

  // ln f and f at a point of the annulus (truncated series).
  cplx log_value(cplx z) const;
  cplx value(cplx z) const { return std::exp(log_value(z)); }
};

// Build from a table of c_n[ln f].  Fails with no_decay when the tail does not
// decay geometrically (ln f not holomorphic on any annulus around |z|=1).
Symbol build_symbol_from_log_coeffs(const CoefficientTable& coeffs, double tol);

// Build from samples of f on a uniform circle grid (power of two, >= 8).
// Checks non-vanishing and zero winding, takes the branch-tracked logarithm,
// and delegates to build_symbol_from_log_coeffs.
Symbol build_symbol_from_samples(const std::vector<cplx>& f_values, double tol);

// c_n[f] for n in [n_min, n_max], by adaptive FFT of exp(stored series);
// the grid is doubled until successive tables agree to the symbol tolerance.
CoefficientTable fourier_coefficients(const Symbol& symbol, std::int64_t n_min,
                                      std::int64_t n_max);

// Total argument increment / 2pi over the sampled circle, rounded.
int winding_number(const std::vector<cplx>& f_values);

}  // namespace lactoep

#endif
