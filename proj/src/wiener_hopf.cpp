#include "lactoep/wiener_hopf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lactoep/errors.hpp"

namespace lactoep {

namespace {
constexpr double kEntireOuterCap = 4.0;

cplx horner_up(const std::vector<cplx>& c, cplx z) {
  cplx acc(0.0, 0.0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}
}  // namespace

double WienerHopfFactorization::safe_inner() const { return 0.1 + 0.9 * inner_radius; }

double WienerHopfFactorization::safe_outer() const {
  if (!std::isfinite(outer_radius)) return kEntireOuterCap;
  return std::min(kEntireOuterCap, 1.0 + 0.9 * (outer_radius - 1.0));
}

WienerHopfFactorization factorize(const Symbol& symbol) {
  WienerHopfFactorization f;
  f.inner_radius = symbol.inner_radius;
  f.outer_radius = symbol.outer_radius;
  f.tol = symbol.tol;
  const std::int64_t hi = symbol.log_coeffs.n_max();
  const std::int64_t lo = symbol.log_coeffs.n_min();
  f.plus_coeffs.resize(static_cast<std::size_t>(std::max<std::int64_t>(hi, 0)) + 1,
                       cplx(0.0, 0.0));
  for (std::int64_t n = 0; n <= hi; ++n)
    f.plus_coeffs[static_cast<std::size_t>(n)] = -symbol.log_coeffs.get(n);
  if (lo < 0) {
    f.minus_coeffs.resize(static_cast<std::size_t>(-lo), cplx(0.0, 0.0));
    for (std::int64_t n = 1; n <= -lo; ++n)
      f.minus_coeffs[static_cast<std::size_t>(n - 1)] = symbol.log_coeffs.get(-n);
  }
  return f;
}

cplx alpha_interior(const WienerHopfFactorization& fact, cplx z) {
  if (std::abs(z) >= fact.outer_radius)
    throw error(errc::outside_domain, "|z| outside the interior branch domain");
  return std::exp(horner_up(fact.plus_coeffs, z));
}

cplx alpha_exterior(const WienerHopfFactorization& fact, cplx z) {
  if (std::abs(z) <= fact.inner_radius)
    throw error(errc::outside_domain, "|z| outside the exterior branch domain");
  if (fact.minus_coeffs.empty()) return cplx(1.0, 0.0);
  const cplx w = 1.0 / z;
  return std::exp(horner_up(fact.minus_coeffs, w) * w);
}

double verify_jump(const WienerHopfFactorization& fact, const Symbol& symbol,
                   std::size_t grid_size) {
  if (grid_size < 8) throw error(errc::bad_input, "grid_size must be >= 8");
  double worst = 0.0;
  for (std::size_t j = 0; j < grid_size; ++j) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(j) /
                      static_cast<double>(grid_size);
    const cplx z(std::cos(th), std::sin(th));
    const cplx minus = alpha_exterior(fact, z);
    const cplx plus = alpha_interior(fact, z);
    worst = std::max(worst,
                     std::abs(minus - symbol.value(z) * plus) / std::abs(minus));
  }
  return worst;
}

WienerHopfFactorization invert_circle(const WienerHopfFactorization& fact) {
  WienerHopfFactorization g;
  g.tol = fact.tol;
  g.inner_radius =
      std::isfinite(fact.outer_radius) ? 1.0 / fact.outer_radius : 0.0;
  g.outer_radius = fact.inner_radius > 0.0
                       ? 1.0 / fact.inner_radius
                       : std::numeric_limits<double>::infinity();
  // Interior exponent of f(1/z) is -c_0 - sum_{n>=1} c_{-n} z^n.
  g.plus_coeffs.resize(fact.minus_coeffs.size() + 1, cplx(0.0, 0.0));
  g.plus_coeffs[0] = fact.plus_coeffs.empty() ? cplx(0.0, 0.0) : fact.plus_coeffs[0];
  for (std::size_t n = 0; n < fact.minus_coeffs.size(); ++n)
    g.plus_coeffs[n + 1] = -fact.minus_coeffs[n];
  // Exterior exponent of f(1/z) is sum_{n>=1} c_n z^{-n}.
  if (fact.plus_coeffs.size() > 1) {
    g.minus_coeffs.resize(fact.plus_coeffs.size() - 1);
    for (std::size_t n = 1; n < fact.plus_coeffs.size(); ++n)
      g.minus_coeffs[n - 1] = -fact.plus_coeffs[n];
  }
  return g;
}

}  // namespace lactoep
