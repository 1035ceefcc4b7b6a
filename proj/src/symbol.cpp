#include "lactoep/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lactoep/errors.hpp"
#include "lactoep/fft.hpp"

namespace lactoep {

namespace {

constexpr std::int64_t kTruncationCap = 4096;
constexpr double kEntireOuterCap = 4.0;  // working outer radius for entire tails

// Least-squares slope of log|c| against the index, over the last half of the
// retained range.  Returns false when there are too few usable points, which
// we read as a super-geometric (entire) tail.
bool decay_slope(const std::vector<std::pair<std::int64_t, double>>& pts,
                 double& slope) {
  if (pts.size() < 2) return false;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto& [n, logc] : pts) {
    const double x = static_cast<double>(n);
    sx += x;
    sy += logc;
    sxx += x * x;
    sxy += x * logc;
  }
  const double m = static_cast<double>(pts.size());
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) return false;
  slope = (m * sxy - sx * sy) / denom;
  return true;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

double Symbol::safe_inner() const { return 0.1 + 0.9 * inner_radius; }

double Symbol::safe_outer() const {
  if (!std::isfinite(outer_radius)) return kEntireOuterCap;
  return std::min(kEntireOuterCap, 1.0 + 0.9 * (outer_radius - 1.0));
}

cplx Symbol::log_value(cplx z) const {
  // Horner on the nonnegative powers, then on the negative powers in 1/z.
  const std::int64_t lo = log_coeffs.n_min();
  const std::int64_t hi = log_coeffs.n_max();
  cplx plus(0.0, 0.0);
  for (std::int64_t n = hi; n >= std::max<std::int64_t>(0, lo); --n)
    plus = plus * z + log_coeffs.get(n);
  cplx minus(0.0, 0.0);
  if (lo < 0) {
    const cplx w = 1.0 / z;
    for (std::int64_t n = lo; n <= -1; ++n) minus = minus * w + log_coeffs.get(n);
    minus *= w;
  }
  return plus + minus;
}

Symbol build_symbol_from_log_coeffs(const CoefficientTable& coeffs, double tol) {
  if (coeffs.values.empty())
    throw error(errc::empty_coefficients, "log-coefficient table is empty");
  if (!(tol > 0.0)) throw error(errc::bad_input, "tol must be positive");
  for (const cplx& c : coeffs.values)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw error(errc::bad_input, "non-finite log coefficient");

  // Adaptive truncation: keep the smallest symmetric-ish range whose dropped
  // tail is below tol, always retaining c_0.
  std::int64_t k_plus = 0, k_minus = 0;
  for (std::int64_t n = 1; n <= coeffs.n_max(); ++n)
    if (std::abs(coeffs.get(n)) > tol) k_plus = n;
  for (std::int64_t n = -1; n >= coeffs.n_min(); --n)
    if (std::abs(coeffs.get(n)) > tol) k_minus = -n;
  if (k_plus > kTruncationCap || k_minus > kTruncationCap)
    throw error(errc::no_decay, "log coefficients above tol past the truncation cap");

  Symbol sym;
  sym.tol = tol;
  sym.truncation = std::max(k_plus, k_minus);
  sym.log_coeffs.offset = -k_minus;
  sym.log_coeffs.values.assign(static_cast<std::size_t>(k_plus + k_minus + 1),
                               cplx(0.0, 0.0));
  for (std::int64_t n = -k_minus; n <= k_plus; ++n)
    sym.log_coeffs.at(n) = coeffs.get(n);
  sym.log_coeffs.tail_certified = true;
  sym.log_coeffs.tail_bound = tol;

  // Annulus from the decay of the retained tail (fit over its outer half).
  auto side_points = [&](int dir) {
    std::vector<std::pair<std::int64_t, double>> pts;
    const std::int64_t k = dir > 0 ? k_plus : k_minus;
    for (std::int64_t n = std::max<std::int64_t>(1, (k + 1) / 2); n <= k; ++n) {
      const double a = std::abs(sym.log_coeffs.get(dir > 0 ? n : -n));
      if (a > 0.0) pts.emplace_back(n, std::log(a));
    }
    return pts;
  };

  double slope = 0.0;
  if (decay_slope(side_points(+1), slope)) {
    if (slope >= -1e-3)
      throw error(errc::no_decay, "interior log coefficients do not decay");
    sym.outer_radius = std::exp(-slope);
  } else {
    sym.outer_radius = std::numeric_limits<double>::infinity();
  }
  if (decay_slope(side_points(-1), slope)) {
    if (slope >= -1e-3)
      throw error(errc::no_decay, "exterior log coefficients do not decay");
    sym.inner_radius = std::exp(slope);
  } else {
    sym.inner_radius = 0.0;
  }
  return sym;
}

int winding_number(const std::vector<cplx>& f_values) {
  if (f_values.size() < 2)
    throw error(errc::bad_input, "need at least two samples");
  double total = 0.0;
  double max_step = 0.0;
  const std::size_t n = f_values.size();
  for (std::size_t j = 0; j < n; ++j) {
    const cplx a = f_values[j];
    const cplx b = f_values[(j + 1) % n];
    if (std::abs(a) < 1e-300 || std::abs(b) < 1e-300)
      throw error(errc::vanishing_symbol, "sample modulus below tolerance");
    const double step = std::arg(b / a);
    max_step = std::max(max_step, std::abs(step));
    total += step;
  }
  if (max_step >= 0.99 * std::numbers::pi)
    throw error(errc::bad_input,
                "argument step near pi: sampling too coarse to track the branch");
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

Symbol build_symbol_from_samples(const std::vector<cplx>& f_values, double tol) {
  const std::size_t n = f_values.size();
  if (n < 8 || !is_power_of_two(n))
    throw error(errc::bad_input, "grid size must be a power of two >= 8");
  if (!(tol > 0.0)) throw error(errc::bad_input, "tol must be positive");
  for (const cplx& v : f_values)
    if (std::abs(v) <= tol)
      throw error(errc::vanishing_symbol, "sample modulus below tolerance");

  const int wind = winding_number(f_values);
  if (wind != 0)
    throw error(errc::nonzero_winding,
                "winding number " + std::to_string(wind) + " (must be 0)");

  // Branch-tracked logarithm: unwrap the phase cumulatively around the grid.
  std::vector<cplx> logs(n);
  double phase = std::arg(f_values[0]);
  logs[0] = cplx(std::log(std::abs(f_values[0])), phase);
  for (std::size_t j = 1; j < n; ++j) {
    phase += std::arg(f_values[j] / f_values[j - 1]);
    logs[j] = cplx(std::log(std::abs(f_values[j])), phase);
  }

  CoefficientTable log_table = circle_samples_to_coefficients(logs);
  return build_symbol_from_log_coeffs(log_table, tol);
}

CoefficientTable fourier_coefficients(const Symbol& symbol, std::int64_t n_min,
                                      std::int64_t n_max) {
  if (n_min > n_max) throw error(errc::bad_input, "n_min > n_max");

  const std::int64_t reach =
      std::max({std::abs(n_min), std::abs(n_max), symbol.truncation}) + 1;
  std::size_t grid = next_pow2(std::max<std::size_t>(
      64, 2 * static_cast<std::size_t>(reach)));

  double max_sample = 0.0;
  auto compute = [&](std::size_t g) {
    std::vector<cplx> samples(g);
    for (std::size_t j = 0; j < g; ++j) {
      const double th = 2.0 * std::numbers::pi * static_cast<double>(j) /
                        static_cast<double>(g);
      samples[j] = symbol.value(cplx(std::cos(th), std::sin(th)));
      max_sample = std::max(max_sample, std::abs(samples[j]));
    }
    return circle_samples_to_coefficients(samples);
  };

  CoefficientTable prev = compute(grid);
  for (int pass = 0; pass < 10; ++pass) {
    grid *= 2;
    CoefficientTable next = compute(grid);
    double change = 0.0;
    for (std::int64_t m = n_min; m <= n_max; ++m)
      change = std::max(change, std::abs(next.get(m) - prev.get(m)));
    prev = std::move(next);
    if (change < symbol.tol) break;
  }

  CoefficientTable out;
  out.offset = n_min;
  out.values.resize(static_cast<std::size_t>(n_max - n_min + 1));
  // Entries below the quadrature resolution are exact zeros (banded symbols
  // must give exactly singular lacunary matrices, not noise-sized pivots).
  const double noise_floor = 4.0 * 2.2e-16 * max_sample;
  for (std::int64_t m = n_min; m <= n_max; ++m) {
    const cplx v = prev.get(m);
    out.at(m) = std::abs(v) < noise_floor ? cplx(0.0, 0.0) : v;
  }

  // A geometric tail certified by small outermost entries.
  double edge = 0.0;
  for (std::int64_t m = n_max; m > n_max - 2 && m >= n_min; --m)
    edge = std::max(edge, std::abs(out.get(m)));
  for (std::int64_t m = n_min; m < n_min + 2 && m <= n_max; ++m)
    edge = std::max(edge, std::abs(out.get(m)));
  out.tail_bound = edge;
  out.tail_certified = edge < symbol.tol;
  return out;
}

}  // namespace lactoep
