#include "lactoep/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "lactoep/errors.hpp"

namespace lactoep {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t starting_nodes(const QuadratureConfig& config) {
  std::size_t n = 4;
  while (n < std::max<std::size_t>(4, config.nodes)) n <<= 1;
  return n;
}

struct Pass {
  cplx value{0.0, 0.0};
  double l1 = 0.0;  // mean |term|: sets the roundoff floor of the sum
};

// Converged when the change is below tolerance relative to the value, or has
// reached the roundoff floor of the tensor sum (the case of integrals whose
// true value is zero or far below the integrand magnitude).
bool step_converged(const Pass& prev, const Pass& next, double tol,
                    double& rel_change) {
  const double scale = std::max(std::abs(prev.value), std::abs(next.value));
  const double change = std::abs(next.value - prev.value);
  rel_change = scale > 0.0 ? change / scale : 0.0;
  const double floor = 64.0 * 2.2e-16 * std::max(prev.l1, next.l1);
  return change <= tol * scale || change <= floor;
}

}  // namespace

QuadratureResult circle_quadrature(const std::function<cplx(cplx)>& integrand,
                                   double radius,
                                   const QuadratureConfig& config) {
  if (!(radius > 0.0)) throw error(errc::bad_input, "radius must be positive");

  auto pass = [&](std::size_t n) {
    Pass out;
    cplx sum(0.0, 0.0);
    double mass = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double th = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
      const cplx z = radius * cplx(std::cos(th), std::sin(th));
      const cplx term = integrand(z) * z;
      sum += term;
      mass += std::abs(term.real()) + std::abs(term.imag());
    }
    out.value = sum / static_cast<double>(n);
    out.l1 = mass / static_cast<double>(n);
    return out;
  };

  QuadratureResult res;
  std::size_t n = starting_nodes(config);
  Pass prev = pass(n);
  res.converged = false;
  for (std::size_t d = 0; d < config.max_doublings; ++d) {
    n *= 2;
    const Pass next = pass(n);
    const bool ok = step_converged(prev, next, config.tol, res.last_change);
    prev = next;
    if (ok) {
      res.converged = true;
      break;
    }
  }
  res.value = prev.value;
  res.nodes = n;
  return res;
}

QuadratureResult double_circle_quadrature(
    const std::function<cplx(cplx, cplx)>& integrand, double radius_z,
    double radius_s, const QuadratureConfig& config) {
  if (radius_z == radius_s)
    throw error(errc::equal_radii, "z and s contours must sit on distinct circles");
  if (!(radius_z > 0.0) || !(radius_s > 0.0))
    throw error(errc::bad_input, "radii must be positive");

  auto pass = [&](std::size_t n) {
    Pass out;
    cplx sum(0.0, 0.0);
    double mass = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double th = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
      const cplx z = radius_z * cplx(std::cos(th), std::sin(th));
      for (std::size_t k = 0; k < n; ++k) {
        const double ph = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        const cplx s = radius_s * cplx(std::cos(ph), std::sin(ph));
        const cplx term = integrand(z, s) * z * s;
        sum += term;
        mass += std::abs(term.real()) + std::abs(term.imag());
      }
    }
    out.value = sum / static_cast<double>(n * n);
    out.l1 = mass / static_cast<double>(n * n);
    return out;
  };

  QuadratureResult res;
  std::size_t n = starting_nodes(config);
  Pass prev = pass(n);
  res.converged = false;
  for (std::size_t d = 0; d < config.max_doublings; ++d) {
    n *= 2;
    const Pass next = pass(n);
    const bool ok = step_converged(prev, next, config.tol, res.last_change);
    prev = next;
    if (ok) {
      res.converged = true;
      break;
    }
  }
  res.value = prev.value;
  res.nodes = n;
  return res;
}

QuadratureResult separated_double_integral(
    const std::function<cplx(cplx)>& a_of_z,
    const std::function<cplx(cplx)>& b_of_s, std::int64_t q_z, std::int64_t m_s,
    double radius_z, double radius_s, const QuadratureConfig& config) {
  if (radius_z == radius_s)
    throw error(errc::equal_radii, "z and s contours must sit on distinct circles");

  // |s^m z^q| is constant on the circles; keep only unit-modulus phases in the
  // tensor sum and restore the modulus afterwards.
  const double log_scale = static_cast<double>(m_s) * std::log(radius_s) +
                           static_cast<double>(q_z) * std::log(radius_z);

  auto pass = [&](std::size_t n) {
    std::vector<cplx> pz(n), qs(n), zs(n), ss(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double th = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
      const cplx z = radius_z * cplx(std::cos(th), std::sin(th));
      const cplx s = radius_s * cplx(std::cos(th), std::sin(th));
      zs[j] = z;
      ss[j] = s;
      pz[j] = a_of_z(z) * std::polar(1.0, static_cast<double>(q_z) * th) * z;
      qs[j] = b_of_s(s) * std::polar(1.0, static_cast<double>(m_s) * th) * s;
    }
    Pass out;
    cplx sum(0.0, 0.0);
    double mass = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const cplx term = pz[j] * qs[k] / (zs[j] - ss[k]);
        sum += term;
        mass += std::abs(term.real()) + std::abs(term.imag());
      }
    out.value = sum / static_cast<double>(n * n);
    out.l1 = mass / static_cast<double>(n * n);
    return out;
  };

  QuadratureResult res;
  std::size_t n = starting_nodes(config);
  Pass prev = pass(n);
  res.converged = false;
  for (std::size_t d = 0; d < config.max_doublings; ++d) {
    n *= 2;
    const Pass next = pass(n);
    const bool ok = step_converged(prev, next, config.tol, res.last_change);
    prev = next;
    if (ok) {
      res.converged = true;
      break;
    }
  }
  res.nodes = n;
  res.value =
      log_scale < -745.0 ? cplx(0.0, 0.0) : prev.value * std::exp(log_scale);
  return res;
}

}  // namespace lactoep
