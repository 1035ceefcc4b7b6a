#include "lactoep/fft.hpp"

#include <cmath>
#include <numbers>

#include "lactoep/errors.hpp"

namespace lactoep {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_forward(std::vector<cplx>& x) {
  const std::size_t n = x.size();
  if (!is_power_of_two(n))
    throw error(errc::bad_input, "FFT length must be a power of two");

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const cplx wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx u = x[i + k];
        cplx v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

CoefficientTable circle_samples_to_coefficients(const std::vector<cplx>& samples) {
  const std::size_t n = samples.size();
  std::vector<cplx> work = samples;
  fft_forward(work);

  // X_k/n is the coefficient c_k for k < n/2 and c_{k-n} for k >= n/2.
  CoefficientTable table;
  const std::int64_t half = static_cast<std::int64_t>(n) / 2;
  table.offset = -half;
  table.values.resize(n);
  const double inv = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::int64_t m = static_cast<std::int64_t>(k);
    if (m >= half) m -= static_cast<std::int64_t>(n);
    table.at(m) = work[k] * inv;
  }
  return table;
}

}  // namespace lactoep
