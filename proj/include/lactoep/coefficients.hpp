// coefficients.hpp -- contiguous table of Laurent/Fourier coefficients.

#ifndef LACTOEP_COEFFICIENTS_HPP
#define LACTOEP_COEFFICIENTS_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace lactoep {

using cplx = std::complex<double>;

// Coefficients c_{n_min}..c_{n_min+values.size()-1}; entry j holds c_{offset+j}.
// `tail_certified` means indices outside the stored range are guaranteed to be
// below `tail_bound` in modulus, so callers may treat them as zero.
struct CoefficientTable {
  std::int64_t offset = 0;
  std::vector<cplx> values;
  bool tail_certified = false;
  double tail_bound = 0.0;

  std::int64_t n_min() const { return offset; }
  std::int64_t n_max() const {
    return offset + static_cast<std::int64_t>(values.size()) - 1;
  }
  bool contains(std::int64_t n) const { return n >= n_min() && n <= n_max(); }

  // Coefficient lookup; indices outside the table read as zero.
  cplx get(std::int64_t n) const {
    return contains(n) ? values[static_cast<std::size_t>(n - offset)]
                       : cplx(0.0, 0.0);
  }
  cplx& at(std::int64_t n) { return values[static_cast<std::size_t>(n - offset)]; }
};

}  // namespace lactoep

#endif
