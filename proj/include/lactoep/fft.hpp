// fft.hpp -- radix-2 FFT used for circle sampling <-> Laurent coefficients.

#ifndef LACTOEP_FFT_HPP
#define LACTOEP_FFT_HPP

#include <vector>

#include "lactoep/coefficients.hpp"

namespace lactoep {

// In-place forward DFT, X_k = sum_j x_j e^{-2 pi i jk/n}; n must be a power of two.
void fft_forward(std::vector<cplx>& x);

bool is_power_of_two(std::size_t n);

// Samples of g on the uniform grid z_j = e^{2 pi i j/n} -> Fourier coefficients
// c_m for m in [-n/2, n/2-1], returned as a table (c_m = (1/n) sum g(z_j) z_j^{-m}).
CoefficientTable circle_samples_to_coefficients(const std::vector<cplx>& samples);

}  // namespace lactoep

#endif
