#ifndef FRACSOB_FFT_HPP
#define FRACSOB_FFT_HPP

#include <complex>
#include <vector>

namespace fracsob::detail {

/// In-place radix-2 complex FFT, x.size() a power of two.
/// sign = -1: X_m = sum_j x_j e^{-2 pi i m j / N} (forward, unnormalized)
/// sign = +1: unnormalized inverse (caller divides by N).
void fft_radix2(std::vector<std::complex<double>>& x, int sign);

bool is_power_of_two(int n);

}  // namespace fracsob::detail

#endif
