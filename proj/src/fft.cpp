#include "fracsob/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace fracsob::detail {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::vector<std::complex<double>>& x, int sign) {
    const size_t n = x.size();
    if (!is_power_of_two(static_cast<int>(n)))
        throw std::invalid_argument("fft_radix2: size must be a power of two");

    // bit-reversal permutation
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }

    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t j = 0; j < len / 2; ++j) {
                std::complex<double> u = x[i + j];
                std::complex<double> v = x[i + j + len / 2] * w;
                x[i + j] = u + v;
                x[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

}  // namespace fracsob::detail
