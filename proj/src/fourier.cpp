#include "fracsob/fourier.hpp"

#include <cmath>
#include <stdexcept>

#include "fracsob/fft.hpp"

namespace fracsob {

namespace {

bool is_conjugate_pair(const Grid& phys, const Grid& freq) {
    if (phys.n_samples != freq.n_samples) return false;
    if (!detail::is_power_of_two(phys.n_samples)) return false;
    const double K = M_PI / phys.spacing();
    return std::abs(freq.half_width - K) <= 1e-9 * K;
}

// e^{-i K L} with K L = pi N / 2: exactly +1 or -1 for even N.
double origin_phase(int n_samples) {
    return (n_samples / 2) % 2 == 0 ? 1.0 : -1.0;
}

}  // namespace

SpectrumFunction forward_transform(const SampledFunction& f, const Grid& freq_grid) {
    f.validate();
    freq_grid.validate();
    const Grid& g = f.grid;
    const double h = g.spacing();
    const int n = g.n_samples;

    std::vector<complex_t> out(static_cast<size_t>(freq_grid.n_samples));

    if (is_conjugate_pair(g, freq_grid)) {
        // F(k_m) = (h/2pi) e^{-iKL} (-1)^m DFT[(-1)^j f_j]_m,  k_m = -K + m dk.
        // The alternating signs and the constant e^{-iKL} are the phase
        // correction for the -L grid origin; dropping them shifts every mode.
        std::vector<complex_t> work(f.values);
        for (int j = 1; j < n; j += 2) work[static_cast<size_t>(j)] = -work[static_cast<size_t>(j)];
        detail::fft_radix2(work, -1);
        const double c0 = origin_phase(n) * h / (2.0 * M_PI);
        for (int m = 0; m < n; ++m) {
            const double s = (m % 2 == 0) ? 1.0 : -1.0;
            out[static_cast<size_t>(m)] = c0 * s * work[static_cast<size_t>(m)];
        }
    } else {
        for (int m = 0; m < freq_grid.n_samples; ++m)
            out[static_cast<size_t>(m)] = transform_at(f, freq_grid.point(m));
    }
    return SpectrumFunction(freq_grid, std::move(out), f.jumps);
}

SpectrumFunction forward_transform(const SampledFunction& f) {
    return forward_transform(f, f.grid.conjugate());
}

SampledFunction inverse_transform(const SpectrumFunction& F, const Grid& phys_grid) {
    F.validate();
    phys_grid.validate();
    const Grid& g = F.grid;
    const int n = g.n_samples;

    std::vector<complex_t> out(static_cast<size_t>(phys_grid.n_samples));

    if (is_conjugate_pair(phys_grid, g)) {
        // f_j = dk e^{+iKL} (-1)^j sum_m [(-1)^m F_m] e^{+2pi i mj/N}
        std::vector<complex_t> work(F.values);
        for (int m = 1; m < n; m += 2) work[static_cast<size_t>(m)] = -work[static_cast<size_t>(m)];
        detail::fft_radix2(work, +1);
        const double dk = g.spacing();
        const double c0 = origin_phase(n) * dk;
        for (int j = 0; j < n; ++j) {
            const double s = (j % 2 == 0) ? 1.0 : -1.0;
            out[static_cast<size_t>(j)] = c0 * s * work[static_cast<size_t>(j)];
        }
    } else {
        for (int j = 0; j < phys_grid.n_samples; ++j)
            out[static_cast<size_t>(j)] = inverse_transform_at(F, phys_grid.point(j));
    }
    return SampledFunction(phys_grid, std::move(out));
}

complex_t transform_at(const SampledFunction& f, double k) {
    const double h = f.grid.spacing();
    complex_t acc(0.0, 0.0);
    for (int j = 0; j < f.grid.n_samples; ++j) {
        const double xi = f.grid.point(j);
        acc += f.values[static_cast<size_t>(j)] * std::polar(1.0, -k * xi);
    }
    return acc * (h / (2.0 * M_PI));
}

complex_t inverse_transform_at(const SpectrumFunction& F, double xi) {
    const double dk = F.grid.spacing();
    complex_t acc(0.0, 0.0);
    for (int m = 0; m < F.grid.n_samples; ++m) {
        const double k = F.grid.point(m);
        acc += F.values[static_cast<size_t>(m)] * std::polar(1.0, k * xi);
    }
    return acc * dk;
}

complex_t inner_product(const SampledFunction& f, const SampledFunction& g) {
    if (!f.grid.almost_equal(g.grid))
        throw std::invalid_argument("inner_product: grid mismatch");
    const int n = f.grid.n_samples;
    const double h = f.grid.spacing();
    complex_t acc(0.0, 0.0);
    for (int j = 0; j < n; ++j) {
        const double w = (j == 0 || j == n - 1) ? 0.5 : 1.0;
        acc += w * f.values[static_cast<size_t>(j)] * std::conj(g.values[static_cast<size_t>(j)]);
    }
    return acc * h;
}

std::pair<double, double> plancherel_check(const SampledFunction& f,
                                           const SampledFunction& g) {
    if (!f.grid.almost_equal(g.grid))
        throw std::invalid_argument("plancherel_check: grid mismatch");
    const double lhs = inner_product(f, g).real();

    const SpectrumFunction Ff = forward_transform(f);
    const SpectrumFunction Fg = forward_transform(g);
    const int n = Ff.grid.n_samples;
    const double dk = Ff.grid.spacing();
    complex_t acc(0.0, 0.0);
    for (int m = 0; m < n; ++m) {
        const double w = (m == 0 || m == n - 1) ? 0.5 : 1.0;
        acc += w * Ff.values[static_cast<size_t>(m)] * std::conj(Fg.values[static_cast<size_t>(m)]);
    }
    const double rhs = 2.0 * M_PI * (acc * dk).real();
    return {lhs, rhs};
}

SampledFunction derivative_via_spectrum(const SampledFunction& f) {
    SpectrumFunction F = forward_transform(f);
    for (int m = 0; m < F.grid.n_samples; ++m) {
        const double k = F.grid.point(m);
        F.values[static_cast<size_t>(m)] *= complex_t(0.0, k);
    }
    F.source_jumps.clear();
    return inverse_transform(F, f.grid);
}

}  // namespace fracsob
