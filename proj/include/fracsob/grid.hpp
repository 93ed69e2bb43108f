#ifndef FRACSOB_GRID_HPP
#define FRACSOB_GRID_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracsob {

using complex_t = std::complex<double>;

/// Uniform sampling lattice on [-L, L), shared by physical and frequency
/// space. Sample points are xi_j = -L + j*h with h = 2L/N.
struct Grid {
    double half_width = 0.0;  // L
    int n_samples = 0;        // N, even, >= 2

    Grid() = default;
    Grid(double L, int N) : half_width(L), n_samples(N) { validate(); }

    void validate() const {
        if (!(half_width > 0.0))
            throw std::invalid_argument("Grid: half_width must be positive");
        if (n_samples < 2 || n_samples % 2 != 0)
            throw std::invalid_argument("Grid: n_samples must be even and >= 2");
    }

    double spacing() const { return 2.0 * half_width / n_samples; }
    double point(int j) const { return -half_width + j * spacing(); }

    std::vector<double> points() const {
        std::vector<double> xs(static_cast<size_t>(n_samples));
        const double h = spacing();
        for (int j = 0; j < n_samples; ++j) xs[static_cast<size_t>(j)] = -half_width + j * h;
        return xs;
    }

    /// Nearest lattice index for xi (clamped to [0, N-1]).
    int index_of(double xi) const {
        double t = (xi + half_width) / spacing();
        int j = static_cast<int>(t + (t >= 0 ? 0.5 : -0.5));
        if (j < 0) j = 0;
        if (j >= n_samples) j = n_samples - 1;
        return j;
    }

    /// Snap xi to the nearest lattice point.
    double snap(double xi) const { return point(index_of(xi)); }

    bool contains(double xi) const {
        return xi >= -half_width && xi <= half_width - spacing();
    }

    /// Frequency grid conjugate to this one under the FFT pairing:
    /// same N, spacing dk = pi/L, half-width K = pi/h.
    Grid conjugate() const {
        return Grid(M_PI / spacing(), n_samples);
    }

    bool almost_equal(const Grid& o, double tol = 1e-9) const {
        return n_samples == o.n_samples &&
               std::abs(half_width - o.half_width) <= tol * (1.0 + std::abs(half_width));
    }
};

/// A jump discontinuity of a piecewise-smooth function, with one-sided
/// values and slopes. Quadratures that know the jump structure use this to
/// restore accuracy lost to the discontinuity.
struct Jump {
    double location = 0.0;
    double left_value = 0.0;
    double right_value = 0.0;
    double left_slope = 0.0;
    double right_slope = 0.0;

    double size() const { return right_value - left_value; }
};

/// Samples of f on a Grid. Values are complex; real-valued test functions
/// carry zero imaginary parts. `jumps` lists known discontinuities (empty
/// for continuous functions); sampled values at jump nodes follow the
/// midpoint convention (average of the one-sided limits), which is what the
/// jump-aligned trapezoid rule requires.
struct SampledFunction {
    Grid grid;
    std::vector<complex_t> values;
    std::vector<Jump> jumps;

    SampledFunction() = default;
    SampledFunction(Grid g, std::vector<complex_t> v, std::vector<Jump> js = {})
        : grid(g), values(std::move(v)), jumps(std::move(js)) {
        validate();
    }

    static SampledFunction from_real(const Grid& g, const std::vector<double>& v,
                                     std::vector<Jump> js = {}) {
        std::vector<complex_t> cv(v.size());
        for (size_t i = 0; i < v.size(); ++i) cv[i] = complex_t(v[i], 0.0);
        return SampledFunction(g, std::move(cv), std::move(js));
    }

    void validate() const {
        grid.validate();
        if (values.size() != static_cast<size_t>(grid.n_samples))
            throw std::invalid_argument("SampledFunction: values.size() != n_samples");
        for (const auto& z : values)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::invalid_argument("SampledFunction: non-finite value");
    }

    bool is_real(double tol = 1e-12) const {
        for (const auto& z : values)
            if (std::abs(z.imag()) > tol) return false;
        return true;
    }

    std::vector<double> real_values() const {
        std::vector<double> out(values.size());
        for (size_t i = 0; i < values.size(); ++i) out[i] = values[i].real();
        return out;
    }
};

/// Samples of F(f) on a frequency Grid (variable k), under the 1/(2pi)
/// forward convention. `source_jumps` propagates the jump structure of the
/// physical-space function; weighted spectral integrals use it for
/// de-aliasing and analytic tail extension.
struct SpectrumFunction {
    Grid grid;
    std::vector<complex_t> values;
    std::vector<Jump> source_jumps;

    SpectrumFunction() = default;
    SpectrumFunction(Grid g, std::vector<complex_t> v, std::vector<Jump> js = {})
        : grid(g), values(std::move(v)), source_jumps(std::move(js)) {
        validate();
    }

    void validate() const {
        grid.validate();
        if (values.size() != static_cast<size_t>(grid.n_samples))
            throw std::invalid_argument("SpectrumFunction: values.size() != n_samples");
        for (const auto& z : values)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::invalid_argument("SpectrumFunction: non-finite value");
    }
};

/// Default desk-scale discretization: every catalog function decays below
/// 1e-15 by |xi| = 40 and N = 2^14 resolves the sigma-weighted integrals.
inline Grid default_grid() { return Grid(40.0, 1 << 14); }

}  // namespace fracsob

#endif
