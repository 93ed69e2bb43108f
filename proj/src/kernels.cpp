#include "fracsob/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "fracsob/quadrature.hpp"

namespace fracsob {

namespace {
// e^{2 xi} drops below 1e-34 of its xi1 value this far left of xi1
constexpr double kLeftTailSpan = 40.0;
}

double e1_eval(const KernelParams& p, double xi) {
    if (xi > p.xi1) return 0.0;
    return std::exp(xi - p.xi1) - std::exp(xi - p.xi2);
}

double e2_eval(const KernelParams& p, double xi) {
    if (xi < p.xi1 || xi > p.xi2) return 0.0;
    return std::exp(xi - p.xi2);
}

complex_t e1_fourier_closed_form(const KernelParams& p, double k) {
    const complex_t one_minus_ik(1.0, -k);
    const double c = std::exp(-p.xi1) - std::exp(-p.xi2);
    const complex_t num = c * std::exp(p.xi1) * std::polar(1.0, -k * p.xi1);
    return num / one_minus_ik / (2.0 * M_PI);
}

complex_t e2_fourier_closed_form(const KernelParams& p, double k) {
    const complex_t one_minus_ik(1.0, -k);
    const complex_t top = std::polar(1.0, -k * p.xi2) -
                          std::exp(p.xi1 - p.xi2) * std::polar(1.0, -k * p.xi1);
    return top / one_minus_ik / (2.0 * M_PI);
}

double e1_l2_closed_form(const KernelParams& p) {
    return (std::exp(-p.xi1) - std::exp(-p.xi2)) * std::exp(p.xi1) / std::sqrt(2.0);
}

double e2_l2_closed_form(const KernelParams& p) {
    return std::sqrt(0.5 * (1.0 - std::exp(-2.0 * p.gap())));
}

KernelParams snap_params(const KernelParams& p, const Grid& g) {
    const int j1 = g.index_of(p.xi1);
    if (p.degenerate()) return KernelParams(g.point(j1), g.point(j1));
    const double h = g.spacing();
    int cells = std::max(1, static_cast<int>(std::lround(p.gap() / h)));
    cells = std::min(cells, g.n_samples - 1 - j1);
    return KernelParams(g.point(j1), g.point(j1 + cells));
}

SampledFunction sample_e1(const KernelParams& p, const Grid& g) {
    std::vector<double> v(static_cast<size_t>(g.n_samples), 0.0);
    std::vector<Jump> jumps;
    if (!p.degenerate()) {
        const int j1 = g.index_of(p.xi1);
        for (int j = 0; j <= j1 && j < g.n_samples; ++j)
            v[static_cast<size_t>(j)] = e1_eval(p, g.point(j));
        const double left = e1_eval(p, p.xi1);
        if (std::abs(g.point(j1) - p.xi1) < 0.25 * g.spacing()) {
            v[static_cast<size_t>(j1)] = 0.5 * left;  // midpoint at the jump
            jumps.push_back(Jump{p.xi1, left, 0.0, left, 0.0});
        }
    }
    return SampledFunction::from_real(g, v, std::move(jumps));
}

SampledFunction sample_e2(const KernelParams& p, const Grid& g) {
    std::vector<double> v(static_cast<size_t>(g.n_samples), 0.0);
    std::vector<Jump> jumps;
    if (!p.degenerate()) {
        const double h = g.spacing();
        const int j1 = g.index_of(p.xi1);
        const int j2 = g.index_of(p.xi2);
        for (int j = j1; j <= j2 && j < g.n_samples; ++j)
            v[static_cast<size_t>(j)] = e2_eval(p, g.point(j));
        const double r1 = std::exp(p.xi1 - p.xi2);  // value just right of xi1
        if (std::abs(g.point(j1) - p.xi1) < 0.25 * h) {
            v[static_cast<size_t>(j1)] = 0.5 * r1;
            jumps.push_back(Jump{p.xi1, 0.0, r1, 0.0, r1});
        }
        if (std::abs(g.point(j2) - p.xi2) < 0.25 * h) {
            v[static_cast<size_t>(j2)] = 0.5;  // (1 + 0)/2
            jumps.push_back(Jump{p.xi2, 1.0, 0.0, 1.0, 0.0});
        }
    }
    return SampledFunction::from_real(g, v, std::move(jumps));
}

// ------------------------------------------------------------------
// Region splits
// ------------------------------------------------------------------

namespace {

// 2 int_0^T t^{-1-2s} D(t) dt with D(t)/t bounded near 0: substitute away
// the t^{-2s} factor and integrate the remaining smooth function.
double t_integral(const std::function<double(double)>& D, double s2, double T,
                  int n_seg = 96) {
    return 2.0 * quad::gauss_power_left(
                     [&](double t) { return t > 0.0 ? D(t) / t : 0.0; }, 0.0, T,
                     s2, n_seg, 16);
}

}  // namespace

RegionSplit e1_region_split(const KernelParams& p, SigmaOrder sigma) {
    RegionSplit out;
    out.terms.assign(3, 0.0);
    if (p.degenerate()) return out;
    if (!(p.xi1 < p.xi2))
        throw std::invalid_argument("e1_region_split: need xi1 < xi2");

    const double s2 = 2.0 * sigma.sigma;
    const double xi1 = p.xi1;
    const double lo = xi1 - kLeftTailSpan;

    // I1 and I2: both reduce (Fubini) to
    //   (1/2s) int_{-inf}^{xi1} E1^2(eta) (xi1 - eta)^{-2s} d eta
    auto cross = [&]() {
        return quad::gauss_power_right(
            [&](double eta) {
                const double e = e1_eval(p, eta);
                return e * e / s2;
            },
            lo, xi1, s2, 96, 16);
    };
    out.terms[0] = cross();
    out.terms[1] = cross();

    // I3 over (-inf, xi1]^2 via the shift representation:
    //   2 int_0^inf t^{-1-2s} D3(t) dt,  D3(t) = int_{-inf}^{xi1} (E1(eta-t)-E1(eta))^2 d eta
    const double T = kLeftTailSpan;
    auto D3 = [&](double t) {
        return quad::composite_gauss(
            [&](double eta) {
                const double d = e1_eval(p, eta - t) - e1_eval(p, eta);
                return d * d;
            },
            lo, xi1, 64, 16);
    };
    const double l2 = e1_l2_closed_form(p);
    out.terms[2] = t_integral(D3, s2, T) + 2.0 * l2 * l2 * std::pow(T, -s2) / s2;

    // undecomposed total: autocorrelation route over all of R^2
    auto D = [&](double t) {
        return quad::composite_gauss_split(
            [&](double eta) {
                const double d = e1_eval(p, eta - t) - e1_eval(p, eta);
                return d * d;
            },
            lo, xi1 + t, {xi1}, 48, 16);
    };
    out.total = t_integral(D, s2, T) + 2.0 * (2.0 * l2 * l2) * std::pow(T, -s2) / s2;
    return out;
}

RegionSplit e2_region_split(const KernelParams& p, SigmaOrder sigma) {
    RegionSplit out;
    out.terms.assign(5, 0.0);
    if (p.degenerate()) return out;
    const double gap = p.gap();
    if (!(gap > 0.0 && gap <= 1.0 + 1e-12))
        throw std::invalid_argument("e2_region_split: lemma hypothesis needs 0 < gap <= 1");

    const double s2 = 2.0 * sigma.sigma;
    const double xi1 = p.xi1, xi2 = p.xi2;

    // I1 (= I3 after renaming the variable): left-exterior cross region
    auto left_cross = [&]() {
        return quad::gauss_power_left(
            [&](double x) {
                const double e = e2_eval(p, x);
                return e * e / s2;
            },
            xi1, xi2, s2, 96, 16);
    };
    // I2 (= I4): right-exterior cross region
    auto right_cross = [&]() {
        return quad::gauss_power_right(
            [&](double x) {
                const double e = e2_eval(p, x);
                return e * e / s2;
            },
            xi1, xi2, s2, 96, 16);
    };
    out.terms[0] = left_cross();
    out.terms[1] = right_cross();
    out.terms[2] = left_cross();
    out.terms[3] = right_cross();

    // I5 over [xi1, xi2]^2: both points interior, smooth integrand
    auto D5 = [&](double t) {
        if (t >= gap) return 0.0;
        return quad::composite_gauss(
            [&](double eta) {
                const double d = std::exp(eta - t - xi2) - std::exp(eta - xi2);
                return d * d;
            },
            xi1 + t, xi2, 48, 16);
    };
    out.terms[4] = t_integral(D5, s2, gap);

    // total: supports of E2 and its t-shift separate exactly at t = gap, so
    // the tail 2 int_gap^inf t^{-1-2s} (2 ||E2||^2) dt is exact.
    auto D = [&](double t) {
        return quad::composite_gauss_split(
            [&](double eta) {
                const double d = e2_eval(p, eta - t) - e2_eval(p, eta);
                return d * d;
            },
            xi1, xi2 + t, {xi1 + t, xi2}, 32, 16);
    };
    const double l2 = e2_l2_closed_form(p);
    out.total = t_integral(D, s2, gap) + 2.0 * l2 * l2 * std::pow(gap, -s2) / sigma.sigma;
    return out;
}

// ------------------------------------------------------------------
// Lemma ratios
// ------------------------------------------------------------------

double lemma1_ratio(const KernelParams& p, SigmaOrder sigma, const Grid& g) {
    if (p.degenerate()) throw std::invalid_argument("lemma1_ratio: degenerate gap");
    const KernelParams ps = snap_params(p, g);
    const SampledFunction f = sample_e1(ps, g);
    return spectral_sigma_seminorm(f, sigma) / ps.gap();
}

double lemma2_ratio(const KernelParams& p, SigmaOrder sigma, const Grid& g) {
    if (!(p.gap() > 0.0 && p.gap() <= 1.0 + 1e-12))
        throw std::invalid_argument("lemma2_ratio: gap must be in (0, 1]");
    const KernelParams ps = snap_params(p, g);
    const SampledFunction f = sample_e2(ps, g);
    return spectral_sigma_seminorm(f, sigma) / std::pow(ps.gap(), 0.5 - sigma.sigma);
}

SlopeFit lemma2_slope_fit(SigmaOrder sigma, const Grid& g, double gap_lo,
                          double gap_hi, int n_gaps) {
    SlopeFit fit;
    const double h = g.spacing();
    std::vector<int> cells;
    for (int q = 0; q < n_gaps; ++q) {
        const double t = n_gaps > 1 ? static_cast<double>(q) / (n_gaps - 1) : 0.0;
        const double gap = gap_lo * std::pow(gap_hi / gap_lo, t);
        cells.push_back(std::max(1, static_cast<int>(std::lround(gap / h))));
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    const int j0 = g.index_of(0.0);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int d : cells) {
        const KernelParams ps(g.point(j0), g.point(j0 + d));
        const SampledFunction f = sample_e2(ps, g);
        GapSweepPoint pt;
        pt.gap = ps.gap();
        pt.value = spectral_sigma_seminorm(f, sigma);
        pt.ratio = pt.value / std::pow(pt.gap, 0.5 - sigma.sigma);
        fit.points.push_back(pt);
        const double x = std::log(pt.gap), y = std::log(pt.value);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double n = static_cast<double>(fit.points.size());
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return fit;
}

}  // namespace fracsob
