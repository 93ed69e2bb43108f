#ifndef FRACSOB_KERNELS_HPP
#define FRACSOB_KERNELS_HPP

#include <vector>

#include "fracsob/grid.hpp"
#include "fracsob/norms.hpp"

namespace fracsob {

/// Parameters (xi1, xi2), xi1 <= xi2, of the cut-off kernels E1 and E2.
struct KernelParams {
    double xi1;
    double xi2;

    KernelParams(double a, double b) : xi1(a), xi2(b) {
        if (!(a <= b)) throw std::invalid_argument("KernelParams: xi1 must be <= xi2");
        if (!std::isfinite(a) || !std::isfinite(b))
            throw std::invalid_argument("KernelParams: non-finite parameter");
    }
    double gap() const { return xi2 - xi1; }
    bool degenerate() const { return xi2 == xi1; }
};

/// E1(xi) = e^{xi-xi1} - e^{xi-xi2} for xi <= xi1, else 0.
double e1_eval(const KernelParams& p, double xi);

/// E2(xi) = e^{xi-xi2} for xi1 <= xi <= xi2, else 0.
double e2_eval(const KernelParams& p, double xi);

/// F(E1)(k) = (1/2pi) (e^{-xi1} - e^{-xi2}) e^{(1-ik) xi1} / (1-ik)
complex_t e1_fourier_closed_form(const KernelParams& p, double k);

/// F(E2)(k) = (1/2pi) e^{-xi2} (e^{(1-ik) xi2} - e^{(1-ik) xi1}) / (1-ik)
complex_t e2_fourier_closed_form(const KernelParams& p, double k);

/// ||E1||_{L2} = (e^{-xi1} - e^{-xi2}) e^{xi1} / sqrt(2)  <=  gap / sqrt(2)
double e1_l2_closed_form(const KernelParams& p);

/// ||E2||_{L2} = sqrt((1 - e^{-2 gap}) / 2)  <=  sqrt(gap)
double e2_l2_closed_form(const KernelParams& p);

/// Snap xi1 to the lattice and the gap to a whole (>= 1 when positive)
/// number of cells, so jumps sit on grid points.
KernelParams snap_params(const KernelParams& p, const Grid& g);

/// Kernel samples with the midpoint convention at jump nodes and jump
/// metadata attached (parameters must already be lattice-aligned).
SampledFunction sample_e1(const KernelParams& p, const Grid& g);
SampledFunction sample_e2(const KernelParams& p, const Grid& g);

struct RegionSplit {
    std::vector<double> terms;  // region integrals, paper order
    double total = 0.0;         // undecomposed double integral, independent route
};

/// Three-region decomposition of the Gagliardo double integral of E1
/// (cross x2, same-side once); total via the autocorrelation route.
RegionSplit e1_region_split(const KernelParams& p, SigmaOrder sigma);

/// Five-region decomposition for E2 (hypothesis 0 < gap <= 1).
RegionSplit e2_region_split(const KernelParams& p, SigmaOrder sigma);

/// spectral_sigma_seminorm(E1; sigma) / gap, parameters snapped to g.
double lemma1_ratio(const KernelParams& p, SigmaOrder sigma, const Grid& g);

/// spectral_sigma_seminorm(E2; sigma) / gap^{1/2 - sigma}, gap in (0, 1].
double lemma2_ratio(const KernelParams& p, SigmaOrder sigma, const Grid& g);

struct GapSweepPoint {
    double gap = 0.0;   // snapped
    double value = 0.0; // seminorm
    double ratio = 0.0; // seminorm / gap^exponent
};

/// Seminorm of E2(0, gap) over a log-spaced gap sweep (gaps snapped,
/// duplicates removed) plus the least-squares log-log slope.
struct SlopeFit {
    std::vector<GapSweepPoint> points;
    double slope = 0.0;
};
SlopeFit lemma2_slope_fit(SigmaOrder sigma, const Grid& g, double gap_lo,
                          double gap_hi, int n_gaps);

}  // namespace fracsob

#endif
