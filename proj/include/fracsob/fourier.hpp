#ifndef FRACSOB_FOURIER_HPP
#define FRACSOB_FOURIER_HPP

#include <utility>

#include "fracsob/grid.hpp"

namespace fracsob {

// Fourier conventions:
//   F(f)(k)      = (1/2pi) int e^{-ik xi} f(xi) dxi
//   F^{-1}(F)(xi) =        int e^{+ik xi} F(k)  dk
//   (f,g)_{L^2}  = 2pi (F f, F g)_{L^2}
//
// The continuous transforms are approximated by trapezoid quadrature on the
// truncated grid. When freq_grid is the conjugate of the physical grid
// (dk*h = 2pi/N) the quadrature sum is evaluated exactly by a phase-corrected
// FFT; otherwise the sum is evaluated directly.

SpectrumFunction forward_transform(const SampledFunction& f, const Grid& freq_grid);
SampledFunction inverse_transform(const SpectrumFunction& F, const Grid& phys_grid);

/// forward_transform with the conjugate frequency grid of f.grid.
SpectrumFunction forward_transform(const SampledFunction& f);

/// Direct quadrature evaluation of F(f) at a single frequency.
complex_t transform_at(const SampledFunction& f, double k);

/// Direct quadrature evaluation of F^{-1}(F) at a single point.
complex_t inverse_transform_at(const SpectrumFunction& F, double xi);

/// Trapezoid L^2 inner product (f, g) = int f conj(g) dxi.
complex_t inner_product(const SampledFunction& f, const SampledFunction& g);

/// Both sides of the Plancherel identity: lhs = (f,g)_{L2},
/// rhs = 2pi (F f, F g)_{L2}. Real parts (the catalog is real-valued).
std::pair<double, double> plancherel_check(const SampledFunction& f,
                                           const SampledFunction& g);

/// d/dxi via multiplication of the spectrum by ik and inversion.
SampledFunction derivative_via_spectrum(const SampledFunction& f);

}  // namespace fracsob

#endif
