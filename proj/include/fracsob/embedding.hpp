#ifndef FRACSOB_EMBEDDING_HPP
#define FRACSOB_EMBEDDING_HPP

#include <string>
#include <vector>

#include "fracsob/grid.hpp"
#include "fracsob/kernels.hpp"
#include "fracsob/norms.hpp"
#include "fracsob/report.hpp"

namespace fracsob {

/// Exact split of f(xi1) - f(xi2) into the two boundary pairings with f and
/// the two kernel pairings with f'. reconstructed_diff = boundary_diff + i1
/// + i2 by construction; direct_diff is read off the samples.
struct DecompositionResult {
    double boundary_diff = 0.0;
    double i1 = 0.0;
    double i2 = 0.0;
    double reconstructed_diff = 0.0;
    double direct_diff = 0.0;
};

/// Right side of the representation
/// f(xi1) = int_{-inf}^{xi1} e^{xi-xi1} f + int_{-inf}^{xi1} e^{xi-xi1} f'.
/// xi1 snaps to the lattice and must be interior.
double reconstruct_value(const SampledFunction& f, const SampledFunction& f_prime,
                         double xi1);

/// I1 = int E1(xi; p) f'(xi) dxi (jump-aligned Simpson quadrature).
double compute_i1(const SampledFunction& f_prime, const KernelParams& p);

/// I2 = -int E2(xi; p) f'(xi) dxi.
double compute_i2(const SampledFunction& f_prime, const KernelParams& p);

DecompositionResult difference_decomposition(const SampledFunction& f,
                                             const SampledFunction& f_prime,
                                             const KernelParams& p);

/// |I1| <= 2pi ||f'||_{H^{s-1}} ( int (1+k^2)^{1-s} |F E1|^2 dk )^{1/2},
/// 1/2 < s < 1. Reports lhs, rhs and the slack.
VerificationReport cauchy_schwarz_bound_check(const SampledFunction& f,
                                              const SampledFunction& f_prime,
                                              const KernelParams& p, SobolevOrder s,
                                              const std::string& function_id = "");

/// ||f||_{Linf} / ||f||_{H^s} for s > 1/2; 0 for the zero function.
double sobolev_embedding_ratio(const SampledFunction& f, SobolevOrder s);

/// Analytic Cauchy-Schwarz bound for the Linf/H^s ratio:
/// sqrt( int (1+k^2)^{-s} dk / (2 pi) ), evaluated by quadrature.
double sobolev_embedding_constant(SobolevOrder s);

/// Holder quotient sup over gaps <= 1 against ||f||_{H^s}, 1/2 < s < 1.
EmbeddingReport theorem_ratio(const SampledFunction& f, const std::string& function_id,
                              SobolevOrder s);

/// Full Holder norm against ||f||_{H^s}, plus the gap > 1 regime check
/// sup_{gap>1} quotient <= 2 ||f||_{Linf}.
VerificationReport corollary_check(const SampledFunction& f, SobolevOrder s,
                                   const std::string& function_id = "");

/// sup of |f(xi_i)-f(xi_j)| / gap^gamma over log-spaced gaps in
/// (gap_min, gap_max] (helper for the corollary's split).
double holder_sup_in_range(const SampledFunction& f, HolderExponent gamma,
                           double gap_min, double gap_max, int n_gaps = 64);

/// One theorem_ratio report per (catalog id, s), sorted by (id, s).
std::vector<EmbeddingReport> constant_sweep(const std::vector<std::string>& ids,
                                            const std::vector<double>& s_grid,
                                            const Grid& g);

}  // namespace fracsob

#endif
