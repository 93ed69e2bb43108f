#ifndef FRACSOB_QUADRATURE_HPP
#define FRACSOB_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace fracsob::quad {

using Fn = std::function<double(double)>;

/// Gauss-Legendre nodes/weights on [-1, 1], computed once per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

/// n_seg equal segments, Gauss-Legendre of the given order on each.
double composite_gauss(const Fn& f, double a, double b, int n_seg, int order = 16);

/// composite_gauss splitting [a, b] at the given interior breakpoints.
double composite_gauss_split(const Fn& f, double a, double b,
                             const std::vector<double>& breakpoints,
                             int n_seg_per_piece, int order = 16);

/// int_a^b (x - a)^{-alpha} g(x) dx for 0 <= alpha < 1, g smooth:
/// substitution v = (x - a)^{1-alpha} removes the endpoint singularity.
double gauss_power_left(const Fn& g, double a, double b, double alpha,
                        int n_seg = 64, int order = 16);

/// Same with the singular factor (b - x)^{-alpha} at the right endpoint.
double gauss_power_right(const Fn& g, double a, double b, double alpha,
                         int n_seg = 64, int order = 16);

/// Recursive adaptive Simpson (used by independent test oracles as well).
double adaptive_simpson(const Fn& f, double a, double b, double tol,
                        int max_depth = 60);

/// Composite Simpson over consecutive samples v[j0..j1] with spacing h.
/// Odd interval counts are handled with a 3/8 block; 1 interval falls back
/// to trapezoid, 0 intervals give 0.
double simpson_on_samples(const std::vector<double>& v, double h, int j0, int j1);

/// Plain trapezoid over samples with spacing h.
double trapezoid(const std::vector<double>& v, double h);

}  // namespace fracsob::quad

#endif
