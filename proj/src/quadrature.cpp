#include "fracsob/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace fracsob::quad {

const GaussRule& gauss_legendre(int order) {
    static std::map<int, GaussRule> cache;
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    rule.nodes.resize(static_cast<size_t>(order));
    rule.weights.resize(static_cast<size_t>(order));
    // Newton iteration on P_n, Chebyshev initial guesses.
    for (int i = 0; i < order; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[static_cast<size_t>(i)] = x;
        rule.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return cache.emplace(order, std::move(rule)).first->second;
}

double composite_gauss(const Fn& f, double a, double b, int n_seg, int order) {
    if (!(b > a)) return 0.0;
    const GaussRule& rule = gauss_legendre(order);
    const double w = (b - a) / n_seg;
    double total = 0.0;
    for (int s = 0; s < n_seg; ++s) {
        const double lo = a + s * w;
        const double mid = lo + 0.5 * w;
        double acc = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(mid + 0.5 * w * rule.nodes[i]);
        total += 0.5 * w * acc;
    }
    return total;
}

double composite_gauss_split(const Fn& f, double a, double b,
                             const std::vector<double>& breakpoints,
                             int n_seg_per_piece, int order) {
    std::vector<double> edges;
    edges.push_back(a);
    for (double x : breakpoints)
        if (x > a && x < b) edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    double total = 0.0;
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        total += composite_gauss(f, edges[i], edges[i + 1], n_seg_per_piece, order);
    return total;
}

double gauss_power_left(const Fn& g, double a, double b, double alpha,
                        int n_seg, int order) {
    if (!(b > a)) return 0.0;
    if (alpha < 0.0 || alpha >= 1.0)
        throw std::invalid_argument("gauss_power_left: alpha must be in [0, 1)");
    const double p = 1.0 - alpha;
    const double vmax = std::pow(b - a, p);
    //  int (x-a)^{-alpha} g dx = (1/p) int g(a + v^{1/p}) dv,  v in (0, vmax]
    return composite_gauss(
               [&](double v) { return g(a + std::pow(v, 1.0 / p)); }, 0.0, vmax,
               n_seg, order) /
           p;
}

double gauss_power_right(const Fn& g, double a, double b, double alpha,
                         int n_seg, int order) {
    return gauss_power_left([&](double x) { return g(a + b - x); }, a, b, alpha,
                            n_seg, order);
}

namespace {

double simpson_step(const Fn& f, double a, double fa, double b, double fb,
                    double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const Fn& f, double a, double fa, double b, double fb,
                            double m, double fm, double whole, double tol,
                            int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson_step(f, a, fa, m, fm, lm, flm);
    const double right = simpson_step(f, m, fm, b, fb, rm, frm);
    const double diff = left + right - whole;
    if (depth <= 0 || std::abs(diff) <= 15.0 * tol)
        return left + right + diff / 15.0;
    return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const Fn& f, double a, double b, double tol, int max_depth) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson_step(f, a, fa, b, fb, m, fm);
    return adaptive_simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double simpson_on_samples(const std::vector<double>& v, double h, int j0, int j1) {
    const int n = j1 - j0;  // interval count
    if (n <= 0) return 0.0;
    if (n == 1) return 0.5 * h * (v[static_cast<size_t>(j0)] + v[static_cast<size_t>(j1)]);
    double total = 0.0;
    int j = j0;
    if (n % 2 == 1) {
        if (n >= 3) {
            // Simpson 3/8 on the first three intervals
            total += 3.0 * h / 8.0 *
                     (v[static_cast<size_t>(j)] + 3.0 * v[static_cast<size_t>(j + 1)] +
                      3.0 * v[static_cast<size_t>(j + 2)] + v[static_cast<size_t>(j + 3)]);
            j += 3;
        }
    }
    for (; j + 2 <= j1; j += 2)
        total += h / 3.0 *
                 (v[static_cast<size_t>(j)] + 4.0 * v[static_cast<size_t>(j + 1)] +
                  v[static_cast<size_t>(j + 2)]);
    return total;
}

double trapezoid(const std::vector<double>& v, double h) {
    if (v.size() < 2) return 0.0;
    double acc = 0.5 * (v.front() + v.back());
    for (size_t i = 1; i + 1 < v.size(); ++i) acc += v[i];
    return acc * h;
}

}  // namespace fracsob::quad
