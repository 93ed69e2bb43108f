#include "fracsob/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "fracsob/catalog.hpp"
#include "fracsob/quadrature.hpp"

namespace fracsob {

namespace {

int interior_node(const Grid& g, double xi, const char* who) {
    const int j = g.index_of(xi);
    if (j <= 0 || j >= g.n_samples - 1)
        throw std::invalid_argument(std::string(who) + ": point outside the grid interior");
    return j;
}

void require_embedding_order(SobolevOrder s) {
    if (!(s.s > 0.5 && s.s < 1.0))
        throw std::invalid_argument("embedding: s must lie in (1/2, 1)");
}

}  // namespace

double reconstruct_value(const SampledFunction& f, const SampledFunction& f_prime,
                         double xi1) {
    f.validate();
    f_prime.validate();
    if (!f.grid.almost_equal(f_prime.grid))
        throw std::invalid_argument("reconstruct_value: grid mismatch");
    const Grid& g = f.grid;
    const int j1 = interior_node(g, xi1, "reconstruct_value");
    const double x1 = g.point(j1);

    std::vector<double> integrand(static_cast<size_t>(j1 + 1));
    for (int j = 0; j <= j1; ++j) {
        const double w = std::exp(g.point(j) - x1);
        integrand[static_cast<size_t>(j)] =
            w * (f.values[static_cast<size_t>(j)].real() +
                 f_prime.values[static_cast<size_t>(j)].real());
    }
    return quad::simpson_on_samples(integrand, g.spacing(), 0, j1);
}

double compute_i1(const SampledFunction& f_prime, const KernelParams& p) {
    f_prime.validate();
    if (p.degenerate()) return 0.0;
    const Grid& g = f_prime.grid;
    const int j1 = g.index_of(p.xi1);
    std::vector<double> integrand(static_cast<size_t>(j1 + 1));
    for (int j = 0; j <= j1; ++j)
        integrand[static_cast<size_t>(j)] =
            e1_eval(p, g.point(j)) * f_prime.values[static_cast<size_t>(j)].real();
    return quad::simpson_on_samples(integrand, g.spacing(), 0, j1);
}

double compute_i2(const SampledFunction& f_prime, const KernelParams& p) {
    f_prime.validate();
    if (p.degenerate()) return 0.0;
    const Grid& g = f_prime.grid;
    const int j1 = g.index_of(p.xi1);
    const int j2 = g.index_of(p.xi2);
    std::vector<double> integrand(static_cast<size_t>(j2 + 1));
    for (int j = j1; j <= j2; ++j)
        integrand[static_cast<size_t>(j)] =
            std::exp(g.point(j) - p.xi2) * f_prime.values[static_cast<size_t>(j)].real();
    return -quad::simpson_on_samples(integrand, g.spacing(), j1, j2);
}

DecompositionResult difference_decomposition(const SampledFunction& f,
                                             const SampledFunction& f_prime,
                                             const KernelParams& p) {
    f.validate();
    f_prime.validate();
    if (!f.grid.almost_equal(f_prime.grid))
        throw std::invalid_argument("difference_decomposition: grid mismatch");
    const Grid& g = f.grid;
    const int j1 = interior_node(g, p.xi1, "difference_decomposition");
    const int j2 = interior_node(g, p.xi2, "difference_decomposition");
    const KernelParams ps(g.point(j1), g.point(j2));

    DecompositionResult r;
    // boundary pairings of the difference identity: int E1 f - int E2 f
    {
        std::vector<double> v(static_cast<size_t>(j1 + 1));
        for (int j = 0; j <= j1; ++j)
            v[static_cast<size_t>(j)] =
                e1_eval(ps, g.point(j)) * f.values[static_cast<size_t>(j)].real();
        double b = quad::simpson_on_samples(v, g.spacing(), 0, j1);
        std::vector<double> w(static_cast<size_t>(j2 + 1));
        for (int j = j1; j <= j2; ++j)
            w[static_cast<size_t>(j)] =
                std::exp(g.point(j) - ps.xi2) * f.values[static_cast<size_t>(j)].real();
        b -= quad::simpson_on_samples(w, g.spacing(), j1, j2);
        r.boundary_diff = b;
    }
    r.i1 = compute_i1(f_prime, ps);
    r.i2 = compute_i2(f_prime, ps);
    r.reconstructed_diff = r.boundary_diff + r.i1 + r.i2;
    r.direct_diff = f.values[static_cast<size_t>(j1)].real() -
                    f.values[static_cast<size_t>(j2)].real();
    return r;
}

VerificationReport cauchy_schwarz_bound_check(const SampledFunction& f,
                                              const SampledFunction& f_prime,
                                              const KernelParams& p, SobolevOrder s,
                                              const std::string& function_id) {
    require_embedding_order(s);
    const Grid& g = f.grid;
    const KernelParams ps = snap_params(p, g);

    VerificationReport r;
    r.target = "cauchy-schwarz";
    r.function_id = function_id;
    r.lhs = std::abs(compute_i1(f_prime, ps));

    const double fp_norm = hs_norm(f_prime, SobolevOrder(s.s - 1.0));
    const SampledFunction e1s = sample_e1(ps, g);
    const double kernel_integral = sobolev_weighted_spectral_integral(e1s, 1.0 - s.s);
    r.rhs = 2.0 * M_PI * fp_norm * std::sqrt(std::max(0.0, kernel_integral));

    r.ratio = r.rhs != 0.0 ? r.lhs / r.rhs : (r.lhs == 0.0 ? 0.0 : INFINITY);
    r.tol_lo = -1e-9;  // admissible slack
    r.tol_hi = INFINITY;
    r.pass = (r.rhs - r.lhs) >= -1e-9;
    r.params["s"] = s.s;
    r.params["xi1"] = ps.xi1;
    r.params["xi2"] = ps.xi2;
    r.params["slack"] = r.rhs - r.lhs;
    r.grid = g;
    return r;
}

double sobolev_embedding_ratio(const SampledFunction& f, SobolevOrder s) {
    if (!(s.s > 0.5))
        throw std::invalid_argument("sobolev_embedding_ratio: s must exceed 1/2");
    const double num = linf_norm(f);
    if (num == 0.0) return 0.0;
    return num / hs_norm(f, s);
}

double sobolev_embedding_constant(SobolevOrder s) {
    if (!(s.s > 0.5))
        throw std::invalid_argument("sobolev_embedding_constant: s must exceed 1/2");
    // int (1+k^2)^{-s} dk = 2 [ int_0^A + analytic tail ], tail via the
    // expansion k^{-2s} (1 - s k^{-2} + ...)
    const double A = 1e4;
    const double head = quad::composite_gauss(
        [&](double k) { return std::pow(1.0 + k * k, -s.s); }, 0.0, A, 200, 16);
    const double tail = std::pow(A, 1.0 - 2.0 * s.s) / (2.0 * s.s - 1.0) -
                        s.s * std::pow(A, -1.0 - 2.0 * s.s) / (1.0 + 2.0 * s.s) * 2.0 *
                            s.s / (2.0 * s.s + 1.0);
    return std::sqrt(2.0 * (head + tail) / (2.0 * M_PI));
}

EmbeddingReport theorem_ratio(const SampledFunction& f, const std::string& function_id,
                              SobolevOrder s) {
    require_embedding_order(s);
    EmbeddingReport r;
    r.function_id = function_id;
    r.s = s.s;
    r.holder_quotient_sup = holder_seminorm(f, HolderExponent(s.s - 0.5), 1.0);
    r.hs_norm_value = hs_norm(f, s);
    r.ratio = r.hs_norm_value > 0.0 ? r.holder_quotient_sup / r.hs_norm_value : 0.0;
    r.gap_grid = holder_gap_grid(f.grid, 1.0);
    r.grid = f.grid;
    return r;
}

double holder_sup_in_range(const SampledFunction& f, HolderExponent gamma,
                           double gap_min, double gap_max, int n_gaps) {
    const Grid& g = f.grid;
    const double h = g.spacing();
    const std::vector<double> v = f.real_values();
    const int d_min = static_cast<int>(std::floor(gap_min / h)) + 1;
    const int d_max =
        std::min<int>(g.n_samples - 1, static_cast<int>(std::floor(gap_max / h + 1e-9)));
    if (d_max < d_min) return 0.0;

    std::vector<int> cells;
    for (int q = 0; q < n_gaps; ++q) {
        const double t = n_gaps > 1 ? static_cast<double>(q) / (n_gaps - 1) : 0.0;
        const int d = static_cast<int>(
            std::lround(d_min * std::pow(static_cast<double>(d_max) / d_min, t)));
        cells.push_back(std::max(d_min, std::min(d_max, d)));
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    double best = 0.0;
    for (int d : cells) {
        double mx = 0.0;
        for (size_t i = 0; i + static_cast<size_t>(d) < v.size(); ++i)
            mx = std::max(mx, std::abs(v[i + static_cast<size_t>(d)] - v[i]));
        best = std::max(best, mx / std::pow(d * h, gamma.gamma));
    }
    return best;
}

VerificationReport corollary_check(const SampledFunction& f, SobolevOrder s,
                                   const std::string& function_id) {
    require_embedding_order(s);
    const HolderExponent gamma(s.s - 0.5);

    VerificationReport r;
    r.target = "corollary";
    r.function_id = function_id;
    const double hs = hs_norm(f, s);
    r.lhs = holder_norm(f, gamma);
    r.rhs = hs;
    r.ratio = hs > 0.0 ? r.lhs / hs : 0.0;

    // gap > 1 regime: |xi1-xi2|^{-gamma} < 1 forces sup <= 2 ||f||_inf
    const double far_sup = holder_sup_in_range(f, gamma, 1.0, 2.0 * f.grid.half_width);
    const double cap = 2.0 * linf_norm(f) + 1e-9;
    r.pass = std::isfinite(r.ratio) && far_sup <= cap;
    r.params["s"] = s.s;
    r.params["far_sup"] = far_sup;
    r.params["far_cap"] = cap;
    r.tol_lo = 0.0;
    r.tol_hi = INFINITY;
    r.grid = f.grid;
    return r;
}

std::vector<EmbeddingReport> constant_sweep(const std::vector<std::string>& ids,
                                            const std::vector<double>& s_grid,
                                            const Grid& g) {
    std::vector<EmbeddingReport> out;
    for (const auto& id : ids) {
        const catalog::CatalogEntry entry = catalog::get(id);
        const SampledFunction f = entry.sampler(g);
        for (double s : s_grid) out.push_back(theorem_ratio(f, id, SobolevOrder(s)));
    }
    std::sort(out.begin(), out.end(), [](const EmbeddingReport& a, const EmbeddingReport& b) {
        return a.function_id != b.function_id ? a.function_id < b.function_id : a.s < b.s;
    });
    return out;
}

}  // namespace fracsob
