#include "fracsob/catalog.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fracsob/fourier.hpp"
#include "fracsob/kernels.hpp"

namespace fracsob::catalog {

namespace {

SampledFunction sample_pointwise(const Grid& g, const std::function<double(double)>& f) {
    std::vector<double> v(static_cast<size_t>(g.n_samples));
    for (int j = 0; j < g.n_samples; ++j) v[static_cast<size_t>(j)] = f(g.point(j));
    return SampledFunction::from_real(g, v);
}

CatalogEntry make_gaussian() {
    CatalogEntry e;
    e.id = "gaussian";
    e.regularity_note = "Schwartz class; in H^s for every s (probed at s = 1.45)";
    e.hs_threshold = 1.5;
    e.smooth = true;
    e.sampler = [](const Grid& g) {
        return sample_pointwise(g, [](double x) { return std::exp(-0.5 * x * x); });
    };
    e.derivative = [](const Grid& g) {
        return sample_pointwise(g, [](double x) { return -x * std::exp(-0.5 * x * x); });
    };
    e.spectrum = [](double k) {
        return complex_t(std::exp(-0.5 * k * k) / std::sqrt(2.0 * M_PI), 0.0);
    };
    return e;
}

CatalogEntry make_modulated() {
    CatalogEntry e;
    e.id = "modulated_gaussian";
    e.regularity_note = "Schwartz class; in H^s for every s (probed at s = 1.45)";
    e.hs_threshold = 1.5;
    e.smooth = true;
    e.sampler = [](const Grid& g) {
        return sample_pointwise(
            g, [](double x) { return std::exp(-0.5 * x * x) * std::cos(7.0 * x); });
    };
    e.derivative = [](const Grid& g) {
        return sample_pointwise(g, [](double x) {
            return std::exp(-0.5 * x * x) * (-x * std::cos(7.0 * x) - 7.0 * std::sin(7.0 * x));
        });
    };
    e.spectrum = [](double k) {
        auto gsp = [](double q) { return std::exp(-0.5 * q * q) / std::sqrt(2.0 * M_PI); };
        return complex_t(0.5 * (gsp(k - 7.0) + gsp(k + 7.0)), 0.0);
    };
    return e;
}

double bump_fn(double x) {
    const double d = 1.0 - x * x;
    if (d <= 1e-12) return 0.0;
    return std::exp(-1.0 / d);
}

CatalogEntry make_bump() {
    CatalogEntry e;
    e.id = "bump";
    e.regularity_note = "C^inf compactly supported on (-1,1); in H^s for every s";
    e.hs_threshold = 1.5;
    e.smooth = true;
    e.sampler = [](const Grid& g) { return sample_pointwise(g, bump_fn); };
    e.derivative = [](const Grid& g) {
        return sample_pointwise(g, [](double x) {
            const double d = 1.0 - x * x;
            if (d <= 1e-12) return 0.0;
            return bump_fn(x) * (-2.0 * x / (d * d));
        });
    };
    return e;
}

CatalogEntry make_hat() {
    CatalogEntry e;
    e.id = "hat";
    e.regularity_note = "Lipschitz with kinks; in H^s exactly for s < 3/2";
    e.hs_threshold = 1.5;
    e.smooth = false;  // derivative jumps at -1, 0, 1
    e.sampler = [](const Grid& g) {
        return sample_pointwise(g, [](double x) { return std::max(0.0, 1.0 - std::abs(x)); });
    };
    e.spectrum = [](double k) {
        if (std::abs(k) < 1e-6) {
            // (1 - cos k)/(pi k^2) -> 1/(2 pi) - k^2/(24 pi)
            return complex_t(1.0 / (2.0 * M_PI) - k * k / (24.0 * M_PI), 0.0);
        }
        return complex_t((1.0 - std::cos(k)) / (M_PI * k * k), 0.0);
    };
    return e;
}

CatalogEntry make_kernel_entry(bool first, const KernelParams& p) {
    CatalogEntry e;
    std::ostringstream name;
    name << (first ? "e1" : "e2") << ":xi1=" << p.xi1 << ",xi2=" << p.xi2;
    e.id = name.str();
    e.regularity_note = "jump discontinuity; in H^s exactly for s < 1/2";
    e.hs_threshold = 0.5;
    e.smooth = false;
    e.sampler = [first, p](const Grid& g) {
        const KernelParams ps = snap_params(p, g);
        return first ? sample_e1(ps, g) : sample_e2(ps, g);
    };
    e.spectrum = [first, p](double k) {
        return first ? e1_fourier_closed_form(p, k) : e2_fourier_closed_form(p, k);
    };
    return e;
}

double probe_taper(double kabs, double cutoff) {
    if (kabs <= cutoff) return 1.0;
    if (kabs >= 10.0 * cutoff) return 0.0;
    const double u = std::log10(kabs / cutoff);  // in (0, 1)
    return 0.5 * (1.0 + std::cos(M_PI * u));
}

double parse_number(const std::string& id, const std::string& key) {
    const std::string tag = key + "=";
    const size_t pos = id.find(tag);
    if (pos == std::string::npos)
        throw std::out_of_range("catalog: missing parameter '" + key + "' in id " + id);
    size_t end = id.find(',', pos);
    if (end == std::string::npos) end = id.size();
    const std::string num = id.substr(pos + tag.size(), end - pos - tag.size());
    try {
        size_t used = 0;
        const double v = std::stod(num, &used);
        if (used != num.size()) throw std::invalid_argument(num);
        return v;
    } catch (const std::exception&) {
        throw std::out_of_range("catalog: bad number '" + num + "' in id " + id);
    }
}

}  // namespace

CatalogEntry spectral_probe(double beta, double cutoff) {
    if (!(beta > 0.5))
        throw std::invalid_argument("spectral_probe: beta must exceed 1/2");
    if (!(cutoff > 0.0))
        throw std::invalid_argument("spectral_probe: cutoff must be positive");

    CatalogEntry e;
    std::ostringstream name;
    name << "probe:beta=" << beta;
    if (cutoff != 50.0) name << ",cutoff=" << cutoff;
    e.id = name.str();
    std::ostringstream note;
    note << "spectrum (1+k^2)^{-beta/2}, cosine taper over [" << cutoff << ", "
         << 10.0 * cutoff << "]; in H^s for s < " << beta - 0.5 << " as cutoff -> inf";
    e.regularity_note = note.str();
    e.hs_threshold = beta - 0.5;
    e.smooth = true;

    auto spectrum = [beta, cutoff](double k) {
        const double kabs = std::abs(k);
        return complex_t(std::pow(1.0 + k * k, -0.5 * beta) * probe_taper(kabs, cutoff), 0.0);
    };
    e.spectrum = spectrum;
    e.sampler = [spectrum](const Grid& g) {
        const Grid fg = g.conjugate();
        std::vector<complex_t> F(static_cast<size_t>(fg.n_samples));
        for (int m = 0; m < fg.n_samples; ++m) F[static_cast<size_t>(m)] = spectrum(fg.point(m));
        SampledFunction f = inverse_transform(SpectrumFunction(fg, std::move(F)), g);
        for (auto& z : f.values) z = complex_t(z.real(), 0.0);  // symmetric spectrum
        return f;
    };
    e.derivative = [spectrum](const Grid& g) {
        const Grid fg = g.conjugate();
        std::vector<complex_t> F(static_cast<size_t>(fg.n_samples));
        for (int m = 0; m < fg.n_samples; ++m) {
            const double k = fg.point(m);
            F[static_cast<size_t>(m)] = complex_t(0.0, k) * spectrum(k);
        }
        SampledFunction f = inverse_transform(SpectrumFunction(fg, std::move(F)), g);
        for (auto& z : f.values) z = complex_t(z.real(), 0.0);
        return f;
    };
    return e;
}

CatalogEntry get(const std::string& id) {
    if (id == "gaussian") return make_gaussian();
    if (id == "modulated_gaussian") return make_modulated();
    if (id == "bump") return make_bump();
    if (id == "hat") return make_hat();
    if (id.rfind("probe:", 0) == 0) {
        const double beta = parse_number(id, "beta");
        const double cutoff = id.find("cutoff=") != std::string::npos
                                  ? parse_number(id, "cutoff")
                                  : 50.0;
        return spectral_probe(beta, cutoff);
    }
    if (id.rfind("e1:", 0) == 0 || id.rfind("e2:", 0) == 0) {
        const double a = parse_number(id, "xi1");
        const double b = parse_number(id, "xi2");
        return make_kernel_entry(id.rfind("e1:", 0) == 0, KernelParams(a, b));
    }
    throw std::out_of_range("catalog: unknown function id '" + id + "'");
}

std::vector<std::string> default_ids() {
    return {"gaussian",       "modulated_gaussian", "bump",
            "hat",            "probe:beta=1.1",     "probe:beta=1.3",
            "probe:beta=2.0", "e1:xi1=0,xi2=1",     "e2:xi1=0,xi2=0.5"};
}

}  // namespace fracsob::catalog
