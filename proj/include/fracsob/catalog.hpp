#ifndef FRACSOB_CATALOG_HPP
#define FRACSOB_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracsob/grid.hpp"

namespace fracsob::catalog {

/// A named analytic test function with optional analytic derivative and
/// spectrum. Samplers work on any valid grid and are deterministic.
struct CatalogEntry {
    std::string id;
    std::string regularity_note;
    double hs_threshold = 0.0;  // largest s with known H^s membership
    bool smooth = false;        // derivative available (analytic or spectral)
    std::function<SampledFunction(const Grid&)> sampler;
    std::function<SampledFunction(const Grid&)> derivative;   // null when !smooth
    std::function<complex_t(double)> spectrum;                // null when unknown
};

/// Look up an entry. Fixed ids: gaussian, modulated_gaussian, bump, hat,
/// probe:beta=1.1, probe:beta=1.3, probe:beta=2.0, e1:xi1=0,xi2=1,
/// e2:xi1=0,xi2=0.5. Parameterized forms e1:xi1=A,xi2=B / e2:... /
/// probe:beta=B[,cutoff=C] are accepted. Throws std::out_of_range for
/// unknown ids.
CatalogEntry get(const std::string& id);

/// The fixed catalog ids, in canonical order.
std::vector<std::string> default_ids();

/// Entry built from the prescribed spectrum (1+k^2)^{-beta/2}, |k| <= cutoff,
/// cosine-tapered to zero over one decade of k beyond the cutoff. Requires
/// beta > 1/2. In H^s for s < beta - 1/2 (as cutoff -> inf).
CatalogEntry spectral_probe(double beta, double cutoff = 50.0);

}  // namespace fracsob::catalog

#endif
