#include "specnp/symprod.hpp"

#include <cmath>

#include "specnp/errors.hpp"

namespace specnp {

SymPoint induced_apply(const InducedMap& map, const SymPoint& x, const Config& cfg) {
    if (x.n() != map.n) throw DimensionMismatch("symmetric point dimension mismatch");
    const std::vector<Complex> rts = roots(poly_from_sym(x), cfg);
    std::vector<Complex> mapped;
    mapped.reserve(rts.size());
    for (const Complex& r : rts) {
        try {
            mapped.push_back(map.phi.value(r, cfg));
        } catch (const PoleOnSpectrum&) {
            throw DomainViolation("a root of the symmetric point escapes the map's domain");
        } catch (const PoleHit&) {
            throw DomainViolation("a root of the symmetric point escapes the map's domain");
        }
    }
    return symmetrize(mapped);
}

CheckReport companion_roundtrip_check(const SymPoint& x, const Config& cfg) {
    const SymPoint back = char_coords(companion(x), cfg);
    CheckReport report;
    for (int j = 0; j < x.n(); ++j) {
        report.max_dev = std::max(report.max_dev,
                                  std::abs(back.coords[static_cast<std::size_t>(j)] -
                                           x.coords[static_cast<std::size_t>(j)]));
    }
    report.passed = report.max_dev <= 1e-10;
    return report;
}

}  // namespace specnp
