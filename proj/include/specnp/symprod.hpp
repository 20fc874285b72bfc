#pragma once

#include "specnp/funcalc.hpp"

namespace specnp {

/// A scalar self-map together with the dimension of the symmetrized product
/// it acts on: X -> symmetrize(phi(roots of poly_from_sym(X))).
struct InducedMap {
    HoloFunction phi;
    int n;
};

/// Root-wise action of the induced map. Throws DomainViolation when phi
/// cannot be evaluated at one of the roots.
SymPoint induced_apply(const InducedMap& map, const SymPoint& x, const Config& cfg);

struct CheckReport {
    bool passed = true;
    double max_dev = 0.0;
};

/// Verifies char_coords(companion(x)) == x componentwise within 1e-10.
CheckReport companion_roundtrip_check(const SymPoint& x, const Config& cfg);

}  // namespace specnp
