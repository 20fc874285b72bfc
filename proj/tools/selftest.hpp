#pragma once

#include "specnp/json_io.hpp"

namespace specnp {

/// Condensed invariant sweep across every module: round trips, projection
/// axioms, functional-calculus algebra, minimal-polynomial prediction against
/// the brute-force oracle, checker soundness on feasible data, Schwarz bounds
/// and the isospectral path. Returns the number of failed groups and fills
/// `out` with per-group results.
int run_selftest(const Config& cfg, Json& out);

}  // namespace specnp
