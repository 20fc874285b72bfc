#pragma once

#include <cstdint>

namespace specnp {

/// Tolerances and knobs used across the library. A Config is passed
/// explicitly to every operation that needs one; there are no globals.
struct Config {
    double cluster_tol    = 1e-8;   // eigenvalue clustering radius, relative to max(1, source norm)
    double rank_tol       = 1e-10;  // numerical-rank threshold, relative to the largest singular value
    double verdict_margin = 1e-7;   // absolute slack on feasibility inequalities
    double pole_tol       = 1e-8;   // minimum allowed distance from a denominator zero
    double eps_boundary   = 1e-9;   // rejection band inside the unit circle
    double node_tol       = 1e-8;   // minimum pairwise distance between interpolation nodes
    double path_tol       = 1e-7;   // isospectral-path verification slack
    double schwarz_tol    = 1e-8;   // slack in rho(F(zeta)) <= |zeta|
    double tol_root       = 1e-8;   // polynomial root residual bound
    double dep_tol        = 1e-7;   // Krylov linear-dependence residual bound
    double ord_tol        = 1e-8;   // vanishing-order detection threshold, relative
    double zero_tol       = 1e-9;   // coefficient-is-zero threshold, relative

    int oracle_max_n = 12;          // size cap for the brute-force minimal-polynomial oracle
    int grid_points  = 64;          // samples per contour in path checks
    int max_dim      = 64;          // hard cap on matrix dimension

    std::uint64_t seed = 0;

    /// Throws ConfigError unless every tolerance lies in (0, 1e-2) and the
    /// integer knobs are positive.
    void validate() const;
};

}  // namespace specnp
