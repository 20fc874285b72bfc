#include "specnp/config.hpp"

#include <string>

#include "specnp/errors.hpp"

namespace specnp {

void Config::validate() const {
    const auto check = [](double v, const char* name) {
        if (!(v > 0.0 && v < 1e-2)) {
            throw ConfigError(std::string(name) + " must lie in (0, 1e-2)");
        }
    };
    check(cluster_tol, "cluster_tol");
    check(rank_tol, "rank_tol");
    check(verdict_margin, "verdict_margin");
    check(pole_tol, "pole_tol");
    check(eps_boundary, "eps_boundary");
    check(node_tol, "node_tol");
    check(path_tol, "path_tol");
    check(schwarz_tol, "schwarz_tol");
    check(tol_root, "tol_root");
    check(dep_tol, "dep_tol");
    check(ord_tol, "ord_tol");
    check(zero_tol, "zero_tol");
    if (oracle_max_n < 1) throw ConfigError("oracle_max_n must be positive");
    if (grid_points < 1) throw ConfigError("grid_points must be positive");
    if (max_dim < 1) throw ConfigError("max_dim must be positive");
}

}  // namespace specnp
