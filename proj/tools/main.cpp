#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "selftest.hpp"
#include "specnp/errors.hpp"
#include "specnp/json_io.hpp"
#include "specnp/testgen.hpp"

namespace {

using specnp::Complex;
using specnp::Config;
using specnp::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitInfeasible = 3;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw specnp::InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw specnp::InputError("malformed JSON in " + path + ": " + e.what());
    }
}

void emit(const Json& j) {
    std::cout << j.dump(2) << "\n";
}

struct ToleranceFlags {
    std::optional<double> cluster_tol, rank_tol, verdict_margin, pole_tol, eps_boundary, node_tol,
        path_tol, schwarz_tol, tol_root, dep_tol, ord_tol, zero_tol;
    std::optional<int> oracle_max_n, grid_points;
    std::optional<std::uint64_t> seed;

    void add_to(CLI::App& app) {
        app.add_option("--cluster-tol", cluster_tol, "eigenvalue clustering radius, relative");
        app.add_option("--rank-tol", rank_tol, "numerical rank threshold, relative");
        app.add_option("--verdict-margin", verdict_margin, "slack on feasibility inequalities");
        app.add_option("--pole-tol", pole_tol, "minimum distance to a denominator zero");
        app.add_option("--eps-boundary", eps_boundary, "rejection band inside the unit circle");
        app.add_option("--node-tol", node_tol, "minimum pairwise node distance");
        app.add_option("--path-tol", path_tol, "isospectral path slack");
        app.add_option("--schwarz-tol", schwarz_tol, "slack in the Schwarz bound");
        app.add_option("--tol-root", tol_root, "root residual bound");
        app.add_option("--dep-tol", dep_tol, "Krylov dependence residual bound");
        app.add_option("--ord-tol", ord_tol, "vanishing-order threshold, relative");
        app.add_option("--zero-tol", zero_tol, "coefficient-is-zero threshold, relative");
        app.add_option("--oracle-max-n", oracle_max_n, "oracle dimension cap");
        app.add_option("--grid-points", grid_points, "samples per contour");
        app.add_option("--seed", seed, "random seed");
    }

    // precedence: flag > config file > default
    Config resolve(const std::optional<std::string>& config_path) const {
        Config cfg;
        if (config_path) cfg = specnp::config_from_json(load_json(*config_path), "/config");
        auto apply = [](auto& field, const auto& flag) {
            if (flag) field = *flag;
        };
        apply(cfg.cluster_tol, cluster_tol);
        apply(cfg.rank_tol, rank_tol);
        apply(cfg.verdict_margin, verdict_margin);
        apply(cfg.pole_tol, pole_tol);
        apply(cfg.eps_boundary, eps_boundary);
        apply(cfg.node_tol, node_tol);
        apply(cfg.path_tol, path_tol);
        apply(cfg.schwarz_tol, schwarz_tol);
        apply(cfg.tol_root, tol_root);
        apply(cfg.dep_tol, dep_tol);
        apply(cfg.ord_tol, ord_tol);
        apply(cfg.zero_tol, zero_tol);
        apply(cfg.oracle_max_n, oracle_max_n);
        apply(cfg.grid_points, grid_points);
        apply(cfg.seed, seed);
        cfg.validate();
        return cfg;
    }
};

int run(int argc, char** argv) {
    CLI::App app{"spectral interpolation toolkit"};
    app.require_subcommand(0, 1);
    app.fallthrough();  // global flags may follow the subcommand

    std::optional<std::string> config_path;
    bool verbose = false;
    bool show_schema = false;
    app.add_option("--config", config_path, "JSON config file");
    app.add_flag("--verbose", verbose, "human-readable summary on stderr");
    app.add_flag("--schema", show_schema, "print all wire schemas and exit");

    ToleranceFlags tolerances;
    tolerances.add_to(app);

    std::string input_path, matrix_path, function_path;
    bool full = false;

    CLI::App* check2 = app.add_subcommand("check2", "two-point necessary condition");
    check2->add_option("--input", input_path, "dataset JSON (2 nodes)")->required();

    CLI::App* check3 = app.add_subcommand("check3", "three-point necessary condition");
    check3->add_option("--input", input_path, "dataset JSON (3 nodes)")->required();

    CLI::App* minpoly = app.add_subcommand("minpoly", "minimal polynomial, predicted and oracle");
    minpoly->add_option("--matrix", matrix_path, "matrix JSON")->required();
    minpoly->add_option("--function", function_path, "function JSON (predict for f(A))");

    CLI::App* funcalc = app.add_subcommand("funcalc", "evaluate f(A)");
    funcalc->add_option("--matrix", matrix_path, "matrix JSON")->required();
    funcalc->add_option("--function", function_path, "function JSON")->required();

    CLI::App* spectra = app.add_subcommand("spectra", "clustered eigenstructure");
    spectra->add_option("--matrix", matrix_path, "matrix JSON")->required();
    spectra->add_flag("--full", full, "include spectral projections");

    CLI::App* homotopy = app.add_subcommand("homotopy", "isospectral path deviation profile");
    homotopy->add_option("--matrix", matrix_path, "matrix JSON")->required();

    CLI::App* symmap = app.add_subcommand("symmap", "induced map on a symmetric point");
    symmap->add_option("--input", input_path, "JSON with {point, function}")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return kExitOk;  // --help
        emit(Json{{"error", {{"kind", "input"}, {"message", e.what()}}}});
        return kExitInput;
    }

    if (show_schema) {
        emit(specnp::schemas());
        return kExitOk;
    }
    if (app.get_subcommands().empty()) {
        emit(Json{{"error", {{"kind", "input"}, {"message", "no subcommand given"}}}});
        return kExitInput;
    }

    const Config cfg = tolerances.resolve(config_path);

    if (check2->parsed() || check3->parsed()) {
        const specnp::InterpolationData data =
            specnp::dataset_from_json(load_json(input_path), "");
        const specnp::Verdict verdict =
            check2->parsed() ? specnp::check_two_point(data, cfg)
                             : specnp::check_three_point(data, cfg);
        emit(specnp::verdict_to_json(verdict));
        if (verbose) {
            std::cerr << (verdict.status == specnp::Status::Infeasible
                              ? "refuted: no interpolant exists\n"
                              : "inconclusive: the necessary condition holds\n");
        }
        return verdict.status == specnp::Status::Infeasible ? kExitInfeasible : kExitOk;
    }

    if (minpoly->parsed()) {
        const specnp::Matrix a = specnp::matrix_from_json(load_json(matrix_path), "");
        Json out;
        if (!function_path.empty()) {
            const specnp::HoloFunction f =
                specnp::holo_from_json(load_json(function_path), "");
            const auto prediction = specnp::predicted_minpoly(f, a, cfg);
            const specnp::Matrix fa = specnp::apply(f, a, cfg);
            out["predicted"] = specnp::poly_to_json(prediction.poly);
            out["locally_constant"] = prediction.locally_constant;
            out["oracle"] = specnp::poly_to_json(specnp::minimal_polynomial_oracle(fa, cfg));
        } else {
            out["minimal_polynomial"] =
                specnp::poly_to_json(specnp::minimal_polynomial(a, cfg));
            out["oracle"] = specnp::poly_to_json(specnp::minimal_polynomial_oracle(a, cfg));
        }
        emit(out);
        return kExitOk;
    }

    if (funcalc->parsed()) {
        const specnp::Matrix a = specnp::matrix_from_json(load_json(matrix_path), "");
        const specnp::HoloFunction f = specnp::holo_from_json(load_json(function_path), "");
        emit(specnp::matrix_to_json(specnp::apply(f, a, cfg)));
        return kExitOk;
    }

    if (spectra->parsed()) {
        const specnp::Matrix a = specnp::matrix_from_json(load_json(matrix_path), "");
        emit(specnp::spectral_data_to_json(specnp::spectral_data(a, cfg, full), full));
        return kExitOk;
    }

    if (homotopy->parsed()) {
        const specnp::Matrix a = specnp::matrix_from_json(load_json(matrix_path), "");
        const specnp::IsospectralPath path = specnp::isospectral_path(a, cfg);
        const specnp::SymPoint base = specnp::char_coords(a, cfg);
        const int n = static_cast<int>(a.rows());

        Json samples = Json::array();
        double max_dev = 0.0;
        auto probe = [&](Complex zeta) {
            const specnp::SymPoint got = specnp::char_coords(path.eval(zeta), cfg);
            Json devs = Json::array();
            double here = 0.0;
            for (int j = 0; j < n; ++j) {
                const double d = std::abs(got.coords[static_cast<std::size_t>(j)] -
                                          base.coords[static_cast<std::size_t>(j)]);
                devs.push_back(d);
                here = std::max(here, d);
            }
            max_dev = std::max(max_dev, here);
            samples.push_back(
                Json{{"zeta", specnp::complex_to_json(zeta)}, {"deviation", std::move(devs)}});
        };
        const int g = std::max(2, cfg.grid_points);
        for (int i = 0; i < g; ++i) probe(Complex{static_cast<double>(i) / (g - 1)});
        for (int i = 0; i < g; ++i) probe(std::polar(1.0, 2.0 * M_PI * i / g));
        for (int i = 0; i < g; ++i) probe(std::polar(2.0, 2.0 * M_PI * i / g));
        emit(Json{{"samples", std::move(samples)}, {"max_deviation", max_dev}});
        if (verbose) std::cerr << "max characteristic deviation " << max_dev << "\n";
        return kExitOk;
    }

    if (symmap->parsed()) {
        const Json in = load_json(input_path);
        const specnp::SymPoint x =
            specnp::sym_point_from_json(in.contains("point") ? in.at("point") : in, "/point");
        if (!in.contains("function")) throw specnp::InputError("missing field /function");
        const specnp::HoloFunction phi = specnp::holo_from_json(in.at("function"), "/function");
        const specnp::SymPoint y =
            specnp::induced_apply(specnp::InducedMap{phi, x.n()}, x, cfg);
        emit(specnp::sym_point_to_json(y));
        return kExitOk;
    }

    if (selftest->parsed()) {
        Json out;
        const int failed = specnp::run_selftest(cfg, out);
        emit(out);
        if (verbose) std::cerr << (failed == 0 ? "selftest ok\n" : "selftest FAILED\n");
        return failed == 0 ? kExitOk : kExitNumerical;
    }

    emit(Json{{"error", {{"kind", "input"}, {"message", "no subcommand given"}}}});
    return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const specnp::InputError& e) {
        emit(Json{{"error", {{"kind", "input"}, {"message", e.what()}}}});
        return kExitInput;
    } catch (const specnp::Error& e) {
        emit(Json{{"error", {{"kind", "numerical"}, {"message", e.what()}}}});
        return kExitNumerical;
    } catch (const std::exception& e) {
        emit(Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}});
        return kExitNumerical;
    }
}
