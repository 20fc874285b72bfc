#include "specnp/json_io.hpp"

#include "specnp/errors.hpp"

namespace specnp {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError("missing field " + where + "/" + key);
    }
    return j.at(key);
}

double number_at(const Json& j, const std::string& where) {
    if (!j.is_number()) throw InputError("expected a number at " + where);
    return j.get<double>();
}

}  // namespace

Json complex_to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) {
        throw InputError("expected [re, im] at " + where);
    }
    return Complex{number_at(j[0], where + "/0"), number_at(j[1], where + "/1")};
}

Json matrix_to_json(const Matrix& m) {
    Json data = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        data.push_back(std::move(row));
    }
    return Json{{"n", m.rows()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
    const auto n = require(j, "n", where).get<Eigen::Index>();
    if (n < 1) throw InputError("matrix dimension must be positive at " + where + "/n");
    const Json& data = require(j, "data", where);
    if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != n) {
        throw InputError("expected " + std::to_string(n) + " rows at " + where + "/data");
    }
    Matrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const Json& row = data[static_cast<std::size_t>(r)];
        const std::string row_where = where + "/data/" + std::to_string(r);
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            throw InputError("expected " + std::to_string(n) + " entries at " + row_where);
        }
        for (Eigen::Index c = 0; c < n; ++c) {
            m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)],
                                        row_where + "/" + std::to_string(c));
        }
    }
    return m;
}

Json poly_to_json(const ComplexPoly& p) {
    Json coeffs = Json::array();
    for (const Complex& c : p.coeffs()) coeffs.push_back(complex_to_json(c));
    return Json{{"coeffs", std::move(coeffs)}};
}

ComplexPoly poly_from_json(const Json& j, const std::string& where) {
    const Json& coeffs = require(j, "coeffs", where);
    if (!coeffs.is_array()) throw InputError("expected an array at " + where + "/coeffs");
    std::vector<Complex> out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out.push_back(complex_from_json(coeffs[i], where + "/coeffs/" + std::to_string(i)));
    }
    return ComplexPoly{std::move(out)};
}

Json sym_point_to_json(const SymPoint& x) {
    Json coords = Json::array();
    for (const Complex& c : x.coords) coords.push_back(complex_to_json(c));
    return Json{{"coords", std::move(coords)}};
}

SymPoint sym_point_from_json(const Json& j, const std::string& where) {
    const Json& coords = require(j, "coords", where);
    if (!coords.is_array() || coords.empty()) {
        throw InputError("expected a nonempty array at " + where + "/coords");
    }
    std::vector<Complex> out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out.push_back(complex_from_json(coords[i], where + "/coords/" + std::to_string(i)));
    }
    return SymPoint{std::move(out)};
}

Json blaschke_to_json(const BlaschkeProduct& b) {
    Json zeros = Json::array();
    for (const auto& z : b.zeros) {
        zeros.push_back(Json{{"a", complex_to_json(z.a)}, {"mult", z.mult}});
    }
    return Json{{"zeros", std::move(zeros)}, {"front", complex_to_json(b.front)}};
}

BlaschkeProduct blaschke_from_json(const Json& j, const std::string& where) {
    BlaschkeProduct b;
    const Json& zeros = require(j, "zeros", where);
    if (!zeros.is_array()) throw InputError("expected an array at " + where + "/zeros");
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        const std::string zw = where + "/zeros/" + std::to_string(i);
        const Complex a = complex_from_json(require(zeros[i], "a", zw), zw + "/a");
        const int mult = require(zeros[i], "mult", zw).get<int>();
        if (mult < 1) throw InputError("mult must be positive at " + zw + "/mult");
        if (std::abs(a) >= 1.0) throw InputError("zero outside the open disc at " + zw + "/a");
        b.zeros.push_back(BlaschkeZero{a, mult});
    }
    if (j.contains("front")) {
        b.front = complex_from_json(j.at("front"), where + "/front");
        if (std::abs(std::abs(b.front) - 1.0) > 1e-12) {
            throw InputError("front factor must be unimodular at " + where + "/front");
        }
    }
    return b;
}

Json holo_to_json(const HoloFunction& f) {
    if (const auto* p = f.get_if<HoloFunction::Poly>()) {
        Json j = poly_to_json(p->p);
        j["kind"] = "polynomial";
        return j;
    }
    if (const auto* r = f.get_if<HoloFunction::Rational>()) {
        return Json{{"kind", "rational"},
                    {"num", poly_to_json(r->num)},
                    {"den", poly_to_json(r->den)}};
    }
    if (const auto* b = f.get_if<HoloFunction::Blaschke>()) {
        Json j = blaschke_to_json(b->b);
        j["kind"] = "blaschke";
        return j;
    }
    const auto* t = f.get_if<HoloFunction::Table>();
    Json points = Json::array();
    for (const TablePoint& pt : t->points) {
        Json derivs = Json::array();
        for (const Complex& d : pt.derivatives) derivs.push_back(complex_to_json(d));
        points.push_back(
            Json{{"lambda", complex_to_json(pt.lambda)}, {"derivatives", std::move(derivs)}});
    }
    return Json{{"kind", "table"}, {"points", std::move(points)}};
}

HoloFunction holo_from_json(const Json& j, const std::string& where) {
    const std::string kind = require(j, "kind", where).get<std::string>();
    if (kind == "polynomial") {
        return HoloFunction::polynomial(poly_from_json(j, where));
    }
    if (kind == "rational") {
        return HoloFunction::rational(poly_from_json(require(j, "num", where), where + "/num"),
                                      poly_from_json(require(j, "den", where), where + "/den"));
    }
    if (kind == "blaschke") {
        return HoloFunction::blaschke(blaschke_from_json(j, where));
    }
    if (kind == "table") {
        const Json& points = require(j, "points", where);
        if (!points.is_array()) throw InputError("expected an array at " + where + "/points");
        std::vector<TablePoint> out;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const std::string pw = where + "/points/" + std::to_string(i);
            TablePoint pt;
            pt.lambda = complex_from_json(require(points[i], "lambda", pw), pw + "/lambda");
            const Json& derivs = require(points[i], "derivatives", pw);
            if (!derivs.is_array()) {
                throw InputError("expected an array at " + pw + "/derivatives");
            }
            for (std::size_t d = 0; d < derivs.size(); ++d) {
                pt.derivatives.push_back(
                    complex_from_json(derivs[d], pw + "/derivatives/" + std::to_string(d)));
            }
            out.push_back(std::move(pt));
        }
        return HoloFunction::table(std::move(out));
    }
    throw InputError("unknown function kind '" + kind + "' at " + where + "/kind");
}

Json dataset_to_json(const InterpolationData& data) {
    Json nodes = Json::array();
    for (const Complex& z : data.nodes) nodes.push_back(complex_to_json(z));
    Json targets = Json::array();
    for (const Matrix& w : data.targets) targets.push_back(matrix_to_json(w));
    return Json{{"nodes", std::move(nodes)}, {"targets", std::move(targets)}};
}

InterpolationData dataset_from_json(const Json& j, const std::string& where) {
    InterpolationData data;
    const Json& nodes = require(j, "nodes", where);
    if (!nodes.is_array()) throw InputError("expected an array at " + where + "/nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        data.nodes.push_back(complex_from_json(nodes[i], where + "/nodes/" + std::to_string(i)));
    }
    const Json& targets = require(j, "targets", where);
    if (!targets.is_array()) throw InputError("expected an array at " + where + "/targets");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        data.targets.push_back(
            matrix_from_json(targets[i], where + "/targets/" + std::to_string(i)));
    }
    return data;
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["status"] = (v.status == Status::Infeasible) ? "infeasible" : "inconclusive";
    Json witness;
    if (v.two_point) {
        witness["kind"] = "two_point";
        witness["lhs"] = v.two_point->lhs;
        witness["rhs"] = v.two_point->rhs;
        witness["side"] = v.two_point->side;
        witness["arg_max"] = complex_to_json(v.two_point->arg_max);
    }
    if (!v.three_point.empty()) {
        witness["kind"] = "three_point";
        witness["witness_k"] = v.witness_k;
        Json reports = Json::array();
        for (const ThreePointReport& r : v.three_point) {
            Json candidates = Json::array();
            for (const CandidateRecord& c : r.candidates) {
                candidates.push_back(Json{{"u", complex_to_json(c.u)},
                                          {"modulus", c.modulus},
                                          {"unimodular", c.unimodular},
                                          {"preimage_high_ok", c.preimage_high_ok},
                                          {"preimage_low_ok", c.preimage_low_ok}});
            }
            reports.push_back(Json{{"k", r.k},
                                   {"high", r.high},
                                   {"low", r.low},
                                   {"containment_high", r.containment_high},
                                   {"containment_low", r.containment_low},
                                   {"max_mod_high", r.max_mod_high},
                                   {"radius_high", r.radius_high},
                                   {"max_mod_low", r.max_mod_low},
                                   {"radius_low", r.radius_low},
                                   {"inequality_evaluated", r.inequality_evaluated},
                                   {"lhs", r.lhs},
                                   {"rhs", r.rhs},
                                   {"branch1", r.branch1},
                                   {"branch2", r.branch2},
                                   {"candidates", std::move(candidates)}});
        }
        witness["reports"] = std::move(reports);
    }
    j["witness"] = std::move(witness);
    return j;
}

Json spectral_data_to_json(const SpectralData& sd, bool full) {
    Json eigs = Json::array();
    for (const auto& e : sd.eigs) {
        eigs.push_back(Json{{"lambda", complex_to_json(e.lambda)},
                            {"alg_mult", e.alg_mult},
                            {"index", e.index}});
    }
    Json j{{"eigenvalues", std::move(eigs)}, {"source_norm", sd.source_norm}};
    if (full) {
        Json projections = Json::array();
        for (const Matrix& p : sd.projections) projections.push_back(matrix_to_json(p));
        j["projections"] = std::move(projections);
    }
    return j;
}

Json config_to_json(const Config& cfg) {
    return Json{{"cluster_tol", cfg.cluster_tol},
                {"rank_tol", cfg.rank_tol},
                {"verdict_margin", cfg.verdict_margin},
                {"pole_tol", cfg.pole_tol},
                {"eps_boundary", cfg.eps_boundary},
                {"node_tol", cfg.node_tol},
                {"path_tol", cfg.path_tol},
                {"schwarz_tol", cfg.schwarz_tol},
                {"tol_root", cfg.tol_root},
                {"dep_tol", cfg.dep_tol},
                {"ord_tol", cfg.ord_tol},
                {"zero_tol", cfg.zero_tol},
                {"oracle_max_n", cfg.oracle_max_n},
                {"grid_points", cfg.grid_points},
                {"max_dim", cfg.max_dim},
                {"seed", cfg.seed}};
}

Config config_from_json(const Json& j, const std::string& where) {
    Config cfg;
    if (!j.is_object()) throw InputError("expected a config object at " + where);
    auto load = [&](const char* key, auto& field) {
        if (j.contains(key)) {
            try {
                field = j.at(key).get<std::remove_reference_t<decltype(field)>>();
            } catch (const Json::exception&) {
                throw InputError(std::string("bad value at ") + where + "/" + key);
            }
        }
    };
    load("cluster_tol", cfg.cluster_tol);
    load("rank_tol", cfg.rank_tol);
    load("verdict_margin", cfg.verdict_margin);
    load("pole_tol", cfg.pole_tol);
    load("eps_boundary", cfg.eps_boundary);
    load("node_tol", cfg.node_tol);
    load("path_tol", cfg.path_tol);
    load("schwarz_tol", cfg.schwarz_tol);
    load("tol_root", cfg.tol_root);
    load("dep_tol", cfg.dep_tol);
    load("ord_tol", cfg.ord_tol);
    load("zero_tol", cfg.zero_tol);
    load("oracle_max_n", cfg.oracle_max_n);
    load("grid_points", cfg.grid_points);
    load("max_dim", cfg.max_dim);
    load("seed", cfg.seed);
    cfg.validate();
    return cfg;
}

Json schemas() {
    return Json{
        {"complex", "[re, im]"},
        {"polynomial", {{"coeffs", "[complex, ...] ascending degree"}}},
        {"sym_point", {{"coords", "[complex, ...]"}}},
        {"matrix", {{"n", "dimension"}, {"data", "n rows of n complex entries, row-major"}}},
        {"blaschke",
         {{"zeros", "[{a: complex, mult: positive int}, ...]"}, {"front", "unimodular complex"}}},
        {"function",
         {{"kind", "polynomial | rational | blaschke | table"},
          {"polynomial", "coeffs as in polynomial"},
          {"rational", "num, den as polynomial objects"},
          {"blaschke", "zeros, front as in blaschke"},
          {"table", "points: [{lambda: complex, derivatives: [complex, ...]}, ...]"}}},
        {"dataset", {{"nodes", "[complex, ...]"}, {"targets", "[matrix, ...]"}}},
        {"verdict",
         {{"status", "infeasible | inconclusive"},
          {"witness", "two_point: lhs/rhs/side/arg_max; three_point: per-k reports"}}},
        {"spectral_data",
         {{"eigenvalues", "[{lambda, alg_mult, index}, ...]"},
          {"source_norm", "Frobenius norm"},
          {"projections", "present with --full"}}},
        {"config", config_to_json(Config{})}};
}

}  // namespace specnp
