#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specnp/errors.hpp"
#include "specnp/json_io.hpp"
#include "specnp/testgen.hpp"

namespace py = pybind11;
using namespace specnp;

namespace {

py::object json_to_py(const Json& j) {
    const py::module_ json_mod = py::module_::import("json");
    return json_mod.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "matrix functional calculus and spectral interpolation checks";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<Config>(m, "Config")
        .def(py::init<>())
        .def_readwrite("cluster_tol", &Config::cluster_tol)
        .def_readwrite("rank_tol", &Config::rank_tol)
        .def_readwrite("verdict_margin", &Config::verdict_margin)
        .def_readwrite("pole_tol", &Config::pole_tol)
        .def_readwrite("eps_boundary", &Config::eps_boundary)
        .def_readwrite("node_tol", &Config::node_tol)
        .def_readwrite("path_tol", &Config::path_tol)
        .def_readwrite("schwarz_tol", &Config::schwarz_tol)
        .def_readwrite("tol_root", &Config::tol_root)
        .def_readwrite("dep_tol", &Config::dep_tol)
        .def_readwrite("ord_tol", &Config::ord_tol)
        .def_readwrite("zero_tol", &Config::zero_tol)
        .def_readwrite("oracle_max_n", &Config::oracle_max_n)
        .def_readwrite("grid_points", &Config::grid_points)
        .def_readwrite("max_dim", &Config::max_dim)
        .def_readwrite("seed", &Config::seed)
        .def("validate", &Config::validate);

    py::class_<ComplexPoly>(m, "ComplexPoly")
        .def(py::init<std::vector<Complex>>())
        .def_static("from_roots",
                    [](const std::vector<Complex>& r) { return ComplexPoly::from_roots(r); })
        .def_property_readonly("coeffs", &ComplexPoly::coeffs)
        .def("degree", &ComplexPoly::degree)
        .def("eval", py::overload_cast<Complex>(&ComplexPoly::eval, py::const_))
        .def("derivative", &ComplexPoly::derivative, py::arg("order") = 1)
        .def("monic", &ComplexPoly::monic, py::arg("rel_tol") = 0.0)
        .def("__repr__", [](const ComplexPoly& p) { return poly_to_json(p).dump(); });

    py::class_<SymPoint>(m, "SymPoint")
        .def(py::init([](std::vector<Complex> coords) { return SymPoint{std::move(coords)}; }))
        .def_readonly("coords", &SymPoint::coords);

    m.def("symmetrize", [](const std::vector<Complex>& z) { return symmetrize(z); });
    m.def("poly_from_sym", &poly_from_sym);
    m.def("roots", [](const ComplexPoly& p, const Config& cfg) { return roots(p, cfg); },
          py::arg("p"), py::arg("cfg") = Config{});

    py::class_<EigenvalueInfo>(m, "EigenvalueInfo")
        .def_readonly("lambda_", &EigenvalueInfo::lambda)
        .def_readonly("alg_mult", &EigenvalueInfo::alg_mult)
        .def_readonly("index", &EigenvalueInfo::index);

    py::class_<SpectralData>(m, "SpectralData")
        .def_readonly("eigs", &SpectralData::eigs)
        .def_readonly("projections", &SpectralData::projections)
        .def_readonly("source_norm", &SpectralData::source_norm)
        .def("dim", &SpectralData::dim)
        .def("total_index", &SpectralData::total_index);

    m.def("eigenvalues", &eigenvalues, py::arg("a"), py::arg("cfg") = Config{});
    m.def("spectral_data", &spectral_data, py::arg("a"), py::arg("cfg") = Config{},
          py::arg("with_projections") = true);
    m.def("eigenvalue_index", &eigenvalue_index, py::arg("a"), py::arg("lambda_"),
          py::arg("cfg") = Config{});
    m.def("minimal_polynomial", &minimal_polynomial, py::arg("a"), py::arg("cfg") = Config{});
    m.def("minimal_polynomial_oracle", &minimal_polynomial_oracle, py::arg("a"),
          py::arg("cfg") = Config{});
    m.def("char_coords", &char_coords, py::arg("a"), py::arg("cfg") = Config{});
    m.def("companion", &companion);
    m.def("spectral_radius", &spectral_radius, py::arg("a"), py::arg("cfg") = Config{});

    py::class_<BlaschkeZero>(m, "BlaschkeZero")
        .def(py::init([](Complex a, int mult) { return BlaschkeZero{a, mult}; }), py::arg("a"),
             py::arg("mult") = 1)
        .def_readonly("a", &BlaschkeZero::a)
        .def_readonly("mult", &BlaschkeZero::mult);

    py::class_<BlaschkeProduct>(m, "BlaschkeProduct")
        .def(py::init([](std::vector<BlaschkeZero> zeros, Complex front) {
                 return BlaschkeProduct{std::move(zeros), front};
             }),
             py::arg("zeros"), py::arg("front") = Complex{1.0, 0.0})
        .def_readonly("zeros", &BlaschkeProduct::zeros)
        .def_readonly("front", &BlaschkeProduct::front)
        .def("degree", &BlaschkeProduct::degree);

    m.def("mobius_distance", &mobius_distance);
    m.def("minimal_blaschke",
          [](const Matrix& w, const Config& cfg) { return minimal_blaschke(w, cfg); },
          py::arg("w"), py::arg("cfg") = Config{});
    m.def("blaschke_eval", &blaschke_eval, py::arg("b"), py::arg("t"), py::arg("cfg") = Config{});
    m.def("blaschke_preimage", &blaschke_preimage, py::arg("b"), py::arg("w"),
          py::arg("cfg") = Config{});
    m.def(
        "caratheodory_extremal_disc",
        [](Complex lambda, Complex z, const Config& cfg) {
            const CaratheodoryExtremal e = caratheodory_extremal_disc(lambda, z, cfg);
            return py::make_tuple(py::cpp_function([e](Complex zeta) { return e(zeta); }),
                                  e.value);
        },
        py::arg("lambda_"), py::arg("z"), py::arg("cfg") = Config{});

    py::class_<TablePoint>(m, "TablePoint")
        .def(py::init([](Complex lambda, std::vector<Complex> derivatives) {
                 return TablePoint{lambda, std::move(derivatives)};
             }),
             py::arg("lambda_"), py::arg("derivatives"));

    py::class_<HoloFunction>(m, "HoloFunction")
        .def_static("polynomial", &HoloFunction::polynomial)
        .def_static("rational", &HoloFunction::rational)
        .def_static("blaschke", &HoloFunction::blaschke)
        .def_static("table", &HoloFunction::table)
        .def_static("identity", &HoloFunction::identity)
        .def("value", &HoloFunction::value, py::arg("lambda_"), py::arg("cfg") = Config{})
        .def("derivs", &HoloFunction::derivs, py::arg("lambda_"), py::arg("j_max"),
             py::arg("cfg") = Config{})
        .def("derivative", &HoloFunction::derivative)
        .def_property_readonly("kind", &HoloFunction::kind_name);

    m.def("product", &product);
    m.def("lincomb", &lincomb);
    m.def("apply",
          [](const HoloFunction& f, const Matrix& a, const Config& cfg) {
              return apply(f, a, cfg);
          },
          py::arg("f"), py::arg("a"), py::arg("cfg") = Config{});
    m.def("ord_of_vanishing", &ord_of_vanishing, py::arg("f"), py::arg("lambda_"), py::arg("cap"),
          py::arg("cfg") = Config{});
    m.def(
        "predicted_minpoly",
        [](const HoloFunction& f, const Matrix& a, const Config& cfg) {
            const MinpolyPrediction p = predicted_minpoly(f, a, cfg);
            return py::make_tuple(p.poly, p.locally_constant);
        },
        py::arg("f"), py::arg("a"), py::arg("cfg") = Config{});
    m.def(
        "lincomb_nilpotent_minpoly",
        [](const std::vector<Complex>& alphas, const Config& cfg) {
            return lincomb_nilpotent_minpoly(alphas, cfg);
        },
        py::arg("alphas"), py::arg("cfg") = Config{});

    py::class_<InterpolationData>(m, "InterpolationData")
        .def(py::init([](std::vector<Complex> nodes, std::vector<Matrix> targets) {
                 return InterpolationData{std::move(nodes), std::move(targets)};
             }),
             py::arg("nodes"), py::arg("targets"))
        .def_readonly("nodes", &InterpolationData::nodes)
        .def_readonly("targets", &InterpolationData::targets)
        .def("validate", &InterpolationData::validate);

    py::class_<Verdict>(m, "Verdict")
        .def_property_readonly("status",
                               [](const Verdict& v) {
                                   return v.status == Status::Infeasible ? "infeasible"
                                                                         : "inconclusive";
                               })
        .def_property_readonly("witness_k", [](const Verdict& v) { return v.witness_k; })
        .def("to_dict", [](const Verdict& v) { return json_to_py(verdict_to_json(v)); });

    m.def("check_two_point", &check_two_point, py::arg("data"), py::arg("cfg") = Config{});
    m.def("check_three_point", &check_three_point, py::arg("data"), py::arg("cfg") = Config{});
    m.def("q_exponent", &q_exponent, py::arg("nu"), py::arg("j"), py::arg("k"), py::arg("data"),
          py::arg("cfg") = Config{});
    m.def(
        "schwarz_check",
        [](const std::function<Matrix(Complex)>& disc_map, const std::vector<Complex>& samples,
           const Config& cfg) {
            const SchwarzReport r = schwarz_check(disc_map, samples, cfg);
            return py::make_tuple(r.passed, r.samples, r.max_excess);
        },
        py::arg("disc_map"), py::arg("samples"), py::arg("cfg") = Config{});
    m.def(
        "random_feasible_dataset",
        [](std::uint64_t seed, int n, int big_n, double margin, const Config& cfg) {
            FeasibleDataset d = random_feasible_dataset(seed, n, big_n, margin, cfg);
            return py::make_tuple(d.data, py::cpp_function(d.generator));
        },
        py::arg("seed"), py::arg("n"), py::arg("big_n"), py::arg("margin"),
        py::arg("cfg") = Config{});

    py::class_<SchurResult>(m, "SchurResult")
        .def_readonly("q", &SchurResult::q)
        .def_readonly("t", &SchurResult::t);

    py::class_<IsospectralPath>(m, "IsospectralPath")
        .def_readonly("d", &IsospectralPath::d)
        .def_readonly("u", &IsospectralPath::u)
        .def_readonly("c", &IsospectralPath::c)
        .def("eval", &IsospectralPath::eval);

    m.def("schur_decompose", &schur_decompose, py::arg("a"), py::arg("cfg") = Config{});
    m.def("matrix_exp", &matrix_exp);
    m.def("matrix_log_unitary", &matrix_log_unitary, py::arg("q"), py::arg("cfg") = Config{});
    m.def("isospectral_path", &isospectral_path, py::arg("a"), py::arg("cfg") = Config{});

    py::class_<InducedMap>(m, "InducedMap")
        .def(py::init([](HoloFunction phi, int n) { return InducedMap{std::move(phi), n}; }),
             py::arg("phi"), py::arg("n"));
    m.def("induced_apply", &induced_apply, py::arg("map"), py::arg("x"),
          py::arg("cfg") = Config{});
    m.def(
        "companion_roundtrip_check",
        [](const SymPoint& x, const Config& cfg) {
            const CheckReport r = companion_roundtrip_check(x, cfg);
            return py::make_tuple(r.passed, r.max_dev);
        },
        py::arg("x"), py::arg("cfg") = Config{});

    m.def("schemas", []() { return json_to_py(schemas()); });
}
