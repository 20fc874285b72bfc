#include <doctest.h>

#include "specnp/errors.hpp"
#include "specnp/json_io.hpp"
#include "support.hpp"

using namespace specnp;
using support::cnear;

namespace {
const Config cfg{};
}

TEST_CASE("matrix wire format round trip") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Matrix a = support::random_dense(n, rng);
        const Matrix back = matrix_from_json(matrix_to_json(a), "");
        CHECK((a - back).norm() == 0.0);
    }
    // shape of the serialized object
    const Json j = matrix_to_json(Matrix::Identity(2, 2));
    CHECK(j.at("n") == 2);
    CHECK(j.at("data").size() == 2);
    CHECK(j.at("data")[0][0] == Json::array({1.0, 0.0}));
}

TEST_CASE("polynomial and sym point round trips") {
    const ComplexPoly p{{Complex{1.0, -2.0}, Complex{0.0, 3.0}}};
    const ComplexPoly q = poly_from_json(poly_to_json(p), "");
    CHECK(q.coeffs() == p.coeffs());

    const SymPoint x{{Complex{3.0}, Complex{2.0}}};
    const SymPoint y = sym_point_from_json(sym_point_to_json(x), "");
    CHECK(y.coords == x.coords);
}

TEST_CASE("function wire format covers all kinds") {
    const HoloFunction p = HoloFunction::polynomial(ComplexPoly::monomial(2));
    CHECK(holo_to_json(p).at("kind") == "polynomial");

    const HoloFunction r = HoloFunction::rational(ComplexPoly::constant(Complex{1.0}),
                                                  ComplexPoly{{Complex{1.0}, Complex{-0.5}}});
    const HoloFunction r2 = holo_from_json(holo_to_json(r), "");
    CHECK(cnear(r2.value(Complex{0.3}, cfg), r.value(Complex{0.3}, cfg), 0.0));

    BlaschkeProduct b;
    b.zeros.push_back(BlaschkeZero{Complex{0.4, 0.1}, 2});
    const HoloFunction bf = HoloFunction::blaschke(b);
    const HoloFunction bf2 = holo_from_json(holo_to_json(bf), "");
    CHECK(cnear(bf2.value(Complex{0.2}, cfg), bf.value(Complex{0.2}, cfg), 0.0));

    const HoloFunction t =
        HoloFunction::table({TablePoint{Complex{0.5}, {Complex{1.0}, Complex{2.0}}}});
    const HoloFunction t2 = holo_from_json(holo_to_json(t), "");
    CHECK(cnear(t2.derivs(Complex{0.5}, 1, cfg)[1], Complex{2.0}, 0.0));

    CHECK_THROWS_AS(holo_from_json(Json{{"kind", "mystery"}}, ""), InputError);
}

TEST_CASE("dataset and verdict serialization") {
    InterpolationData data;
    data.nodes = {Complex{0.0}, Complex{0.5}};
    Matrix w1(1, 1), w2(1, 1);
    w1(0, 0) = Complex{0.0};
    w2(0, 0) = Complex{0.9};
    data.targets = {w1, w2};

    const InterpolationData back = dataset_from_json(dataset_to_json(data), "");
    CHECK(back.nodes == data.nodes);
    CHECK(back.targets.size() == 2);

    const Verdict v = check_two_point(data, cfg);
    const Json j = verdict_to_json(v);
    CHECK(j.at("status") == "infeasible");
    CHECK(j.at("witness").at("lhs").get<double>() == doctest::Approx(0.9));
    CHECK(j.at("witness").at("rhs").get<double>() == doctest::Approx(0.5));
}

TEST_CASE("malformed input carries a field pointer") {
    try {
        matrix_from_json(Json{{"n", 2}}, "/targets/0");
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("/targets/0/data") != std::string::npos);
    }
    try {
        dataset_from_json(Json{{"nodes", Json::array({Json::array({0.0, 0.0})})}}, "");
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("/targets") != std::string::npos);
    }
}

TEST_CASE("config round trip and validation") {
    Config base;
    base.cluster_tol = 1e-5;
    base.seed = 42;
    const Config back = config_from_json(config_to_json(base), "");
    CHECK(back.cluster_tol == 1e-5);
    CHECK(back.seed == 42);

    CHECK_THROWS_AS(config_from_json(Json{{"cluster_tol", 0.5}}, ""), ConfigError);
    CHECK_THROWS_AS(config_from_json(Json{{"cluster_tol", -1.0}}, ""), ConfigError);

    const Json s = schemas();
    CHECK(s.contains("matrix"));
    CHECK(s.contains("verdict"));
    CHECK(s.contains("config"));
}

TEST_CASE("spectral data serialization honors the full flag") {
    std::mt19937_64 rng(7);
    const Matrix a = support::random_dense(3, rng);
    const SpectralData sd = spectral_data(a, cfg);
    const Json lean = spectral_data_to_json(sd, false);
    CHECK_FALSE(lean.contains("projections"));
    CHECK(lean.at("eigenvalues").size() == sd.eigs.size());
    const Json full = spectral_data_to_json(sd, true);
    CHECK(full.at("projections").size() == sd.projections.size());
}
