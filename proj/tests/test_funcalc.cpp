#include <doctest.h>

#include "specnp/errors.hpp"
#include "specnp/funcalc.hpp"
#include "support.hpp"

using namespace specnp;
using support::cnear;
using support::jordan_block;

namespace {
const Config cfg{};
const Config jcfg = gen::jordan_tolerances(cfg);
}  // namespace

TEST_CASE("apply reproduces fixed cases") {
    std::mt19937_64 rng(2);
    SUBCASE("identity function returns the matrix") {
        for (int trial = 0; trial < 10; ++trial) {
            const Matrix a = support::random_dense(2 + static_cast<int>(rng() % 5), rng);
            const Matrix fa = apply(HoloFunction::identity(), a, cfg);
            CHECK((fa - a).norm() <= 1e-9 * std::max(1.0, a.norm()));
        }
    }
    SUBCASE("square flattens a nilpotent 2-block") {
        const Matrix fa =
            apply(HoloFunction::polynomial(ComplexPoly::monomial(2)), jordan_block(Complex{0.0}, 2),
                  cfg);
        CHECK(fa.norm() <= 1e-12);
    }
    SUBCASE("table function on a Jordan 2-block fills in the derivative") {
        const Complex lambda{0.3, -0.2};
        const Complex f0{1.5, 0.25}, f1{-0.7, 2.0};
        const HoloFunction f = HoloFunction::table({TablePoint{lambda, {f0, f1}}});
        const Matrix fa = apply(f, jordan_block(lambda, 2), cfg);
        CHECK(cnear(fa(0, 0), f0, 1e-12));
        CHECK(cnear(fa(0, 1), f1, 1e-12));
        CHECK(cnear(fa(1, 0), Complex{0.0}, 1e-12));
        CHECK(cnear(fa(1, 1), f0, 1e-12));
    }
}

TEST_CASE("apply error surface") {
    const Complex lambda{0.3, -0.2};
    const HoloFunction too_short = HoloFunction::table({TablePoint{lambda, {Complex{1.0}}}});
    CHECK_THROWS_AS(apply(too_short, jordan_block(lambda, 2), cfg), InsufficientDerivatives);

    // 1/(t - 0.5) with 0.5 in the spectrum
    const HoloFunction pole = HoloFunction::rational(
        ComplexPoly::constant(Complex{1.0}), ComplexPoly{{Complex{-0.5}, Complex{1.0}}});
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = Complex{0.5};
    d(1, 1) = Complex{0.25};
    CHECK_THROWS_AS(apply(pole, d, cfg), PoleOnSpectrum);

    const HoloFunction unknown = HoloFunction::table({TablePoint{Complex{0.9}, {Complex{1.0}}}});
    CHECK_THROWS_AS(apply(unknown, d, cfg), DomainViolation);
}

TEST_CASE("rational derivatives via series division") {
    // f = 1/(1 - t): f^(j)(0) = j!
    const HoloFunction f = HoloFunction::rational(ComplexPoly::constant(Complex{1.0}),
                                                  ComplexPoly{{Complex{1.0}, Complex{-1.0}}});
    const auto d = f.derivs(Complex{0.0}, 4, cfg);
    CHECK(cnear(d[0], Complex{1.0}, 1e-14));
    CHECK(cnear(d[1], Complex{1.0}, 1e-14));
    CHECK(cnear(d[2], Complex{2.0}, 1e-14));
    CHECK(cnear(d[3], Complex{6.0}, 1e-13));
    CHECK(cnear(d[4], Complex{24.0}, 1e-12));
}

TEST_CASE("ord_of_vanishing structural cases") {
    const HoloFunction sq = HoloFunction::polynomial(ComplexPoly::monomial(2));
    CHECK(ord_of_vanishing(sq, Complex{0.0}, 5, cfg) == 2);
    CHECK(ord_of_vanishing(sq, Complex{1.0}, 5, cfg) == 0);

    BlaschkeProduct b;
    b.zeros.push_back(BlaschkeZero{Complex{0.4, 0.1}, 2});
    const HoloFunction f = HoloFunction::blaschke(b);
    CHECK(ord_of_vanishing(f, Complex{0.4, 0.1}, 5, cfg) == 2);
    CHECK(ord_of_vanishing(f.derivative(), Complex{0.4, 0.1}, 5, cfg) == 1);

    // identically zero derivative reports the cap
    const HoloFunction c = HoloFunction::polynomial(ComplexPoly::constant(Complex{3.0}));
    CHECK(ord_of_vanishing(c.derivative(), Complex{0.0}, 7, cfg) == 7);

    const HoloFunction table = HoloFunction::table(
        {TablePoint{Complex{0.0}, {Complex{0.0}, Complex{1e-12}, Complex{2.0}}}});
    CHECK(ord_of_vanishing(table, Complex{0.0}, 5, cfg) == 2);
}

TEST_CASE("predicted minimal polynomial on worked examples") {
    const HoloFunction sq = HoloFunction::polynomial(ComplexPoly::monomial(2));
    SUBCASE("J_3(0) under the square") {
        const auto p = predicted_minpoly(sq, jordan_block(Complex{0.0}, 3), cfg);
        CHECK_FALSE(p.locally_constant);
        CHECK(p.poly.degree() == 2);  // m=3, ord f'=1 at 0: floor(2/2)+1 = 2
        CHECK(gen::multiset_match_distance(roots(p.poly, cfg), {Complex{0.0}, Complex{0.0}}) <
              1e-9);
    }
    SUBCASE("J_2(0) + [1] under the square") {
        const Matrix a = gen::jordan_matrix(
            {gen::JordanSpec{Complex{0.0}, {2}}, gen::JordanSpec{Complex{1.0}, {1}}});
        const auto p = predicted_minpoly(sq, a, cfg);
        CHECK(p.poly.degree() == 2);  // t (t - 1)
        CHECK(gen::multiset_match_distance(roots(p.poly, cfg), {Complex{0.0}, Complex{1.0}}) <
              1e-9);
    }
    SUBCASE("diagonalizable input gives a squarefree product") {
        std::mt19937_64 rng(17);
        Matrix d = Matrix::Zero(4, 4);
        const auto pts = support::separated_disc_points(4, rng, 0.3);
        for (int i = 0; i < 4; ++i) d(i, i) = pts[i];
        const auto p = predicted_minpoly(sq, d, cfg);
        CHECK(p.poly.degree() == 4);
    }
    SUBCASE("constant function flags the degenerate branch") {
        const HoloFunction c = HoloFunction::polynomial(ComplexPoly::constant(Complex{0.25}));
        const auto p = predicted_minpoly(c, jordan_block(Complex{0.3}, 3), cfg);
        CHECK(p.locally_constant);
        CHECK(p.poly.degree() == 1);
        CHECK(cnear(roots(p.poly, cfg)[0], Complex{0.25}, 1e-12));
    }
}

TEST_CASE("predictor agrees with the oracle across randomized trials") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 120; ++trial) {
        const auto [a, f] = gen::random_funcalc_trial(rng, cfg);
        const Matrix fa = apply(f, a, jcfg);
        const ComplexPoly predicted = predicted_minpoly(f, a, jcfg).poly;
        const ComplexPoly oracle = minimal_polynomial_oracle(fa, jcfg);
        REQUIRE(predicted.degree() == oracle.degree());
        if (predicted.degree() >= 1) {
            const auto pr = gen::cluster_points(roots(predicted, cfg), 5e-3);
            const auto qr = gen::cluster_points(roots(oracle, cfg), 5e-3);
            CHECK(gen::weighted_match_distance(pr, qr) <= 1e-6);
        }
    }
}

TEST_CASE("nilpotent linear combination") {
    SUBCASE("fixed cases") {
        const auto p1 =
            lincomb_nilpotent_minpoly(std::vector<Complex>{Complex{2.0}, Complex{0.0}}, cfg);
        CHECK(p1.degree() == 1);  // (t - 2)
        CHECK(cnear(p1.eval(Complex{2.0}), Complex{0.0}, 1e-14));

        const auto p2 = lincomb_nilpotent_minpoly(
            std::vector<Complex>{Complex{5.0}, Complex{0.0}, Complex{1.0}}, cfg);
        CHECK(p2.degree() == 2);  // (t - 5)^2: l = 2, floor(2/2)+1
        CHECK(cnear(p2.eval(Complex{5.0}), Complex{0.0}, 1e-12));

        const auto p3 = lincomb_nilpotent_minpoly(
            std::vector<Complex>{Complex{0.0}, Complex{1.0}, Complex{0.0}}, cfg);
        CHECK(p3.degree() == 3);  // t^3: the shift itself
    }
    SUBCASE("degree matches the oracle on assembled matrices") {
        std::mt19937_64 rng(55);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 7);
            std::vector<Complex> alphas(static_cast<std::size_t>(n));
            // well-scaled moduli keep the high nilpotent powers above the
            // oracle's dependence threshold
            for (auto& v : alphas) {
                v = std::polar(0.3 + 0.7 * static_cast<double>(rng() % 1000) / 999.0,
                               2.0 * M_PI * static_cast<double>(rng() % 1000) / 999.0);
            }
            const int zeros = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            for (int j = 1; j <= zeros && j < n; ++j) alphas[static_cast<std::size_t>(j)] = 0.0;
            Matrix a = Matrix::Zero(n, n);
            for (int j = 0; j < n; ++j) {
                for (int r = 0; r + j < n; ++r) {
                    a(r, r + j) = alphas[static_cast<std::size_t>(j)];
                }
            }
            const ComplexPoly predicted = lincomb_nilpotent_minpoly(alphas, cfg);
            CHECK(predicted.degree() == minimal_polynomial_oracle(a, cfg).degree());
        }
    }
}

TEST_CASE("calculus algebra invariants") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        const auto [a, f] = gen::random_funcalc_trial(rng, cfg);
        const auto [unused, g] = gen::random_funcalc_trial(rng, cfg);
        (void)unused;
        const SpectralData sd = spectral_data(a, jcfg);
        const Matrix fa = apply(f, a, sd, jcfg);
        const Matrix ga = apply(g, a, sd, jcfg);
        const double scale = std::max({1.0, fa.norm(), ga.norm()});

        CHECK((apply(product(f, g), a, sd, jcfg) - fa * ga).norm() <= 1e-7 * scale);
        const Complex ca{0.6, -0.1}, cb{-0.4, 0.9};
        CHECK((apply(lincomb(ca, f, cb, g), a, sd, jcfg) - ca * fa - cb * ga).norm() <=
              1e-7 * scale);
        CHECK((fa * ga - ga * fa).norm() <= 1e-7 * scale * scale);
    }
}

TEST_CASE("spectral mapping as clustered multisets") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        const auto [a, f] = gen::random_funcalc_trial(rng, cfg);
        const SpectralData sd = spectral_data(a, jcfg);
        const Matrix fa = apply(f, a, sd, jcfg);
        const double radius = 1e-3 * std::max(1.0, fa.norm());
        const auto got = gen::cluster_points(eigenvalues(fa, jcfg), radius);
        std::vector<Complex> want;
        for (const auto& e : sd.eigs) {
            const Complex img = f.value(e.lambda, jcfg);
            for (int m = 0; m < e.alg_mult; ++m) want.push_back(img);
        }
        CHECK(gen::weighted_match_distance(got, gen::cluster_points(want, radius)) <= 1e-7);
    }
}

TEST_CASE("polynomials equal on the spectrum act identically") {
    // P and P + R * minpoly realize the same operator
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 25; ++trial) {
        const auto spec = gen::random_jordan_spec(6, 3, rng);
        const Matrix j = gen::jordan_matrix(spec);
        const Matrix a =
            gen::conjugate(j, gen::bounded_similarity(static_cast<int>(j.rows()), rng));
        const ComplexPoly minpoly = minimal_polynomial(a, jcfg);

        std::vector<Complex> pc(4), rc(3);
        for (auto& c : pc) c = gen::random_in_disc(rng);
        for (auto& c : rc) c = gen::random_in_disc(rng);
        const ComplexPoly p{pc};
        const ComplexPoly q = p + ComplexPoly{rc} * minpoly;

        const SpectralData sd = spectral_data(a, jcfg);
        const Matrix pa = apply(HoloFunction::polynomial(p), a, sd, jcfg);
        const Matrix qa = apply(HoloFunction::polynomial(q), a, sd, jcfg);
        CHECK((pa - qa).norm() <= 1e-7 * std::max(1.0, pa.norm()));

        // direct Horner evaluation agrees too
        CHECK((eval_poly(p, a) - eval_poly(q, a)).norm() <=
              1e-6 * std::pow(1.0 + a.norm(), q.degree()));
    }
}

TEST_CASE("holo product and lincomb reject tables") {
    const HoloFunction t = HoloFunction::table({TablePoint{Complex{0.0}, {Complex{1.0}}}});
    CHECK_THROWS_AS(product(t, t), InputError);
    CHECK_THROWS_AS(lincomb(Complex{1.0}, t, Complex{1.0}, t), InputError);
}
