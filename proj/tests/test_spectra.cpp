#include <doctest.h>

#include "specnp/errors.hpp"
#include "specnp/spectra.hpp"
#include "support.hpp"

using namespace specnp;
using support::cnear;
using support::jordan_block;
using support::mat2;

namespace {
const Config cfg{};

Matrix diag2(Complex a, Complex b) {
    return mat2(a, Complex{0.0}, Complex{0.0}, b);
}
}  // namespace

TEST_CASE("eigenvalues of small matrices") {
    CHECK(gen::multiset_match_distance(eigenvalues(diag2(Complex{1.0}, Complex{2.0}), cfg),
                                       {Complex{1.0}, Complex{2.0}}) < 1e-12);
    CHECK(gen::multiset_match_distance(eigenvalues(jordan_block(Complex{0.0}, 2), cfg),
                                       {Complex{0.0}, Complex{0.0}}) < 1e-12);
    // companion of t^2 - 3t + 2: characteristic roots 1 and 2 by hand
    const Matrix c = companion(SymPoint{{Complex{3.0}, Complex{2.0}}});
    CHECK(gen::multiset_match_distance(eigenvalues(c, cfg), {Complex{1.0}, Complex{2.0}}) < 1e-10);
}

TEST_CASE("clustering merges only within the radius") {
    const auto clusters =
        cluster({Complex{1.0}, Complex{1.0 + 1e-12}, Complex{2.0}}, cfg, 0.0);
    REQUIRE(clusters.size() == 2);
    const bool first_is_pair = clusters[0].mult == 2;
    const Cluster& pair = first_is_pair ? clusters[0] : clusters[1];
    const Cluster& single = first_is_pair ? clusters[1] : clusters[0];
    CHECK(pair.mult == 2);
    CHECK(cnear(pair.rep, Complex{1.0}, 1e-9));
    CHECK(single.mult == 1);
    CHECK(cnear(single.rep, Complex{2.0}, 0.0));

    CHECK(cluster({Complex{0.0}}, cfg).size() == 1);
    CHECK(cluster({Complex{0.0, 1.0}, Complex{0.0, -1.0}}, cfg).size() == 2);
}

TEST_CASE("eigenvalue index from the rank chain") {
    CHECK(eigenvalue_index(jordan_block(Complex{0.0}, 3), Complex{0.0}, cfg) == 3);
    CHECK(eigenvalue_index(diag2(Complex{1.0}, Complex{1.0}), Complex{1.0}, cfg) == 1);
    // J_2(0) + [0]: rank sequence 1, 0, 0 gives index 2
    const Matrix a = gen::jordan_matrix({gen::JordanSpec{Complex{0.0}, {2, 1}}});
    CHECK(eigenvalue_index(a, Complex{0.0}, cfg) == 2);
    CHECK_THROWS_AS(eigenvalue_index(diag2(Complex{1.0}, Complex{2.0}), Complex{5.0}, cfg),
                    NotAnEigenvalue);
}

TEST_CASE("spectral projections on fixed matrices") {
    SUBCASE("orthogonal idempotents of a diagonal matrix") {
        const SpectralData sd = spectral_data(diag2(Complex{1.0}, Complex{2.0}), cfg);
        REQUIRE(sd.eigs.size() == 2);
        const int i1 = cnear(sd.eigs[0].lambda, Complex{1.0}, 1e-9) ? 0 : 1;
        CHECK((sd.projections[i1] - diag2(Complex{1.0}, Complex{0.0})).norm() < 1e-10);
        CHECK((sd.projections[1 - i1] - diag2(Complex{0.0}, Complex{1.0})).norm() < 1e-10);
    }
    SUBCASE("single cluster gives the identity") {
        const SpectralData sd = spectral_data(jordan_block(Complex{0.0}, 2), cfg);
        REQUIRE(sd.eigs.size() == 1);
        CHECK(sd.eigs[0].index == 2);
        CHECK((sd.projections[0] - Matrix::Identity(2, 2)).norm() < 1e-12);
    }
    SUBCASE("hand-solved 2x2 with distinct eigenvalues") {
        // A = [[1,1],[0,2]]: E(1) = [[1,-1],[0,0]], E(2) = [[0,1],[0,1]]
        const Matrix a = mat2(Complex{1.0}, Complex{1.0}, Complex{0.0}, Complex{2.0});
        const SpectralData sd = spectral_data(a, cfg);
        REQUIRE(sd.eigs.size() == 2);
        const int i1 = cnear(sd.eigs[0].lambda, Complex{1.0}, 1e-9) ? 0 : 1;
        CHECK((sd.projections[i1] -
               mat2(Complex{1.0}, Complex{-1.0}, Complex{0.0}, Complex{0.0}))
                  .norm() < 1e-9);
        CHECK((sd.projections[1 - i1] -
               mat2(Complex{0.0}, Complex{1.0}, Complex{0.0}, Complex{1.0}))
                  .norm() < 1e-9);
    }
}

TEST_CASE("projection axioms on random diagonalizable matrices") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Matrix a = support::random_dense(n, rng);
        const SpectralData sd = spectral_data(a, cfg);
        Matrix sum = Matrix::Zero(n, n);
        for (std::size_t i = 0; i < sd.projections.size(); ++i) {
            const Matrix& e = sd.projections[i];
            sum += e;
            CHECK((e * e - e).norm() <= 1e-7);
            CHECK((a * e - e * a).norm() <= 1e-7 * std::max(1.0, a.norm()));
            for (std::size_t j = 0; j < sd.projections.size(); ++j) {
                if (j != i) CHECK((e * sd.projections[j]).norm() <= 1e-7);
            }
        }
        CHECK((sum - Matrix::Identity(n, n)).norm() <= 1e-7);
    }
}

TEST_CASE("nilpotency order of (A - lambda) on its eigenspace") {
    std::mt19937_64 rng(23);
    const Config jcfg = gen::jordan_tolerances(cfg);
    for (int trial = 0; trial < 25; ++trial) {
        const auto spec = gen::random_jordan_spec(6, 3, rng);
        const Matrix j = gen::jordan_matrix(spec);
        const Matrix s = gen::bounded_similarity(static_cast<int>(j.rows()), rng);
        const Matrix a = gen::conjugate(j, s);
        const SpectralData sd = spectral_data(a, jcfg);
        const Matrix id = Matrix::Identity(a.rows(), a.rows());
        for (std::size_t i = 0; i < sd.eigs.size(); ++i) {
            const Matrix shifted = a - sd.eigs[i].lambda * id;
            Matrix power = sd.projections[i];
            for (int rep = 0; rep < sd.eigs[i].index - 1; ++rep) power = shifted * power;
            CHECK(power.norm() > 1e-5);  // (A - lambda)^(m-1) E != 0
            CHECK((shifted * power).norm() <= 1e-6 * std::max(1.0, std::pow(a.norm(), 2.0)));
        }
    }
}

TEST_CASE("minimal polynomial via indices") {
    const Matrix a = gen::jordan_matrix(
        {gen::JordanSpec{Complex{0.5}, {1, 1}}, gen::JordanSpec{Complex{-0.25}, {1}}});
    const ComplexPoly p = minimal_polynomial(a, cfg);  // (t - a)(t - b), squarefree
    REQUIRE(p.degree() == 2);
    CHECK(gen::multiset_match_distance(roots(p, cfg), {Complex{0.5}, Complex{-0.25}}) < 1e-9);

    CHECK(minimal_polynomial(jordan_block(Complex{0.0}, 3), cfg).degree() == 3);

    const Matrix b = gen::jordan_matrix(
        {gen::JordanSpec{Complex{0.0}, {2}}, gen::JordanSpec{Complex{1.0}, {1}}});
    const ComplexPoly q = minimal_polynomial(b, cfg);  // t^2 (t - 1)
    REQUIRE(q.degree() == 3);
    CHECK(gen::multiset_match_distance(roots(q, cfg),
                                       {Complex{0.0}, Complex{0.0}, Complex{1.0}}) < 1e-7);
}

TEST_CASE("matrix Horner annihilates with the minimal polynomial") {
    std::mt19937_64 rng(29);
    const Config jcfg = gen::jordan_tolerances(cfg);
    for (int trial = 0; trial < 25; ++trial) {
        const auto spec = gen::random_jordan_spec(6, 3, rng);
        const Matrix j = gen::jordan_matrix(spec);
        const Matrix a = gen::conjugate(j, gen::bounded_similarity(static_cast<int>(j.rows()), rng));
        const ComplexPoly m = minimal_polynomial(a, jcfg);
        const double bound = 1e-6 * std::pow(1.0 + a.norm(), m.degree());
        CHECK(eval_poly(m, a).norm() <= bound);
    }
}

TEST_CASE("oracle matches structure on fixed inputs") {
    CHECK(minimal_polynomial_oracle(Matrix::Zero(3, 3), cfg).degree() == 1);
    CHECK(minimal_polynomial_oracle(jordan_block(Complex{0.0}, 2), cfg).degree() == 2);
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = Complex{1.0};
    d(1, 1) = Complex{2.0};
    d(2, 2) = Complex{3.0};
    const ComplexPoly p = minimal_polynomial_oracle(d, cfg);
    REQUIRE(p.degree() == 3);  // Vandermonde dependence appears first at k = 3
    CHECK(gen::multiset_match_distance(roots(p, cfg),
                                       {Complex{1.0}, Complex{2.0}, Complex{3.0}}) < 1e-8);
}

TEST_CASE("minimal polynomial agrees with the oracle on Jordan data") {
    std::mt19937_64 rng(31);
    const Config jcfg = gen::jordan_tolerances(cfg);
    for (int trial = 0; trial < 40; ++trial) {
        const auto spec = gen::random_jordan_spec(7, 3, rng);
        const Matrix j = gen::jordan_matrix(spec);
        const Matrix a = gen::conjugate(j, gen::bounded_similarity(static_cast<int>(j.rows()), rng));
        const ComplexPoly lib = minimal_polynomial(a, jcfg);
        const ComplexPoly orc = minimal_polynomial_oracle(a, jcfg);
        REQUIRE(lib.degree() == orc.degree());
        if (lib.degree() >= 1) {
            const auto lr = gen::cluster_points(roots(lib, cfg), 5e-3);
            const auto orr = gen::cluster_points(roots(orc, cfg), 5e-3);
            CHECK(gen::weighted_match_distance(lr, orr) <= 1e-6);
        }
    }
}

TEST_CASE("characteristic coordinates") {
    // [[0,-2],[1,3]]: char poly t^2 - 3t + 2 by cofactor expansion
    const Matrix a = mat2(Complex{0.0}, Complex{-2.0}, Complex{1.0}, Complex{3.0});
    const SymPoint x = char_coords(a, cfg);
    CHECK(cnear(x.coords[0], Complex{3.0}, 1e-12));
    CHECK(cnear(x.coords[1], Complex{2.0}, 1e-12));

    const SymPoint z = char_coords(Matrix::Zero(2, 2), cfg);
    CHECK(cnear(z.coords[0], Complex{0.0}, 0.0));
    CHECK(cnear(z.coords[1], Complex{0.0}, 0.0));

    // diagonal matrices reduce to symmetrize of the diagonal
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        Matrix d = Matrix::Zero(n, n);
        std::vector<Complex> diag;
        for (int i = 0; i < n; ++i) {
            diag.push_back(gen::random_in_disc(rng));
            d(i, i) = diag.back();
        }
        const SymPoint got = char_coords(d, cfg);
        const SymPoint want = symmetrize(diag);
        for (int i = 0; i < n; ++i) CHECK(cnear(got.coords[i], want.coords[i], 1e-12));
    }
}

TEST_CASE("companion realizes the displayed matrix") {
    const Matrix c = companion(SymPoint{{Complex{3.0}, Complex{2.0}}});
    CHECK((c - mat2(Complex{0.0}, Complex{-2.0}, Complex{1.0}, Complex{3.0})).norm() == 0.0);

    const Matrix shift = companion(SymPoint{{Complex{0.0}, Complex{0.0}, Complex{0.0}}});
    Matrix expected = Matrix::Zero(3, 3);
    expected(1, 0) = Complex{1.0};
    expected(2, 1) = Complex{1.0};
    CHECK((shift - expected).norm() == 0.0);
}

TEST_CASE("char_coords of companion is the identity on sym points") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::vector<Complex> z;
        for (int i = 0; i < n; ++i) z.push_back(gen::random_in_disc(rng));
        const SymPoint x = symmetrize(z);
        const SymPoint back = char_coords(companion(x), cfg);
        for (int i = 0; i < n; ++i) CHECK(cnear(back.coords[i], x.coords[i], 1e-10));
    }
}

TEST_CASE("spectral radius") {
    CHECK(spectral_radius(Matrix::Zero(3, 3), cfg) == 0.0);
    CHECK(spectral_radius(diag2(Complex{0.5}, Complex{-0.9}), cfg) == doctest::Approx(0.9));
    CHECK(spectral_radius(jordan_block(Complex{0.0}, 2), cfg) <= 1e-12);
}
