#include <doctest.h>

#include "specnp/errors.hpp"
#include "specnp/funcalc.hpp"
#include "specnp/isospec.hpp"
#include "support.hpp"

using namespace specnp;
using support::cnear;

namespace {
const Config cfg{};

Matrix random_unitary(int n, std::mt19937_64& rng) {
    const Matrix g = support::random_dense(n, rng);
    return Eigen::HouseholderQR<Matrix>(g).householderQ();
}
}  // namespace

TEST_CASE("matrix exponential basics") {
    CHECK((matrix_exp(Matrix::Zero(3, 3)) - Matrix::Identity(3, 3)).norm() <= 1e-14);

    // diagonal input exponentiates entrywise
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = Complex{0.3, 1.2};
    d(1, 1) = Complex{-2.0, 0.7};
    const Matrix e = matrix_exp(d);
    CHECK(cnear(e(0, 0), std::exp(d(0, 0)), 1e-13));
    CHECK(cnear(e(1, 1), std::exp(d(1, 1)), 1e-13));
    CHECK(std::abs(e(0, 1)) + std::abs(e(1, 0)) <= 1e-15);

    // one-parameter group property along a random direction
    std::mt19937_64 rng(3);
    const Matrix a = support::random_dense(4, rng);
    const Matrix half = matrix_exp(0.5 * a);
    CHECK((half * half - matrix_exp(a)).norm() <= 1e-11 * matrix_exp(a).norm());

    // inverse via negation
    const Matrix prod = matrix_exp(a) * matrix_exp(-a);
    CHECK((prod - Matrix::Identity(4, 4)).norm() <= 1e-11);
}

TEST_CASE("principal logarithm of unitary matrices") {
    CHECK(matrix_log_unitary(Matrix::Identity(3, 3), cfg).norm() <= 1e-12);

    Matrix rot = Matrix::Zero(1, 1);
    rot(0, 0) = Complex{0.0, 1.0};  // log(i) = i pi / 2
    const Matrix l = matrix_log_unitary(rot, cfg);
    CHECK(cnear(l(0, 0), Complex{0.0, M_PI / 2.0}, 1e-13));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Matrix q = random_unitary(n, rng);
        const Matrix c = matrix_log_unitary(q, cfg);
        CHECK((c + c.adjoint()).norm() <= 1e-10);  // skew-Hermitian
        CHECK((matrix_exp(c) - q).norm() <= 1e-9);
    }

    CHECK_THROWS_AS(matrix_log_unitary(2.0 * Matrix::Identity(2, 2), cfg), NotUnitary);
}

TEST_CASE("Schur decomposition contract") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Matrix a = support::random_dense(n, rng);
        const SchurResult s = schur_decompose(a, cfg);
        CHECK((s.q.adjoint() * s.q - Matrix::Identity(n, n)).norm() <= 1e-10);
        CHECK((s.q * s.t * s.q.adjoint() - a).norm() <= 1e-9 * std::max(1.0, a.norm()));
        for (int r = 1; r < n; ++r) {
            for (int c = 0; c < r; ++c) CHECK(std::abs(s.t(r, c)) <= 1e-12 * (1.0 + a.norm()));
        }
    }
}

TEST_CASE("isospectral path endpoints and degenerate inputs") {
    std::mt19937_64 rng(11);
    SUBCASE("upper triangular input needs no rotation") {
        Matrix t = Matrix::Zero(3, 3);
        t(0, 0) = Complex{0.5};
        t(1, 1) = Complex{-0.3, 0.1};
        t(2, 2) = Complex{0.2, -0.6};
        t(0, 1) = Complex{1.0, 0.2};
        t(0, 2) = Complex{-0.4};
        t(1, 2) = Complex{0.8, 0.8};
        const IsospectralPath path = isospectral_path(t, cfg);
        CHECK(path.c.norm() <= 1e-9);
        // f(zeta) = D + zeta U for triangular input
        const Complex zeta{0.3, 0.4};
        CHECK((path.eval(zeta) - (path.d + zeta * path.u)).norm() <= 1e-9);
    }
    SUBCASE("diagonal input gives a constant path") {
        Matrix d = Matrix::Zero(2, 2);
        d(0, 0) = Complex{0.4, -0.1};
        d(1, 1) = Complex{-0.7};
        const IsospectralPath path = isospectral_path(d, cfg);
        CHECK(path.u.norm() <= 1e-12);
        CHECK((path.eval(Complex{0.77, -0.3}) - d).norm() <= 1e-10);
    }
    SUBCASE("endpoints join the diagonal to the source") {
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 5);
            const Matrix a = support::random_dense(n, rng);
            const IsospectralPath path = isospectral_path(a, cfg);
            CHECK((path.eval(Complex{1.0}) - a).norm() <= 1e-8 * a.norm());
            const Matrix at0 = path.eval(Complex{0.0});
            CHECK((at0 - path.d).norm() <= 1e-12);
        }
    }
}

TEST_CASE("characteristic coefficients are constant along the path") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Matrix a = support::random_dense(n, rng);
        const IsospectralPath path = isospectral_path(a, cfg);
        const SymPoint base = char_coords(a, cfg);
        const double tol = 1e-7 * std::pow(1.0 + a.norm(), n);
        auto probe = [&](Complex zeta) {
            const SymPoint got = char_coords(path.eval(zeta), cfg);
            for (int j = 0; j < n; ++j) {
                CHECK(std::abs(got.coords[static_cast<std::size_t>(j)] -
                               base.coords[static_cast<std::size_t>(j)]) <= tol);
            }
        };
        for (int i = 0; i < 16; ++i) probe(Complex{i / 15.0});
        for (int i = 0; i < 16; ++i) probe(std::polar(1.0, 2.0 * M_PI * i / 16.0));
        for (int i = 0; i < 16; ++i) probe(std::polar(2.0, 2.0 * M_PI * i / 16.0));
    }
}

TEST_CASE("spectrum preservation harness") {
    std::mt19937_64 rng(17);
    const Matrix a = support::random_dense(4, rng, 0.5);

    SUBCASE("identity map") {
        const PreservationReport r =
            spectrum_preservation_test([](const Matrix& b) { return b; }, a, cfg);
        CHECK(r.passed);
    }
    SUBCASE("fixed conjugation") {
        const Matrix s = gen::bounded_similarity(4, rng);
        const PreservationReport r = spectrum_preservation_test(
            [&](const Matrix& b) { return Matrix(s * b * s.inverse()); }, a, cfg);
        CHECK(r.passed);
    }
    SUBCASE("functional calculus by a Blaschke product") {
        // rescale so the spectrum sits inside the disc
        const double rho = spectral_radius(a, cfg);
        const Matrix inside = a / (2.0 * std::max(0.5, rho));
        BlaschkeProduct b;
        b.zeros.push_back(BlaschkeZero{Complex{0.3, 0.2}, 1});
        b.zeros.push_back(BlaschkeZero{Complex{-0.5}, 1});
        const HoloFunction f = HoloFunction::blaschke(b);
        const PreservationReport r = spectrum_preservation_test(
            [&](const Matrix& m) { return apply(f, m, cfg); }, inside, cfg);
        CHECK(r.passed);
    }
}
