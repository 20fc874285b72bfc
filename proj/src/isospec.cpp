#include "specnp/isospec.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <random>

#include "specnp/errors.hpp"

namespace specnp {

SchurResult schur_decompose(const Matrix& a, const Config& cfg) {
    if (a.rows() != a.cols()) throw DimensionMismatch("matrix is not square");
    if (a.rows() > cfg.max_dim) throw InputError("matrix dimension exceeds max_dim");
    Eigen::ComplexSchur<Matrix> schur(a, /*computeU=*/true);
    if (schur.info() != Eigen::Success) throw NoConvergence("Schur iteration did not converge");
    return SchurResult{schur.matrixU(), schur.matrixT()};
}

Matrix matrix_exp(const Matrix& m) {
    // Scaling and squaring with the degree-13 Pade approximant.
    static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,       1323241920.0,
                               40840800.0,          960960.0,            16380.0,
                               182.0,               1.0};
    const Eigen::Index n = m.rows();
    const Matrix id = Matrix::Identity(n, n);

    const double norm = m.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
    const double theta13 = 5.371920351148152;
    int squarings = 0;
    if (norm > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
    }
    const Matrix a = m / std::pow(2.0, squarings);

    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a2 * a4;
    const Matrix u =
        a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
             b[1] * id);
    const Matrix v =
        a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

    Matrix r = (v - u).partialPivLu().solve(v + u);
    for (int s = 0; s < squarings; ++s) r = r * r;
    return r;
}

Matrix matrix_log_unitary(const Matrix& q, const Config& cfg) {
    const Eigen::Index n = q.rows();
    if (q.rows() != q.cols()) throw DimensionMismatch("matrix is not square");
    if ((q.adjoint() * q - Matrix::Identity(n, n)).norm() > 1e-8) {
        throw NotUnitary("matrix_log_unitary input is not unitary");
    }
    // The Schur triangle of a unitary matrix is diagonal (up to roundoff), so
    // the Schur basis is a unitary eigenbasis.
    const SchurResult s = schur_decompose(q, cfg);
    Matrix log_diag = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex lambda = s.t(i, i);
        double theta = std::arg(lambda);
        if (std::abs(lambda + Complex{1.0}) <= 1e-10) theta = M_PI;  // branch cut at -1
        log_diag(i, i) = Complex{0.0, theta};
    }
    return s.q * log_diag * s.q.adjoint();
}

Matrix IsospectralPath::eval(Complex zeta) const {
    return matrix_exp(-c * zeta) * (d + zeta * u) * matrix_exp(c * zeta);
}

IsospectralPath isospectral_path(const Matrix& a, const Config& cfg) {
    const SchurResult s = schur_decompose(a, cfg);
    IsospectralPath path;
    path.d = s.t.diagonal().asDiagonal();
    path.u = s.t - path.d;
    path.c = -matrix_log_unitary(s.q, cfg);  // exp(-c) == q
    path.source = a;
    return path;
}

PreservationReport spectrum_preservation_test(const std::function<Matrix(const Matrix&)>& map,
                                              const Matrix& a, const Config& cfg) {
    const int n = static_cast<int>(a.rows());
    const SymPoint base = char_coords(map(a), cfg);
    const double tol = cfg.path_tol * std::pow(1.0 + a.norm(), n);

    PreservationReport report;
    report.tolerance = tol;
    auto check = [&](const Matrix& b, Complex tag) {
        const SymPoint got = char_coords(map(b), cfg);
        double dev = 0.0;
        for (int j = 0; j < n; ++j) {
            dev = std::max(dev, std::abs(got.coords[static_cast<std::size_t>(j)] -
                                         base.coords[static_cast<std::size_t>(j)]));
        }
        report.max_dev = std::max(report.max_dev, dev);
        if (dev > tol) {
            report.passed = false;
            report.violations.push_back(PathDeviation{tag, dev});
        }
    };

    const IsospectralPath path = isospectral_path(a, cfg);
    const int samples = std::max(4, cfg.grid_points / 4);
    for (int i = 0; i <= samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        check(path.eval(Complex{t}), Complex{t});
    }

    // Random conjugates with singular values in [1/2, 2].
    std::mt19937_64 rng(cfg.seed + 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 4; ++trial) {
        Matrix g(n, n), h(n, n);
        for (int r = 0; r < n; ++r) {
            for (int c2 = 0; c2 < n; ++c2) {
                g(r, c2) = Complex{unif(rng), unif(rng)};
                h(r, c2) = Complex{unif(rng), unif(rng)};
            }
        }
        const Matrix q1 = Eigen::HouseholderQR<Matrix>(g).householderQ();
        const Matrix q2 = Eigen::HouseholderQR<Matrix>(h).householderQ();
        Eigen::VectorXcd sv(n);
        for (int i = 0; i < n; ++i) sv(i) = Complex{0.5 + 1.5 * (unif(rng) + 1.0) / 2.0};
        const Matrix s = q1 * sv.asDiagonal() * q2.adjoint();
        const Matrix b = s * a * s.inverse();
        check(b, Complex{-1.0 - trial});
    }
    return report;
}

}  // namespace specnp
