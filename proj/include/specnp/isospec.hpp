#pragma once

#include <functional>

#include "specnp/spectra.hpp"

namespace specnp {

struct SchurResult {
    Matrix q;  // unitary
    Matrix t;  // upper triangular, a = q t q*
};

SchurResult schur_decompose(const Matrix& a, const Config& cfg);

/// Scaling-and-squaring with a degree-13 Pade core.
Matrix matrix_exp(const Matrix& m);

/// Principal logarithm of a unitary matrix: q = v diag(e^{i theta}) v* gives
/// v diag(i theta) v* with theta in (-pi, pi]; eigenvalues within 1e-10 of -1
/// take theta = +pi. The result is skew-Hermitian. Throws NotUnitary.
Matrix matrix_log_unitary(const Matrix& q, const Config& cfg);

/// Entire curve f(zeta) = exp(-C zeta) (D + zeta U) exp(C zeta) joining the
/// diagonal of the Schur form (zeta = 0) to the source matrix (zeta = 1),
/// with constant characteristic coefficients along the way.
struct IsospectralPath {
    Matrix d;       // diagonal part of the Schur triangle
    Matrix u;       // strictly upper triangular part
    Matrix c;       // exp(-c) equals the Schur unitary
    Matrix source;  // the decomposed matrix

    Matrix eval(Complex zeta) const;
};

IsospectralPath isospectral_path(const Matrix& a, const Config& cfg);

struct PathDeviation {
    Complex argument;
    double dev;
};

struct PreservationReport {
    bool passed = true;
    double max_dev = 0.0;
    double tolerance = 0.0;
    std::vector<PathDeviation> violations;
};

/// Checks that char_coords(map(B)) stays constant as B ranges over matrices
/// with the characteristic coefficients of a: samples along the isospectral
/// path of a plus random bounded-condition conjugates of a.
PreservationReport spectrum_preservation_test(const std::function<Matrix(const Matrix&)>& map,
                                              const Matrix& a, const Config& cfg);

}  // namespace specnp
