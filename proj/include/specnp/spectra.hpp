#pragma once

#include <Eigen/Dense>
#include <vector>

#include "specnp/complex_poly.hpp"
#include "specnp/config.hpp"

namespace specnp {

using Matrix = Eigen::MatrixXcd;

/// All n eigenvalues with multiplicity, from the complex Schur form.
/// Throws NoConvergence if the QR iteration fails.
std::vector<Complex> eigenvalues(const Matrix& a, const Config& cfg);

struct Cluster {
    Complex rep;  // multiplicity-weighted mean of the cluster
    int mult;
};

/// Greedy union-find clustering with radius cluster_tol * max(1, source_norm).
std::vector<Cluster> cluster(const std::vector<Complex>& values, const Config& cfg,
                             double source_norm = 0.0);

/// Same clustering, but returning the member indices of each cluster.
std::vector<std::vector<int>> cluster_groups(const std::vector<Complex>& values, double radius);

/// Smallest j with rank((a - lambda I)^j) == rank((a - lambda I)^(j+1)),
/// ranks taken numerically. Throws NotAnEigenvalue when a - lambda I has
/// full numerical rank.
int eigenvalue_index(const Matrix& a, Complex lambda, const Config& cfg);

struct EigenvalueInfo {
    Complex lambda;  // cluster representative
    int alg_mult;
    int index;  // multiplicity of lambda as a zero of the minimal polynomial
};

/// Clustered eigenstructure of a matrix: eigenvalues with algebraic
/// multiplicities and indices, plus the spectral projections onto the
/// generalized eigenspaces. The projections are polynomials in the matrix
/// (Hermite interpolation idempotents), so they commute with it by
/// construction.
struct SpectralData {
    std::vector<EigenvalueInfo> eigs;
    std::vector<Matrix> projections;  // aligned with eigs; empty if not requested
    double source_norm = 0.0;         // Frobenius norm of the source matrix

    int dim() const;          // sum of algebraic multiplicities
    int total_index() const;  // degree of the minimal polynomial
};

SpectralData spectral_data(const Matrix& a, const Config& cfg, bool with_projections = true);

/// prod (t - lambda)^index(lambda), expanded.
ComplexPoly minimal_polynomial(const Matrix& a, const Config& cfg);

/// Brute-force anti-drift oracle: the smallest k such that I, a, ..., a^k are
/// numerically linearly dependent, with the dependence coefficients returned
/// as a monic annihilating polynomial. Only intended for n <= oracle_max_n.
ComplexPoly minimal_polynomial_oracle(const Matrix& a, const Config& cfg);

/// Coefficients of the characteristic polynomial in the convention
/// char(a)(t) = t^n + sum_k (-1)^k c_k t^(n-k); c_1 = trace, c_n = det.
SymPoint char_coords(const Matrix& a, const Config& cfg);

/// Companion matrix of poly_from_sym(x): ones on the subdiagonal, the negated
/// monic coefficients up the last column. char_coords(companion(x)) == x.
Matrix companion(const SymPoint& x);

/// Companion matrix of a monic polynomial (degree >= 1).
Matrix companion_matrix(const ComplexPoly& monic_poly);

double spectral_radius(const Matrix& a, const Config& cfg);

/// Matrix Horner evaluation p(a).
Matrix eval_poly(const ComplexPoly& p, const Matrix& a);

/// Number of singular values above rel_tol times the largest one. A matrix
/// whose largest singular value is at or below zero_floor counts as zero.
int numerical_rank(const Matrix& m, double rel_tol, double zero_floor = 0.0);

}  // namespace specnp
