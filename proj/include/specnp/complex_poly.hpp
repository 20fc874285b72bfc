#pragma once

#include <complex>
#include <span>
#include <vector>

#include "specnp/config.hpp"

namespace specnp {

using Complex = std::complex<double>;

/// Univariate polynomial with complex coefficients, stored ascending in
/// degree. Coefficients are kept raw: monic normalization and trailing-zero
/// trimming are explicit operations, never implicit side effects.
class ComplexPoly {
public:
    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}

    static ComplexPoly zero() { return ComplexPoly{}; }
    static ComplexPoly constant(Complex c) { return ComplexPoly{{c}}; }
    static ComplexPoly monomial(int degree, Complex c = 1.0);
    /// Expanded product of (t - r) over the given roots.
    static ComplexPoly from_roots(std::span<const Complex> roots);

    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Degree of the trimmed polynomial; -1 for the zero polynomial.
    int degree() const;
    bool is_zero(double rel_tol = 0.0) const;
    Complex leading() const;
    double max_coeff_norm() const;

    Complex eval(Complex t) const;
    ComplexPoly derivative(int order = 1) const;

    /// Drop trailing coefficients with |c| <= rel_tol * max|c|.
    ComplexPoly trimmed(double rel_tol = 0.0) const;
    /// Divide by the leading coefficient. Throws ZeroPolynomial if there is none.
    ComplexPoly monic(double rel_tol = 0.0) const;

    /// Coefficients of p(center + x) as a polynomial in x, i.e. the Taylor
    /// coefficients of p at center.
    std::vector<Complex> taylor_at(Complex center) const;

    ComplexPoly operator+(const ComplexPoly& rhs) const;
    ComplexPoly operator-(const ComplexPoly& rhs) const;
    ComplexPoly operator*(const ComplexPoly& rhs) const;
    ComplexPoly operator*(Complex scalar) const;

private:
    std::vector<Complex> coeffs_;
};

/// A point of the symmetrized product: the elementary symmetric coordinates
/// (S_1, ..., S_n) of an unordered n-tuple.
struct SymPoint {
    std::vector<Complex> coords;
    int n() const { return static_cast<int>(coords.size()); }
};

/// Elementary symmetric coordinates of the given points, i.e. the S_j with
/// prod (t - z_j) = t^n + sum_j (-1)^j S_j t^(n-j).
SymPoint symmetrize(std::span<const Complex> points);

/// The monic polynomial t^n + sum_j (-1)^j X_j t^(n-j) determined by a
/// symmetric-coordinate point.
ComplexPoly poly_from_sym(const SymPoint& x);

/// All complex roots with multiplicity, via the eigenvalues of the companion
/// matrix of the monic normalization. Throws ZeroPolynomial for p == 0 and
/// InputError for constants.
std::vector<Complex> roots(const ComplexPoly& p, const Config& cfg);

}  // namespace specnp
