#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "specnp/discgeo.hpp"

namespace specnp {

struct TablePoint {
    Complex lambda;
    std::vector<Complex> derivatives;  // f(lambda), f'(lambda), ...
};

/// A holomorphic function presented through its derivative oracle
/// lambda -> (f(lambda), f'(lambda), ..., f^(j)(lambda)). Polynomial,
/// rational and Blaschke kinds carry exact structure; the table kind is a
/// finite list of points with precomputed derivatives.
class HoloFunction {
public:
    struct Poly {
        ComplexPoly p;
    };
    struct Rational {
        ComplexPoly num, den;
    };
    struct Blaschke {
        BlaschkeProduct b;
    };
    struct Table {
        std::vector<TablePoint> points;
    };

    static HoloFunction polynomial(ComplexPoly p);
    static HoloFunction rational(ComplexPoly num, ComplexPoly den);
    static HoloFunction blaschke(BlaschkeProduct b);
    static HoloFunction table(std::vector<TablePoint> points);
    static HoloFunction identity();  // f(t) = t

    /// f(lambda), f'(lambda), ..., f^(j_max)(lambda). Rational/Blaschke kinds
    /// throw PoleOnSpectrum when lambda sits within pole_tol of a denominator
    /// zero; the table kind throws InsufficientDerivatives when the tabulated
    /// point does not carry j_max derivatives.
    std::vector<Complex> derivs(Complex lambda, int j_max, const Config& cfg) const;

    Complex value(Complex lambda, const Config& cfg) const;

    /// Structural derivative: exact coefficient algebra for polynomial,
    /// rational and Blaschke kinds; the table kind shifts its lists.
    HoloFunction derivative() const;

    /// View as num/den. Throws InputError for the table kind.
    std::pair<ComplexPoly, ComplexPoly> as_rational() const;

    const char* kind_name() const;
    bool is_table() const { return std::holds_alternative<Table>(impl_); }

    template <typename T>
    const T* get_if() const {
        return std::get_if<T>(&impl_);
    }

private:
    explicit HoloFunction(std::variant<Poly, Rational, Blaschke, Table> impl)
        : impl_(std::move(impl)) {}
    std::variant<Poly, Rational, Blaschke, Table> impl_;
};

HoloFunction product(const HoloFunction& f, const HoloFunction& g);
HoloFunction lincomb(Complex a, const HoloFunction& f, Complex b, const HoloFunction& g);

/// Holomorphic functional calculus
///   f(A) = sum_lambda sum_{j<m(lambda)} (A - lambda I)^j / j! f^(j)(lambda) E(lambda)
/// over the clustered spectrum of A.
Matrix apply(const HoloFunction& f, const Matrix& a, const Config& cfg);
Matrix apply(const HoloFunction& f, const Matrix& a, const SpectralData& sd, const Config& cfg);

/// Order of vanishing of f at lambda, capped at `cap`; hitting the cap is the
/// infinite-order marker (used when f vanishes identically near lambda).
int ord_of_vanishing(const HoloFunction& f, Complex lambda, int cap, const Config& cfg);

struct MinpolyPrediction {
    ComplexPoly poly;
    /// Set when f' vanished to the cap at every spectral point, i.e. f looked
    /// locally constant on the spectrum and every exponent was forced to 1.
    bool locally_constant = false;
};

/// Minimal polynomial of f(A) predicted from the spectral data of A alone:
/// prod over distinct values nu of f on the spectrum of (t - nu)^k(nu), with
///   k(nu) = max{ floor((m(lambda)-1) / (ord_lambda f' + 1)) + 1 }
/// over the spectral preimages lambda of nu.
MinpolyPrediction predicted_minpoly(const HoloFunction& f, const Matrix& a, const Config& cfg);

/// Minimal polynomial of alpha_0 I + alpha_1 N + ... + alpha_{n-1} N^(n-1)
/// where N is the nilpotent shift of degree n: (t - alpha_0)^(floor((n-1)/l)+1)
/// with l the smallest j >= 1 with alpha_j != 0 (l = n when all vanish).
ComplexPoly lincomb_nilpotent_minpoly(std::span<const Complex> alphas, const Config& cfg);

}  // namespace specnp
