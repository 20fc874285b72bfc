#pragma once

#include <vector>

#include "specnp/spectra.hpp"

namespace specnp {

/// Pseudo-hyperbolic distance |(z1 - z2) / (1 - conj(z2) z1)| on the unit
/// disc. Throws OutOfDisc if either point has modulus >= 1.
double mobius_distance(Complex z1, Complex z2);

/// The automorphism zeta -> (zeta - center) / (1 - conj(center) zeta).
struct DiscAutomorphism {
    Complex center;
    Complex operator()(Complex zeta) const;
    Complex inverse(Complex w) const;
};

DiscAutomorphism disc_automorphism(Complex center);

struct BlaschkeZero {
    Complex a;  // |a| < 1
    int mult;
};

/// Finite Blaschke product front * prod ((t - a) / (1 - conj(a) t))^mult with
/// a unimodular front factor.
struct BlaschkeProduct {
    std::vector<BlaschkeZero> zeros;
    Complex front{1.0, 0.0};

    int degree() const;
    ComplexPoly numerator() const;    // front * prod (t - a)^mult
    ComplexPoly denominator() const;  // prod (1 - conj(a) t)^mult
};

/// The Blaschke product whose zeros are the eigenvalues of w with
/// multiplicities equal to their minimal-polynomial indices; front = 1.
/// Annihilates w under the functional calculus. Throws SpectrumNotInDisc if
/// any eigenvalue has modulus >= 1 - eps_boundary.
BlaschkeProduct minimal_blaschke(const Matrix& w, const Config& cfg);
BlaschkeProduct minimal_blaschke(const SpectralData& sd, const Config& cfg);

Complex blaschke_eval(const BlaschkeProduct& b, Complex t, const Config& cfg);

/// All solutions of b(t) = w in the open disc, with multiplicity, obtained by
/// clearing denominators into a degree-d polynomial. For |w| < 1 exactly d
/// solutions come back (counted with multiplicity).
std::vector<Complex> blaschke_preimage(const BlaschkeProduct& b, Complex w, const Config& cfg);

/// The extremal solution for the disc: the Moebius factor at lambda rotated
/// so its value at z is the real, nonnegative Moebius distance.
struct CaratheodoryExtremal {
    Complex lambda;
    Complex unimodular;  // rotation making the value at z real nonnegative
    double value;        // mobius_distance(lambda, z)
    Complex operator()(Complex zeta) const;
};

CaratheodoryExtremal caratheodory_extremal_disc(Complex lambda, Complex z, const Config& cfg);

}  // namespace specnp
