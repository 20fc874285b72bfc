#include "specnp/discgeo.hpp"

#include <cmath>

#include "specnp/errors.hpp"

namespace specnp {

double mobius_distance(Complex z1, Complex z2) {
    if (std::abs(z1) >= 1.0 || std::abs(z2) >= 1.0) {
        throw OutOfDisc("mobius_distance arguments must lie in the open unit disc");
    }
    return std::abs((z1 - z2) / (Complex{1.0} - std::conj(z2) * z1));
}

Complex DiscAutomorphism::operator()(Complex zeta) const {
    return (zeta - center) / (Complex{1.0} - std::conj(center) * zeta);
}

Complex DiscAutomorphism::inverse(Complex w) const {
    return (w + center) / (Complex{1.0} + std::conj(center) * w);
}

DiscAutomorphism disc_automorphism(Complex center) {
    if (std::abs(center) >= 1.0) throw OutOfDisc("automorphism center must lie in the disc");
    return DiscAutomorphism{center};
}

int BlaschkeProduct::degree() const {
    int d = 0;
    for (const auto& z : zeros) d += z.mult;
    return d;
}

ComplexPoly BlaschkeProduct::numerator() const {
    std::vector<Complex> rts;
    for (const auto& z : zeros) {
        for (int k = 0; k < z.mult; ++k) rts.push_back(z.a);
    }
    return ComplexPoly::from_roots(rts) * front;
}

ComplexPoly BlaschkeProduct::denominator() const {
    ComplexPoly den = ComplexPoly::constant(Complex{1.0});
    for (const auto& z : zeros) {
        const ComplexPoly factor{{Complex{1.0}, -std::conj(z.a)}};  // 1 - conj(a) t
        for (int k = 0; k < z.mult; ++k) den = den * factor;
    }
    return den;
}

BlaschkeProduct minimal_blaschke(const SpectralData& sd, const Config& cfg) {
    BlaschkeProduct b;
    for (const auto& e : sd.eigs) {
        if (std::abs(e.lambda) >= 1.0 - cfg.eps_boundary) {
            throw SpectrumNotInDisc("eigenvalue too close to the unit circle");
        }
        b.zeros.push_back(BlaschkeZero{e.lambda, e.index});
    }
    return b;
}

BlaschkeProduct minimal_blaschke(const Matrix& w, const Config& cfg) {
    return minimal_blaschke(spectral_data(w, cfg, /*with_projections=*/false), cfg);
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex t, const Config& cfg) {
    Complex acc = b.front;
    for (const auto& z : b.zeros) {
        const Complex den = Complex{1.0} - std::conj(z.a) * t;
        if (std::abs(den) <= cfg.pole_tol) {
            throw PoleHit("evaluation point within pole_tol of a Blaschke pole");
        }
        const Complex factor = (t - z.a) / den;
        for (int k = 0; k < z.mult; ++k) acc *= factor;
    }
    return acc;
}

std::vector<Complex> blaschke_preimage(const BlaschkeProduct& b, Complex w, const Config& cfg) {
    if (std::abs(w) > 1.0) throw OutOfDisc("preimage target must lie in the closed disc");
    if (b.degree() < 1) throw InputError("preimage of a constant Blaschke product");
    // front * num0(t) - w * den(t) = 0, degree exactly d for |w| <= 1 since
    // |w prod conj(a)| < 1 = |front|.
    const ComplexPoly p = b.numerator() - b.denominator() * w;
    std::vector<Complex> inside;
    for (const Complex& r : roots(p, cfg)) {
        if (std::abs(r) < 1.0) inside.push_back(r);
    }
    return inside;
}

Complex CaratheodoryExtremal::operator()(Complex zeta) const {
    return unimodular * (zeta - lambda) / (Complex{1.0} - std::conj(lambda) * zeta);
}

CaratheodoryExtremal caratheodory_extremal_disc(Complex lambda, Complex z, const Config& cfg) {
    if (std::abs(lambda) >= 1.0 || std::abs(z) >= 1.0) {
        throw OutOfDisc("extremal endpoints must lie in the open unit disc");
    }
    if (std::abs(lambda - z) <= cfg.node_tol) {
        throw CoincidentPoints("extremal endpoints coincide");
    }
    const Complex at_z = (z - lambda) / (Complex{1.0} - std::conj(lambda) * z);
    const Complex rotation = std::conj(at_z) / std::abs(at_z);
    return CaratheodoryExtremal{lambda, rotation, std::abs(at_z)};
}

}  // namespace specnp
