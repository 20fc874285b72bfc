#include "specnp/complex_poly.hpp"

#include <algorithm>
#include <cmath>

#include "specnp/errors.hpp"
#include "specnp/spectra.hpp"

namespace specnp {

ComplexPoly ComplexPoly::monomial(int degree, Complex c) {
    std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1, Complex{0.0});
    coeffs.back() = c;
    return ComplexPoly{std::move(coeffs)};
}

ComplexPoly ComplexPoly::from_roots(std::span<const Complex> roots) {
    std::vector<Complex> coeffs{Complex{1.0}};
    for (Complex r : roots) {
        coeffs.push_back(Complex{0.0});
        for (std::size_t i = coeffs.size() - 1; i > 0; --i) {
            coeffs[i] = coeffs[i - 1] - r * coeffs[i];
        }
        coeffs[0] *= -r;
    }
    return ComplexPoly{std::move(coeffs)};
}

int ComplexPoly::degree() const {
    for (std::size_t i = coeffs_.size(); i > 0; --i) {
        if (coeffs_[i - 1] != Complex{0.0}) return static_cast<int>(i) - 1;
    }
    return -1;
}

bool ComplexPoly::is_zero(double rel_tol) const {
    const double scale = max_coeff_norm();
    if (scale == 0.0) return true;
    if (rel_tol <= 0.0) return false;
    for (const Complex& c : coeffs_) {
        if (std::abs(c) > rel_tol * scale) return false;
    }
    return true;
}

Complex ComplexPoly::leading() const {
    const int d = degree();
    if (d < 0) throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return coeffs_[static_cast<std::size_t>(d)];
}

double ComplexPoly::max_coeff_norm() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Complex ComplexPoly::eval(Complex t) const {
    Complex acc{0.0};
    for (std::size_t i = coeffs_.size(); i > 0; --i) {
        acc = acc * t + coeffs_[i - 1];
    }
    return acc;
}

ComplexPoly ComplexPoly::derivative(int order) const {
    if (order < 0) throw InputError("derivative order must be nonnegative");
    std::vector<Complex> cur = coeffs_;
    for (int k = 0; k < order; ++k) {
        if (cur.size() <= 1) {
            cur.clear();
            break;
        }
        std::vector<Complex> next(cur.size() - 1);
        for (std::size_t i = 1; i < cur.size(); ++i) {
            next[i - 1] = static_cast<double>(i) * cur[i];
        }
        cur = std::move(next);
    }
    return ComplexPoly{std::move(cur)};
}

ComplexPoly ComplexPoly::trimmed(double rel_tol) const {
    const double scale = max_coeff_norm();
    std::vector<Complex> out = coeffs_;
    while (!out.empty() && std::abs(out.back()) <= rel_tol * scale) out.pop_back();
    return ComplexPoly{std::move(out)};
}

ComplexPoly ComplexPoly::monic(double rel_tol) const {
    ComplexPoly t = trimmed(rel_tol);
    if (t.coeffs_.empty()) throw ZeroPolynomial("monic normalization of the zero polynomial");
    const Complex lead = t.coeffs_.back();
    for (Complex& c : t.coeffs_) c /= lead;
    t.coeffs_.back() = Complex{1.0};
    return t;
}

std::vector<Complex> ComplexPoly::taylor_at(Complex center) const {
    // Repeated synthetic division by (t - center); out[j] = p^(j)(center)/j!.
    std::vector<Complex> a = coeffs_;
    const std::size_t n = a.size();
    std::vector<Complex> out(n, Complex{0.0});
    for (std::size_t j = 0; j < n; ++j) {
        Complex carry{0.0};
        for (std::size_t i = n - j; i > 0; --i) {
            Complex tmp = a[i - 1];
            a[i - 1] = carry;
            carry = tmp + center * carry;
        }
        out[j] = carry;
    }
    return out;
}

ComplexPoly ComplexPoly::operator+(const ComplexPoly& rhs) const {
    std::vector<Complex> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Complex{0.0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return ComplexPoly{std::move(out)};
}

ComplexPoly ComplexPoly::operator-(const ComplexPoly& rhs) const {
    return *this + rhs * Complex{-1.0};
}

ComplexPoly ComplexPoly::operator*(const ComplexPoly& rhs) const {
    if (coeffs_.empty() || rhs.coeffs_.empty()) return ComplexPoly{};
    std::vector<Complex> out(coeffs_.size() + rhs.coeffs_.size() - 1, Complex{0.0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return ComplexPoly{std::move(out)};
}

ComplexPoly ComplexPoly::operator*(Complex scalar) const {
    std::vector<Complex> out = coeffs_;
    for (Complex& c : out) c *= scalar;
    return ComplexPoly{std::move(out)};
}

SymPoint symmetrize(std::span<const Complex> points) {
    if (points.empty()) throw InputError("symmetrize needs at least one point");
    // Canonical ordering makes the result bit-for-bit permutation invariant.
    std::vector<Complex> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    const ComplexPoly p = ComplexPoly::from_roots(sorted);
    const auto& c = p.coeffs();  // degree n, monic
    const int n = static_cast<int>(points.size());
    std::vector<Complex> coords(static_cast<std::size_t>(n));
    double sign = -1.0;
    for (int j = 1; j <= n; ++j) {
        coords[static_cast<std::size_t>(j - 1)] = sign * c[static_cast<std::size_t>(n - j)];
        sign = -sign;
    }
    return SymPoint{std::move(coords)};
}

ComplexPoly poly_from_sym(const SymPoint& x) {
    const int n = x.n();
    if (n < 1) throw InputError("empty symmetric point");
    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1, Complex{0.0});
    coeffs[static_cast<std::size_t>(n)] = Complex{1.0};
    double sign = -1.0;
    for (int j = 1; j <= n; ++j) {
        coeffs[static_cast<std::size_t>(n - j)] = sign * x.coords[static_cast<std::size_t>(j - 1)];
        sign = -sign;
    }
    return ComplexPoly{std::move(coeffs)};
}

std::vector<Complex> roots(const ComplexPoly& p, const Config& cfg) {
    const ComplexPoly m = p.monic(0.0);
    if (m.degree() < 1) {
        if (p.max_coeff_norm() == 0.0) throw ZeroPolynomial("roots of the zero polynomial");
        throw InputError("roots of a constant polynomial");
    }
    return eigenvalues(companion_matrix(m), cfg);
}

}  // namespace specnp
