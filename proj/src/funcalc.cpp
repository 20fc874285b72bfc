#include "specnp/funcalc.hpp"

#include <algorithm>
#include <cmath>

#include "specnp/errors.hpp"

namespace specnp {

namespace {

// Taylor coefficients of num/den at lambda, to `terms` coefficients.
std::vector<Complex> rational_taylor(const ComplexPoly& num, const ComplexPoly& den,
                                     Complex lambda, int terms, const Config& cfg) {
    std::vector<Complex> a = num.taylor_at(lambda);
    std::vector<Complex> b = den.taylor_at(lambda);
    a.resize(static_cast<std::size_t>(terms), Complex{0.0});
    b.resize(static_cast<std::size_t>(terms), Complex{0.0});
    const double den_scale = std::max(1.0, den.max_coeff_norm());
    if (std::abs(b[0]) <= cfg.pole_tol * den_scale) {
        throw PoleOnSpectrum("denominator vanishes within pole_tol of the evaluation point");
    }
    std::vector<Complex> q(static_cast<std::size_t>(terms), Complex{0.0});
    for (int l = 0; l < terms; ++l) {
        Complex acc = a[static_cast<std::size_t>(l)];
        for (int k = 1; k <= l; ++k) {
            acc -= b[static_cast<std::size_t>(k)] * q[static_cast<std::size_t>(l - k)];
        }
        q[static_cast<std::size_t>(l)] = acc / b[0];
    }
    return q;
}

double factorial(int j) {
    double f = 1.0;
    for (int k = 2; k <= j; ++k) f *= static_cast<double>(k);
    return f;
}

}  // namespace

HoloFunction HoloFunction::polynomial(ComplexPoly p) {
    return HoloFunction{Poly{std::move(p)}};
}
HoloFunction HoloFunction::rational(ComplexPoly num, ComplexPoly den) {
    if (den.max_coeff_norm() == 0.0) throw ZeroPolynomial("rational with zero denominator");
    return HoloFunction{Rational{std::move(num), std::move(den)}};
}
HoloFunction HoloFunction::blaschke(BlaschkeProduct b) {
    return HoloFunction{Blaschke{std::move(b)}};
}
HoloFunction HoloFunction::table(std::vector<TablePoint> points) {
    return HoloFunction{Table{std::move(points)}};
}
HoloFunction HoloFunction::identity() {
    return polynomial(ComplexPoly::monomial(1));
}

const char* HoloFunction::kind_name() const {
    if (std::holds_alternative<Poly>(impl_)) return "polynomial";
    if (std::holds_alternative<Rational>(impl_)) return "rational";
    if (std::holds_alternative<Blaschke>(impl_)) return "blaschke";
    return "table";
}

std::pair<ComplexPoly, ComplexPoly> HoloFunction::as_rational() const {
    if (const auto* p = std::get_if<Poly>(&impl_)) {
        return {p->p, ComplexPoly::constant(Complex{1.0})};
    }
    if (const auto* r = std::get_if<Rational>(&impl_)) {
        return {r->num, r->den};
    }
    if (const auto* b = std::get_if<Blaschke>(&impl_)) {
        return {b->b.numerator(), b->b.denominator()};
    }
    throw InputError("a table function has no rational form");
}

std::vector<Complex> HoloFunction::derivs(Complex lambda, int j_max, const Config& cfg) const {
    if (j_max < 0) throw InputError("j_max must be nonnegative");
    const int terms = j_max + 1;
    if (const auto* t = std::get_if<Table>(&impl_)) {
        const double match = cfg.cluster_tol * std::max(1.0, std::abs(lambda));
        for (const TablePoint& pt : t->points) {
            if (std::abs(pt.lambda - lambda) <= match) {
                if (static_cast<int>(pt.derivatives.size()) < terms) {
                    throw InsufficientDerivatives("tabulated point lacks requested derivatives");
                }
                return {pt.derivatives.begin(), pt.derivatives.begin() + terms};
            }
        }
        throw DomainViolation("lambda is not a tabulated point");
    }
    const auto [num, den] = as_rational();
    std::vector<Complex> taylor = rational_taylor(num, den, lambda, terms, cfg);
    for (int j = 0; j < terms; ++j) taylor[static_cast<std::size_t>(j)] *= factorial(j);
    return taylor;
}

Complex HoloFunction::value(Complex lambda, const Config& cfg) const {
    return derivs(lambda, 0, cfg)[0];
}

HoloFunction HoloFunction::derivative() const {
    if (const auto* p = std::get_if<Poly>(&impl_)) {
        return polynomial(p->p.derivative());
    }
    if (std::holds_alternative<Rational>(impl_) || std::holds_alternative<Blaschke>(impl_)) {
        const auto [num, den] = as_rational();
        return rational(num.derivative() * den - num * den.derivative(), den * den);
    }
    const auto& t = std::get<Table>(impl_);
    std::vector<TablePoint> shifted;
    shifted.reserve(t.points.size());
    for (const TablePoint& pt : t.points) {
        std::vector<Complex> d;
        if (pt.derivatives.size() > 1) {
            d.assign(pt.derivatives.begin() + 1, pt.derivatives.end());
        }
        shifted.push_back(TablePoint{pt.lambda, std::move(d)});
    }
    return table(std::move(shifted));
}

HoloFunction product(const HoloFunction& f, const HoloFunction& g) {
    if (f.is_table() || g.is_table()) throw InputError("cannot multiply table functions");
    if (const auto* fp = f.get_if<HoloFunction::Poly>()) {
        if (const auto* gp = g.get_if<HoloFunction::Poly>()) {
            return HoloFunction::polynomial(fp->p * gp->p);
        }
    }
    if (const auto* fb = f.get_if<HoloFunction::Blaschke>()) {
        if (const auto* gb = g.get_if<HoloFunction::Blaschke>()) {
            BlaschkeProduct merged = fb->b;
            merged.zeros.insert(merged.zeros.end(), gb->b.zeros.begin(), gb->b.zeros.end());
            merged.front *= gb->b.front;
            return HoloFunction::blaschke(std::move(merged));
        }
    }
    const auto [fn, fd] = f.as_rational();
    const auto [gn, gd] = g.as_rational();
    return HoloFunction::rational(fn * gn, fd * gd);
}

HoloFunction lincomb(Complex a, const HoloFunction& f, Complex b, const HoloFunction& g) {
    if (f.is_table() || g.is_table()) throw InputError("cannot combine table functions");
    if (const auto* fp = f.get_if<HoloFunction::Poly>()) {
        if (const auto* gp = g.get_if<HoloFunction::Poly>()) {
            return HoloFunction::polynomial(fp->p * a + gp->p * b);
        }
    }
    const auto [fn, fd] = f.as_rational();
    const auto [gn, gd] = g.as_rational();
    return HoloFunction::rational(fn * gd * a + gn * fd * b, fd * gd);
}

Matrix apply(const HoloFunction& f, const Matrix& a, const SpectralData& sd, const Config& cfg) {
    const Eigen::Index n = a.rows();
    if (sd.projections.empty()) throw InputError("apply needs spectral data with projections");
    const Matrix id = Matrix::Identity(n, n);
    Matrix result = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < sd.eigs.size(); ++i) {
        const EigenvalueInfo& e = sd.eigs[i];
        const std::vector<Complex> d = f.derivs(e.lambda, e.index - 1, cfg);
        // Taylor block sum_{j < m} f^(j)(lambda)/j! (A - lambda I)^j, Horner form.
        const Matrix shifted = a - e.lambda * id;
        Matrix block = (d[static_cast<std::size_t>(e.index - 1)] / factorial(e.index - 1)) * id;
        for (int j = e.index - 2; j >= 0; --j) {
            block = block * shifted + (d[static_cast<std::size_t>(j)] / factorial(j)) * id;
        }
        result += block * sd.projections[i];
    }
    return result;
}

Matrix apply(const HoloFunction& f, const Matrix& a, const Config& cfg) {
    return apply(f, a, spectral_data(a, cfg), cfg);
}

int ord_of_vanishing(const HoloFunction& f, Complex lambda, int cap, const Config& cfg) {
    if (cap < 1) throw InputError("cap must be positive");
    if (f.is_table()) {
        const auto* t = f.get_if<HoloFunction::Table>();
        const double match = cfg.cluster_tol * std::max(1.0, std::abs(lambda));
        for (const TablePoint& pt : t->points) {
            if (std::abs(pt.lambda - lambda) > match) continue;
            double scale = 0.0;
            for (const Complex& v : pt.derivatives) scale = std::max(scale, std::abs(v));
            if (scale == 0.0) return cap;
            const int avail = static_cast<int>(pt.derivatives.size());
            for (int j = 0; j < std::min(avail, cap); ++j) {
                if (std::abs(pt.derivatives[static_cast<std::size_t>(j)]) > cfg.ord_tol * scale) {
                    return j;
                }
            }
            return cap;
        }
        throw DomainViolation("lambda is not a tabulated point");
    }
    const auto [num, den] = f.as_rational();
    if (den.degree() >= 1 &&
        std::abs(den.eval(lambda)) <= cfg.pole_tol * std::max(1.0, den.max_coeff_norm())) {
        throw PoleOnSpectrum("vanishing order queried within pole_tol of a pole");
    }
    if (num.is_zero(cfg.zero_tol)) return cap;
    const std::vector<Complex> c = num.taylor_at(lambda);
    double scale = 0.0;
    for (const Complex& v : c) scale = std::max(scale, std::abs(v));
    for (int j = 0; j < static_cast<int>(c.size()) && j < cap; ++j) {
        if (std::abs(c[static_cast<std::size_t>(j)]) > cfg.ord_tol * scale) return j;
    }
    return cap;
}

MinpolyPrediction predicted_minpoly(const HoloFunction& f, const Matrix& a, const Config& cfg) {
    const SpectralData sd = spectral_data(a, cfg, /*with_projections=*/false);
    const HoloFunction fprime = f.derivative();

    std::vector<Complex> images;
    std::vector<int> exponent;
    bool all_capped = true;
    for (const EigenvalueInfo& e : sd.eigs) {
        images.push_back(f.value(e.lambda, cfg));
        const int cap = e.index;
        const int ord = ord_of_vanishing(fprime, e.lambda, cap, cfg);
        if (ord < cap) all_capped = false;
        exponent.push_back((e.index - 1) / (ord + 1) + 1);
    }

    double image_scale = 1.0;
    for (const Complex& v : images) image_scale = std::max(image_scale, std::abs(v));
    const auto groups = cluster_groups(images, cfg.cluster_tol * image_scale);

    std::vector<Complex> rts;
    for (const auto& group : groups) {
        Complex nu{0.0};
        int k = 1;
        for (int i : group) {
            nu += images[static_cast<std::size_t>(i)];
            k = std::max(k, exponent[static_cast<std::size_t>(i)]);
        }
        nu /= static_cast<double>(group.size());
        for (int rep = 0; rep < k; ++rep) rts.push_back(nu);
    }
    return MinpolyPrediction{ComplexPoly::from_roots(rts), all_capped};
}

ComplexPoly lincomb_nilpotent_minpoly(std::span<const Complex> alphas, const Config& cfg) {
    const int n = static_cast<int>(alphas.size());
    if (n < 2) throw InputError("need at least two coefficients");
    double scale = 0.0;
    for (int j = 1; j < n; ++j) scale = std::max(scale, std::abs(alphas[static_cast<std::size_t>(j)]));
    int l = n;
    if (scale > 0.0) {
        for (int j = 1; j < n; ++j) {
            if (std::abs(alphas[static_cast<std::size_t>(j)]) > cfg.zero_tol * scale) {
                l = j;
                break;
            }
        }
    }
    const int exp = (n - 1) / l + 1;
    std::vector<Complex> rts(static_cast<std::size_t>(exp), alphas[0]);
    return ComplexPoly::from_roots(rts);
}

}  // namespace specnp
