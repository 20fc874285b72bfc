#include "specnp/testgen.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>

#include "specnp/errors.hpp"

namespace specnp::gen {

int JordanSpec::mult() const {
    int total = 0;
    for (int b : blocks) total += b;
    return total;
}

int JordanSpec::index() const {
    int largest = 0;
    for (int b : blocks) largest = std::max(largest, b);
    return largest;
}

Matrix jordan_matrix(const std::vector<JordanSpec>& spec) {
    int n = 0;
    for (const auto& s : spec) n += s.mult();
    if (n < 1) throw InputError("empty Jordan specification");
    Matrix j = Matrix::Zero(n, n);
    int offset = 0;
    for (const auto& s : spec) {
        for (int b : s.blocks) {
            for (int i = 0; i < b; ++i) {
                j(offset + i, offset + i) = s.lambda;
                if (i + 1 < b) j(offset + i, offset + i + 1) = Complex{1.0};
            }
            offset += b;
        }
    }
    return j;
}

Complex random_in_disc(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    while (true) {
        const Complex z{unif(rng), unif(rng)};
        if (std::abs(z) < 1.0) return radius * z;
    }
}

Matrix bounded_similarity(int n, std::mt19937_64& rng, double smin, double smax) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Matrix g(n, n), h(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            g(r, c) = Complex{unif(rng), unif(rng)};
            h(r, c) = Complex{unif(rng), unif(rng)};
        }
    }
    const Matrix q1 = Eigen::HouseholderQR<Matrix>(g).householderQ();
    const Matrix q2 = Eigen::HouseholderQR<Matrix>(h).householderQ();
    Eigen::VectorXcd sv(n);
    std::uniform_real_distribution<double> sdist(smin, smax);
    for (int i = 0; i < n; ++i) sv(i) = Complex{sdist(rng)};
    return q1 * sv.asDiagonal() * q2.adjoint();
}

Matrix conjugate(const Matrix& a, const Matrix& s) {
    return s * a * s.inverse();
}

std::vector<JordanSpec> random_jordan_spec(int max_n, int max_block, std::mt19937_64& rng,
                                           double min_sep, double radius) {
    if (max_n < 1 || max_block < 1) throw InputError("bad Jordan spec bounds");
    std::vector<JordanSpec> spec;
    int remaining = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
    while (remaining > 0) {
        Complex lambda;
        bool separated = false;
        for (int attempt = 0; attempt < 256 && !separated; ++attempt) {
            lambda = random_in_disc(rng, radius);
            separated = true;
            for (const auto& s : spec) {
                if (std::abs(lambda - s.lambda) < min_sep) separated = false;
            }
        }
        if (!separated) break;  // disc is crowded; settle for what we have
        JordanSpec s{lambda, {}};
        int alloc = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(remaining));
        while (alloc > 0) {
            const int b = 1 + static_cast<int>(
                              rng() % static_cast<std::uint64_t>(std::min(alloc, max_block)));
            s.blocks.push_back(b);
            alloc -= b;
        }
        remaining -= s.mult();
        spec.push_back(std::move(s));
    }
    if (spec.empty()) spec.push_back(JordanSpec{random_in_disc(rng, radius), {1}});
    return spec;
}

namespace {

double bottleneck_match(const std::vector<double>& dist, int n) {
    // dp over subsets of b; item i of a is matched when popcount reaches i+1.
    const std::size_t full = std::size_t{1} << n;
    std::vector<double> dp(full, 1e300);
    dp[0] = 0.0;
    for (std::size_t mask = 1; mask < full; ++mask) {
        const int i = __builtin_popcountll(mask) - 1;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (std::size_t{1} << j))) continue;
            const double prev = dp[mask ^ (std::size_t{1} << j)];
            const double cost = std::max(prev, dist[static_cast<std::size_t>(i) * n + j]);
            dp[mask] = std::min(dp[mask], cost);
        }
    }
    return dp[full - 1];
}

}  // namespace

double multiset_match_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) throw InputError("multiset sizes differ");
    const int n = static_cast<int>(a.size());
    if (n == 0) return 0.0;
    if (n > 16) throw InputError("multiset matching limited to 16 elements");

    std::vector<double> dist(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            dist[static_cast<std::size_t>(i) * n + j] = std::abs(a[i] - b[j]);
        }
    }
    return bottleneck_match(dist, n);
}

std::vector<WeightedPoint> cluster_points(const std::vector<Complex>& pts, double radius) {
    std::vector<WeightedPoint> out;
    for (const auto& group : cluster_groups(pts, radius)) {
        Complex mean{0.0};
        for (int i : group) mean += pts[static_cast<std::size_t>(i)];
        mean /= static_cast<double>(group.size());
        out.push_back(WeightedPoint{mean, static_cast<int>(group.size())});
    }
    return out;
}

double weighted_match_distance(const std::vector<WeightedPoint>& a,
                               const std::vector<WeightedPoint>& b) {
    if (a.size() != b.size()) return 1e300;
    const int n = static_cast<int>(a.size());
    if (n == 0) return 0.0;
    if (n > 16) throw InputError("multiset matching limited to 16 elements");
    std::vector<double> dist(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            dist[static_cast<std::size_t>(i) * n + j] =
                (a[i].mult == b[j].mult) ? std::abs(a[i].value - b[j].value) : 1e300;
        }
    }
    return bottleneck_match(dist, n);
}

Config jordan_tolerances(Config base) {
    base.cluster_tol = 1e-3;
    base.rank_tol = 1e-6;
    return base;
}

namespace {

// Blaschke product with zeros separated enough that derivative magnitudes at
// spectral points stay well scaled.
BlaschkeProduct random_blaschke(std::mt19937_64& rng, int max_degree, bool force_double_zero) {
    while (true) {
        BlaschkeProduct b;
        int degree = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
        if (force_double_zero) degree = std::max(degree, 2);
        int used = 0;
        if (force_double_zero) {
            b.zeros.push_back(BlaschkeZero{random_in_disc(rng, 0.6), 2});
            used = 2;
        }
        bool ok = true;
        while (used < degree) {
            const Complex a = random_in_disc(rng, 0.7);
            bool separated = true;
            for (const auto& z : b.zeros) {
                if (std::abs(a - z.a) < 0.3) separated = false;
            }
            if (!separated) {
                ok = false;
                break;
            }
            b.zeros.push_back(BlaschkeZero{a, 1});
            used += 1;
        }
        if (ok) return b;
    }
}

ComplexPoly random_polynomial(std::mt19937_64& rng, int max_degree) {
    const int degree = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
    std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) c = random_in_disc(rng, 1.0);
    while (std::abs(coeffs.back()) < 0.1) coeffs.back() = random_in_disc(rng, 1.0);
    return ComplexPoly{std::move(coeffs)};
}

double image_separation(const std::vector<Complex>& images) {
    double sep = 1e300;
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            sep = std::min(sep, std::abs(images[i] - images[j]));
        }
    }
    return sep;
}

}  // namespace

FuncalcTrial random_funcalc_trial(std::mt19937_64& rng, const Config& cfg) {
    for (int attempt = 0; attempt < 4096; ++attempt) {
        const int mode = static_cast<int>(rng() % 10);
        HoloFunction f = HoloFunction::identity();
        std::vector<JordanSpec> spec;

        if (mode >= 8) {
            // Eigenvalues sharing one image: preimages of a common target.
            const BlaschkeProduct b = random_blaschke(rng, 4, false);
            if (b.degree() < 2) continue;
            f = HoloFunction::blaschke(b);
            const Complex w = random_in_disc(rng, 0.4);
            std::vector<Complex> pre;
            try {
                pre = blaschke_preimage(b, w, cfg);
            } catch (const Error&) {
                continue;
            }
            if (pre.size() < 2) continue;
            bool usable = true;
            const HoloFunction fp = f.derivative();
            for (std::size_t i = 0; i < pre.size() && usable; ++i) {
                if (std::abs(fp.value(pre[i], cfg)) < 0.05) usable = false;
                for (std::size_t j = i + 1; j < pre.size(); ++j) {
                    if (std::abs(pre[i] - pre[j]) < 0.25) usable = false;
                }
            }
            if (!usable) continue;
            const int take = 2 + static_cast<int>(rng() % (pre.size() - 1));
            int total = 0;
            for (int i = 0; i < take && i < static_cast<int>(pre.size()); ++i) {
                const int block = 1 + static_cast<int>(rng() % 3);
                if (total + block > 8) break;
                spec.push_back(JordanSpec{pre[static_cast<std::size_t>(i)], {block}});
                total += block;
            }
            if (spec.size() < 2) continue;
        } else {
            const bool critical = mode >= 6;
            if (critical || (rng() % 2 == 0)) {
                const BlaschkeProduct b = random_blaschke(rng, 4, critical);
                f = HoloFunction::blaschke(b);
                spec = random_jordan_spec(critical ? 5 : 8, 4, rng, 0.3, 0.85);
                if (critical) {
                    // pin one eigenvalue, with a nontrivial block, at the double zero
                    const Complex a = b.zeros.front().a;
                    bool clash = false;
                    for (const auto& s : spec) {
                        if (std::abs(s.lambda - a) < 0.3) clash = true;
                    }
                    if (clash) continue;
                    const int block = 2 + static_cast<int>(rng() % 3);
                    spec.push_back(JordanSpec{a, {block}});
                }
            } else {
                f = HoloFunction::polynomial(random_polynomial(rng, 5));
                spec = random_jordan_spec(8, 4, rng, 0.3, 0.85);
            }
        }

        int total = 0;
        for (const auto& s : spec) total += s.mult();
        if (total < 1 || total > 8) continue;

        // Derivative must be healthy at every multiple eigenvalue that is not
        // an exact critical point, and distinct images must stay separated,
        // or the oracle has nothing sharp to see.
        const HoloFunction fp = f.derivative();
        std::vector<Complex> images;
        bool usable = true;
        for (const auto& s : spec) {
            Complex img, der;
            try {
                img = f.value(s.lambda, cfg);
                der = fp.value(s.lambda, cfg);
            } catch (const Error&) {
                usable = false;
                break;
            }
            images.push_back(img);
            const int ord = ord_of_vanishing(fp, s.lambda, s.index() + 1, cfg);
            if (s.index() >= 2 && ord == 0 && std::abs(der) < 0.05) usable = false;
        }
        if (!usable) continue;
        // Images may coincide only for the engineered shared-image trials.
        std::vector<Complex> distinct;
        for (const Complex& img : images) {
            bool seen = false;
            for (const Complex& d : distinct) {
                if (std::abs(img - d) < 1e-9) seen = true;
            }
            if (!seen) distinct.push_back(img);
        }
        if (distinct.size() > 1 && image_separation(distinct) < 0.05) continue;

        const Matrix j = jordan_matrix(spec);
        const Matrix s = bounded_similarity(static_cast<int>(j.rows()), rng);
        return FuncalcTrial{conjugate(j, s), std::move(f)};
    }
    throw NumericalError("trial generator failed to produce a usable instance");
}

}  // namespace specnp::gen
