#include "specnp/nptest.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "specnp/errors.hpp"

namespace specnp {

namespace {

constexpr double kUnimodularSlack = 1e-6;

// The three-point core works against this view of B_k so the disc
// specialization and the provider-driven general path share one evaluation.
struct BFunctionView {
    std::function<Complex(Complex)> eval;
    std::function<int(Complex, int)> ord_deriv;               // lambda, cap
    std::function<std::vector<Complex>(Complex)> preimage;    // solutions inside the domain
};

struct ImageGroup {
    Complex rep;
    int q = 1;  // exponent from the spectral preimages
};

std::vector<ImageGroup> group_images(const std::vector<Complex>& images,
                                     const SpectralData& sd, const BFunctionView& b,
                                     const Config& cfg) {
    double scale = 1.0;
    for (const Complex& v : images) scale = std::max(scale, std::abs(v));
    const auto groups = cluster_groups(images, cfg.cluster_tol * scale);
    std::vector<ImageGroup> out;
    out.reserve(groups.size());
    for (const auto& group : groups) {
        ImageGroup g;
        Complex mean{0.0};
        for (int i : group) {
            const EigenvalueInfo& e = sd.eigs[static_cast<std::size_t>(i)];
            mean += images[static_cast<std::size_t>(i)];
            const int ord = b.ord_deriv(e.lambda, e.index);
            g.q = std::max(g.q, (e.index - 1) / (ord + 1) + 1);
        }
        g.rep = mean / static_cast<double>(group.size());
        out.push_back(g);
    }
    return out;
}

bool preimage_inside_spectrum(const std::vector<Complex>& pre, const SpectralData& sd,
                              const Config& cfg) {
    const double radius = cfg.cluster_tol * std::max(1.0, sd.source_norm);
    for (const Complex& p : pre) {
        bool matched = false;
        for (const auto& e : sd.eigs) {
            if (std::abs(p - e.lambda) <= radius) {
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

ThreePointReport evaluate_three_point_k(int k, int high, int low, const BFunctionView& b,
                                        const std::vector<SpectralData>& sd,
                                        const std::vector<Complex>& nodes, const Config& cfg) {
    ThreePointReport report;
    report.k = k;
    report.high = high;
    report.low = low;

    const DiscAutomorphism psi = disc_automorphism(nodes[static_cast<std::size_t>(k)]);
    const Complex psi_high = psi(nodes[static_cast<std::size_t>(high)]);
    const Complex psi_low = psi(nodes[static_cast<std::size_t>(low)]);
    report.radius_high = std::abs(psi_high);
    report.radius_low = std::abs(psi_low);

    const SpectralData& sd_high = sd[static_cast<std::size_t>(high)];
    const SpectralData& sd_low = sd[static_cast<std::size_t>(low)];

    std::vector<Complex> images_high, images_low;
    for (const auto& e : sd_high.eigs) images_high.push_back(b.eval(e.lambda));
    for (const auto& e : sd_low.eigs) images_low.push_back(b.eval(e.lambda));
    for (const Complex& v : images_high) {
        report.max_mod_high = std::max(report.max_mod_high, std::abs(v));
    }
    for (const Complex& v : images_low) {
        report.max_mod_low = std::max(report.max_mod_low, std::abs(v));
    }

    // Branch 1: strict containment, conservatively failed within the margin
    // band around the boundary circles, then the two-sided product inequality.
    report.containment_high = report.max_mod_high < report.radius_high - cfg.verdict_margin;
    report.containment_low = report.max_mod_low < report.radius_low - cfg.verdict_margin;
    if (report.containment_high && report.containment_low) {
        const std::vector<ImageGroup> groups_high = group_images(images_high, sd_high, b, cfg);
        const std::vector<ImageGroup> groups_low = group_images(images_low, sd_low, b, cfg);

        double lhs = 0.0;
        for (const ImageGroup& mu : groups_low) {
            double prod = 1.0;
            for (const ImageGroup& nu : groups_high) {
                prod *= std::pow(mobius_distance(mu.rep / psi_low, nu.rep / psi_high), nu.q);
            }
            lhs = std::max(lhs, prod);
        }
        for (const ImageGroup& mu : groups_high) {
            double prod = 1.0;
            for (const ImageGroup& nu : groups_low) {
                prod *= std::pow(mobius_distance(mu.rep / psi_high, nu.rep / psi_low), nu.q);
            }
            lhs = std::max(lhs, prod);
        }
        report.inequality_evaluated = true;
        report.lhs = lhs;
        report.rhs = mobius_distance(nodes[static_cast<std::size_t>(low)],
                                     nodes[static_cast<std::size_t>(high)]);
        report.branch1 = lhs <= report.rhs + cfg.verdict_margin;
    }

    // Branch 2: any rotation placing psi_k values inside the image spectra is
    // a candidate; a candidate passes when both full preimages land inside
    // the corresponding target spectra.
    auto consider = [&](Complex image, Complex psi_value) {
        CandidateRecord rec;
        rec.u = image / psi_value;
        rec.modulus = std::abs(rec.u);
        rec.unimodular = std::abs(rec.modulus - 1.0) <= kUnimodularSlack;
        if (rec.unimodular) {
            const Complex unit = rec.u / rec.modulus;
            rec.preimage_high_ok =
                preimage_inside_spectrum(b.preimage(unit * psi_high), sd_high, cfg);
            rec.preimage_low_ok =
                preimage_inside_spectrum(b.preimage(unit * psi_low), sd_low, cfg);
            if (rec.preimage_high_ok && rec.preimage_low_ok) report.branch2 = true;
        }
        report.candidates.push_back(rec);
    };
    for (const Complex& v : images_high) consider(v, psi_high);
    for (const Complex& v : images_low) consider(v, psi_low);

    return report;
}

BFunctionView disc_view(const BlaschkeProduct& blaschke, const Config& cfg) {
    const HoloFunction as_holo = HoloFunction::blaschke(blaschke);
    const HoloFunction deriv = as_holo.derivative();
    BFunctionView view;
    view.eval = [blaschke, &cfg](Complex t) { return blaschke_eval(blaschke, t, cfg); };
    view.ord_deriv = [deriv, &cfg](Complex lambda, int cap) {
        return ord_of_vanishing(deriv, lambda, cap, cfg);
    };
    view.preimage = [blaschke, &cfg](Complex w) { return blaschke_preimage(blaschke, w, cfg); };
    return view;
}

}  // namespace

int InterpolationData::dim() const {
    return targets.empty() ? 0 : static_cast<int>(targets.front().rows());
}

void InterpolationData::validate(const Config& cfg) const {
    if (nodes.size() != targets.size()) {
        throw DimensionMismatch("node and target counts differ");
    }
    if (nodes.size() < 2) throw InputError("need at least two nodes");
    for (const Complex& z : nodes) {
        if (std::abs(z) >= 1.0) throw OutOfDisc("node outside the open unit disc");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (std::abs(nodes[i] - nodes[j]) <= cfg.node_tol) {
                throw InputError("nodes are not pairwise distinct");
            }
        }
    }
    const int n = dim();
    for (const Matrix& w : targets) {
        if (w.rows() != w.cols()) throw DimensionMismatch("target matrix is not square");
        if (static_cast<int>(w.rows()) != n) throw DimensionMismatch("targets differ in size");
        for (const Complex& lambda : eigenvalues(w, cfg)) {
            if (std::abs(lambda) >= 1.0 - cfg.eps_boundary) {
                throw SpectrumNotInDisc("target spectrum touches the unit circle");
            }
        }
    }
}

Verdict check_two_point(const InterpolationData& data, const Config& cfg) {
    if (data.size() != 2) throw DimensionMismatch("two-point check needs exactly two nodes");
    data.validate(cfg);

    const SpectralData sd1 = spectral_data(data.targets[0], cfg, /*with_projections=*/false);
    const SpectralData sd2 = spectral_data(data.targets[1], cfg, /*with_projections=*/false);
    const BlaschkeProduct b1 = minimal_blaschke(sd1, cfg);
    const BlaschkeProduct b2 = minimal_blaschke(sd2, cfg);

    TwoPointWitness witness;
    witness.rhs = mobius_distance(data.nodes[0], data.nodes[1]);
    for (const auto& e : sd2.eigs) {
        const double v = std::abs(blaschke_eval(b1, e.lambda, cfg));
        if (v > witness.lhs) {
            witness.lhs = v;
            witness.side = 0;
            witness.arg_max = e.lambda;
        }
    }
    for (const auto& e : sd1.eigs) {
        const double v = std::abs(blaschke_eval(b2, e.lambda, cfg));
        if (v > witness.lhs) {
            witness.lhs = v;
            witness.side = 1;
            witness.arg_max = e.lambda;
        }
    }

    Verdict verdict;
    verdict.status = (witness.lhs > witness.rhs + cfg.verdict_margin) ? Status::Infeasible
                                                                      : Status::Inconclusive;
    verdict.two_point = witness;
    return verdict;
}

int q_exponent(Complex nu, int j, int k, const InterpolationData& data, const Config& cfg) {
    const int count = data.size();
    if (j < 0 || j >= count || k < 0 || k >= count || j == k) {
        throw InputError("q_exponent indices out of range");
    }
    const SpectralData sd_j = spectral_data(data.targets[static_cast<std::size_t>(j)], cfg, false);
    const SpectralData sd_k = spectral_data(data.targets[static_cast<std::size_t>(k)], cfg, false);
    const BlaschkeProduct b = minimal_blaschke(sd_k, cfg);
    const HoloFunction deriv = HoloFunction::blaschke(b).derivative();

    double scale = std::max(1.0, std::abs(nu));
    std::vector<Complex> images;
    for (const auto& e : sd_j.eigs) {
        images.push_back(blaschke_eval(b, e.lambda, cfg));
        scale = std::max(scale, std::abs(images.back()));
    }
    int best = -1;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (std::abs(images[i] - nu) > cfg.cluster_tol * scale) continue;
        const EigenvalueInfo& e = sd_j.eigs[i];
        const int ord = ord_of_vanishing(deriv, e.lambda, e.index, cfg);
        best = std::max(best, (e.index - 1) / (ord + 1) + 1);
    }
    if (best < 0) throw EmptyPreimage("no spectral preimage maps to nu within cluster_tol");
    return best;
}

Verdict check_three_point(const InterpolationData& data, const Config& cfg) {
    if (data.size() != 3) throw DimensionMismatch("three-point check needs exactly three nodes");
    data.validate(cfg);

    std::vector<SpectralData> sd;
    sd.reserve(3);
    for (const Matrix& w : data.targets) {
        sd.push_back(spectral_data(w, cfg, /*with_projections=*/false));
    }

    Verdict verdict;
    for (int k = 0; k < 3; ++k) {
        const int high = (k == 2) ? 1 : 2;
        const int low = (k == 0) ? 1 : 0;
        const BlaschkeProduct b = minimal_blaschke(sd[static_cast<std::size_t>(k)], cfg);
        ThreePointReport report =
            evaluate_three_point_k(k, high, low, disc_view(b, cfg), sd, data.nodes, cfg);
        if (!report.branch1 && !report.branch2 && verdict.witness_k < 0) {
            verdict.witness_k = k;
        }
        verdict.three_point.push_back(std::move(report));
    }
    verdict.status = (verdict.witness_k >= 0) ? Status::Infeasible : Status::Inconclusive;
    return verdict;
}

SchwarzReport schwarz_check(const std::function<Matrix(Complex)>& disc_map,
                            std::span<const Complex> samples, const Config& cfg) {
    const double rho0 = spectral_radius(disc_map(Complex{0.0}), cfg);
    if (rho0 > cfg.schwarz_tol) {
        throw InputError("disc map does not vanish spectrally at the origin");
    }
    SchwarzReport report;
    for (const Complex& zeta : samples) {
        const double rho = spectral_radius(disc_map(zeta), cfg);
        const double bound = std::abs(zeta) + cfg.schwarz_tol;
        report.samples += 1;
        report.max_excess = std::max(report.max_excess, rho - std::abs(zeta));
        if (rho > bound) {
            report.passed = false;
            report.violations.push_back(SchwarzViolation{zeta, rho, bound});
        }
    }
    return report;
}

FeasibleDataset random_feasible_dataset(std::uint64_t seed, int n, int big_n, double margin,
                                        const Config& cfg) {
    if (big_n != 2 && big_n != 3) throw InputError("dataset size must be 2 or 3");
    if (n < 2) throw InputError("dataset dimension must be at least 2");
    if (margin <= 0.0 || margin >= 1.0) throw InputError("margin must lie in (0, 1)");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const int degree = static_cast<int>(rng() % 4);

    auto coeffs = std::make_shared<std::vector<Matrix>>();
    for (int d = 0; d <= degree; ++d) {
        Matrix c(n, n);
        for (int r = 0; r < n; ++r) {
            for (int col = 0; col < n; ++col) {
                c(r, col) = Complex{unif(rng), unif(rng)} / std::sqrt(static_cast<double>(n));
            }
        }
        coeffs->push_back(std::move(c));
    }
    auto poly_at = [coeffs, n](Complex zeta) {
        Matrix acc = Matrix::Zero(n, n);
        for (std::size_t d = coeffs->size(); d > 0; --d) {
            acc = acc * zeta + (*coeffs)[d - 1];
        }
        return acc;
    };

    double max_rho = 0.0;
    for (int i = 0; i < 512; ++i) {
        const double theta = 2.0 * M_PI * i / 512.0;
        max_rho = std::max(max_rho, spectral_radius(poly_at(std::polar(1.0, theta)), cfg));
    }
    const double scale = (max_rho > 1e-12) ? (1.0 - margin) / max_rho : 1.0;
    auto generator = [poly_at, scale](Complex zeta) { return Matrix(scale * poly_at(zeta)); };

    InterpolationData data;
    while (static_cast<int>(data.nodes.size()) < big_n) {
        const Complex candidate{0.85 * unif(rng), 0.85 * unif(rng)};
        if (std::abs(candidate) > 0.85) continue;
        bool far = true;
        for (const Complex& existing : data.nodes) {
            if (std::abs(candidate - existing) < 0.1) far = false;
        }
        if (far) data.nodes.push_back(candidate);
    }
    for (const Complex& zeta : data.nodes) data.targets.push_back(generator(zeta));
    return FeasibleDataset{std::move(data), std::move(generator)};
}

HoloFunction DiscProvider::extremal(Complex lambda, Complex z, const Config& cfg) const {
    const CaratheodoryExtremal e = caratheodory_extremal_disc(lambda, z, cfg);
    BlaschkeProduct b;
    b.zeros.push_back(BlaschkeZero{lambda, 1});
    b.front = e.unimodular;
    return HoloFunction::blaschke(std::move(b));
}

double DiscProvider::distance(Complex lambda, Complex z, const Config& cfg) const {
    (void)cfg;
    return mobius_distance(lambda, z);
}

bool DiscProvider::contains(Complex point) const {
    return std::abs(point) < 1.0;
}

std::vector<Verdict> check_three_point_general(const InterpolationData& data,
                                               const CaratheodoryProvider& provider,
                                               std::span<const Complex> z_samples,
                                               const Config& cfg) {
    if (data.size() != 3) throw DimensionMismatch("three-point check needs exactly three nodes");
    data.validate(cfg);

    std::vector<SpectralData> sd;
    for (const Matrix& w : data.targets) {
        sd.push_back(spectral_data(w, cfg, /*with_projections=*/false));
    }

    std::vector<Verdict> verdicts;
    for (const Complex& z : z_samples) {
        Verdict verdict;
        for (int k = 0; k < 3; ++k) {
            const int high = (k == 2) ? 1 : 2;
            const int low = (k == 0) ? 1 : 0;

            // B_{k,z} = prod of extremals through (lambda, z), lambda in the
            // spectrum of W_k, raised to the minimal-polynomial indices.
            const SpectralData& sk = sd[static_cast<std::size_t>(k)];
            bool z_on_spectrum = false;
            for (const auto& e : sk.eigs) {
                if (std::abs(z - e.lambda) <= cfg.node_tol) z_on_spectrum = true;
            }
            if (z_on_spectrum) continue;  // z must avoid sigma(W_k)

            HoloFunction b = provider.extremal(sk.eigs[0].lambda, z, cfg);
            for (int rep = 1; rep < sk.eigs[0].index; ++rep) {
                b = product(b, provider.extremal(sk.eigs[0].lambda, z, cfg));
            }
            for (std::size_t i = 1; i < sk.eigs.size(); ++i) {
                for (int rep = 0; rep < sk.eigs[i].index; ++rep) {
                    b = product(b, provider.extremal(sk.eigs[i].lambda, z, cfg));
                }
            }

            const HoloFunction deriv = b.derivative();
            BFunctionView view;
            view.eval = [&b, &cfg](Complex t) { return b.value(t, cfg); };
            view.ord_deriv = [&deriv, &cfg](Complex lambda, int cap) {
                return ord_of_vanishing(deriv, lambda, cap, cfg);
            };
            view.preimage = [&b, &provider, &cfg](Complex w) {
                const auto [num, den] = b.as_rational();
                std::vector<Complex> inside;
                for (const Complex& r : roots(num - den * w, cfg)) {
                    if (provider.contains(r)) inside.push_back(r);
                }
                return inside;
            };

            ThreePointReport report =
                evaluate_three_point_k(k, high, low, view, sd, data.nodes, cfg);
            if (!report.branch1 && !report.branch2 && verdict.witness_k < 0) {
                verdict.witness_k = k;
            }
            verdict.three_point.push_back(std::move(report));
        }
        verdict.status = (verdict.witness_k >= 0) ? Status::Infeasible : Status::Inconclusive;
        verdicts.push_back(std::move(verdict));
    }
    return verdicts;
}

}  // namespace specnp
