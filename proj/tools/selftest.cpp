#include "selftest.hpp"

#include <cmath>

#include "specnp/errors.hpp"
#include "specnp/testgen.hpp"

namespace specnp {

namespace {

struct Group {
    std::string name;
    int trials = 0;
    int failures = 0;
    double worst = 0.0;

    Json to_json() const {
        return Json{{"name", name}, {"trials", trials}, {"failures", failures}, {"worst", worst}};
    }
};

void record(Group& g, bool ok, double measure) {
    g.trials += 1;
    if (!ok) g.failures += 1;
    g.worst = std::max(g.worst, measure);
}

}  // namespace

int run_selftest(const Config& cfg, Json& out) {
    std::mt19937_64 rng(cfg.seed ? cfg.seed : 0x5eC0FFEEULL);
    const Config jcfg = gen::jordan_tolerances(cfg);
    std::vector<Group> groups;

    {
        Group g{"poly_roundtrip"};
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 8);
            std::vector<Complex> z;
            while (static_cast<int>(z.size()) < n) {
                const Complex c = gen::random_in_disc(rng, 0.95);
                bool far = true;
                for (const Complex& e : z) {
                    if (std::abs(c - e) < 0.02) far = false;
                }
                if (far) z.push_back(c);
            }
            const auto back = roots(poly_from_sym(symmetrize(z)), cfg);
            const double dist = gen::multiset_match_distance(z, back);
            record(g, dist <= 1e-8, dist);
        }
        groups.push_back(g);
    }

    {
        Group g{"companion_roundtrip"};
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 7);
            std::vector<Complex> z;
            for (int i = 0; i < n; ++i) z.push_back(gen::random_in_disc(rng, 0.95));
            const auto report = companion_roundtrip_check(symmetrize(z), cfg);
            record(g, report.passed, report.max_dev);
        }
        groups.push_back(g);
    }

    {
        Group g{"projection_axioms"};
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 7);
            Matrix a(n, n);
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) a(r, c) = Complex{unif(rng), unif(rng)};
            }
            const SpectralData sd = spectral_data(a, cfg);
            const Matrix id = Matrix::Identity(n, n);
            Matrix sum = Matrix::Zero(n, n);
            double dev = 0.0;
            for (std::size_t i = 0; i < sd.projections.size(); ++i) {
                const Matrix& e = sd.projections[i];
                sum += e;
                dev = std::max(dev, (e * e - e).norm());
                dev = std::max(dev, (a * e - e * a).norm());
                for (std::size_t j = 0; j < sd.projections.size(); ++j) {
                    if (j != i) dev = std::max(dev, (e * sd.projections[j]).norm());
                }
            }
            dev = std::max(dev, (sum - id).norm());
            record(g, dev <= 1e-7, dev);
        }
        groups.push_back(g);
    }

    {
        Group g{"predicted_minpoly_vs_oracle"};
        for (int trial = 0; trial < 100; ++trial) {
            const auto [a, f] = gen::random_funcalc_trial(rng, cfg);
            const Matrix fa = apply(f, a, jcfg);
            const ComplexPoly predicted = predicted_minpoly(f, a, jcfg).poly;
            const ComplexPoly oracle = minimal_polynomial_oracle(fa, jcfg);
            bool ok = predicted.degree() == oracle.degree();
            double measure = ok ? 0.0 : 1.0;
            if (ok && predicted.degree() >= 1) {
                const auto pr = gen::cluster_points(roots(predicted, cfg), 5e-3);
                const auto qr = gen::cluster_points(roots(oracle, cfg), 5e-3);
                measure = gen::weighted_match_distance(pr, qr);
                ok = measure <= 1e-6;
            }
            record(g, ok, measure);
        }
        groups.push_back(g);
    }

    {
        Group g{"calculus_algebra"};
        for (int trial = 0; trial < 50; ++trial) {
            const auto [a, f] = gen::random_funcalc_trial(rng, cfg);
            const auto [a2, gf_] = gen::random_funcalc_trial(rng, cfg);
            (void)a2;
            const HoloFunction& gf = gf_;
            const SpectralData sd = spectral_data(a, jcfg);
            const Matrix fa = apply(f, a, sd, jcfg);
            const Matrix ga = apply(gf, a, sd, jcfg);
            const double scale = std::max({1.0, fa.norm(), ga.norm()});
            double dev = (apply(product(f, gf), a, sd, jcfg) - fa * ga).norm() / scale;
            const Complex ca{0.7, -0.2}, cb{-0.3, 0.5};
            dev = std::max(dev, (apply(lincomb(ca, f, cb, gf), a, sd, jcfg) - ca * fa - cb * ga)
                                        .norm() /
                                    scale);
            dev = std::max(dev, (fa * ga - ga * fa).norm() / scale);

            // spectral mapping, compared through clustered multisets
            const auto lhs = gen::cluster_points(eigenvalues(fa, jcfg),
                                                 1e-3 * std::max(1.0, fa.norm()));
            std::vector<Complex> images;
            for (const auto& e : sd.eigs) {
                for (int m = 0; m < e.alg_mult; ++m) images.push_back(f.value(e.lambda, jcfg));
            }
            const auto rhs = gen::cluster_points(images, 1e-3 * std::max(1.0, fa.norm()));
            dev = std::max(dev, gen::weighted_match_distance(lhs, rhs));
            record(g, dev <= 1e-7, dev);
        }
        groups.push_back(g);
    }

    {
        Group g{"checker_soundness"};
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 3);
            const int big_n = 2 + static_cast<int>(rng() % 2);
            const double margin = 0.1 + 0.2 * static_cast<double>(rng() % 100) / 99.0;
            const auto dataset = random_feasible_dataset(rng(), n, big_n, margin, cfg);
            const Verdict v = (big_n == 2) ? check_two_point(dataset.data, cfg)
                                           : check_three_point(dataset.data, cfg);
            record(g, v.status == Status::Inconclusive, v.status == Status::Infeasible ? 1.0 : 0.0);
        }
        groups.push_back(g);
    }

    {
        Group g{"schwarz_bound"};
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 3);
            const auto dataset = random_feasible_dataset(rng(), n, 2, 0.2, cfg);
            const Matrix w0 = dataset.generator(Complex{0.0});
            const BlaschkeProduct b = minimal_blaschke(w0, cfg);
            const HoloFunction bf = HoloFunction::blaschke(b);
            auto disc_map = [&](Complex zeta) { return apply(bf, dataset.generator(zeta), cfg); };
            std::vector<Complex> samples;
            for (int i = 0; i < 64; ++i) samples.push_back(gen::random_in_disc(rng, 0.97));
            const SchwarzReport report = schwarz_check(disc_map, samples, cfg);
            record(g, report.passed, report.max_excess);
        }
        groups.push_back(g);
    }

    {
        Group g{"isospectral_path"};
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 5);
            Matrix a(n, n);
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) a(r, c) = Complex{unif(rng), unif(rng)};
            }
            const IsospectralPath path = isospectral_path(a, cfg);
            const SymPoint base = char_coords(a, cfg);
            const double tol = 1e-7 * std::pow(1.0 + a.norm(), n);
            double dev = (path.eval(Complex{1.0}) - a).norm() / std::max(1e-30, a.norm());
            bool ok = dev <= 1e-8;
            for (int i = 0; i < 16; ++i) {
                const Complex zeta =
                    (i < 8) ? Complex{i / 7.0} : Complex{2.0 * std::polar(1.0, 2.0 * M_PI * i / 8.0)};
                const SymPoint got = char_coords(path.eval(zeta), cfg);
                for (int j = 0; j < n; ++j) {
                    const double d = std::abs(got.coords[static_cast<std::size_t>(j)] -
                                              base.coords[static_cast<std::size_t>(j)]);
                    if (d > tol) ok = false;
                    dev = std::max(dev, d);
                }
            }
            record(g, ok, dev);
        }
        groups.push_back(g);
    }

    {
        Group g{"nilpotent_lincomb"};
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 7);
            std::vector<Complex> alphas(static_cast<std::size_t>(n));
            // well-scaled moduli keep the high nilpotent powers visible to the oracle
            for (auto& v : alphas) {
                v = std::polar(0.3 + 0.7 * static_cast<double>(rng() % 1000) / 999.0,
                               2.0 * M_PI * static_cast<double>(rng() % 1000) / 999.0);
            }
            // zero out a random prefix of the nilpotent part
            const int zeros = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            for (int j = 1; j <= zeros && j < n; ++j) alphas[static_cast<std::size_t>(j)] = 0.0;
            Matrix a = Matrix::Zero(n, n);
            for (int j = 0; j < n; ++j) {
                for (int r = 0; r + j < n; ++r) a(r, r + j) += alphas[static_cast<std::size_t>(j)];
            }
            const ComplexPoly predicted = lincomb_nilpotent_minpoly(alphas, cfg);
            const ComplexPoly oracle = minimal_polynomial_oracle(a, cfg);
            record(g, predicted.degree() == oracle.degree(),
                   std::abs(predicted.degree() - oracle.degree()));
        }
        groups.push_back(g);
    }

    int failed_groups = 0;
    Json results = Json::array();
    for (const Group& g : groups) {
        if (g.failures > 0) failed_groups += 1;
        results.push_back(g.to_json());
    }
    out = Json{{"selftest", std::move(results)},
               {"status", failed_groups == 0 ? "ok" : "failed"},
               {"failed_groups", failed_groups}};
    return failed_groups;
}

}  // namespace specnp
