#include "specnp/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "specnp/errors.hpp"

namespace specnp {

namespace {

void check_square(const Matrix& a, const Config& cfg) {
    if (a.rows() != a.cols()) throw DimensionMismatch("matrix is not square");
    if (a.rows() < 1) throw InputError("empty matrix");
    if (a.rows() > cfg.max_dim) throw InputError("matrix dimension exceeds max_dim");
}

// Truncated Taylor coefficients at `center` of prod (t - roots[j])^mult[j],
// excluding index `skip`. Only the first `terms` coefficients are kept.
std::vector<Complex> product_series(const std::vector<EigenvalueInfo>& eigs, int skip,
                                    Complex center, int terms) {
    std::vector<Complex> series(static_cast<std::size_t>(terms), Complex{0.0});
    series[0] = Complex{1.0};
    for (std::size_t j = 0; j < eigs.size(); ++j) {
        if (static_cast<int>(j) == skip) continue;
        // factor (x + (center - lambda_j)) applied index_j times
        const Complex base = center - eigs[j].lambda;
        for (int rep = 0; rep < eigs[j].index; ++rep) {
            Complex prev{0.0};
            for (int i = 0; i < terms; ++i) {
                Complex cur = series[static_cast<std::size_t>(i)];
                series[static_cast<std::size_t>(i)] = cur * base + prev;
                prev = cur;
            }
        }
    }
    return series;
}

// Reciprocal power series of q to `terms` coefficients; q[0] must be nonzero.
std::vector<Complex> series_inverse(const std::vector<Complex>& q, int terms) {
    std::vector<Complex> inv(static_cast<std::size_t>(terms), Complex{0.0});
    inv[0] = Complex{1.0} / q[0];
    for (int l = 1; l < terms; ++l) {
        Complex acc{0.0};
        for (int k = 1; k <= l; ++k) {
            acc += q[static_cast<std::size_t>(k)] * inv[static_cast<std::size_t>(l - k)];
        }
        inv[static_cast<std::size_t>(l)] = -acc / q[0];
    }
    return inv;
}

}  // namespace

std::vector<Complex> eigenvalues(const Matrix& a, const Config& cfg) {
    check_square(a, cfg);
    if (a.rows() == 1) return {a(0, 0)};
    Eigen::ComplexSchur<Matrix> schur(a, /*computeU=*/false);
    if (schur.info() != Eigen::Success) {
        throw NoConvergence("eigenvalue QR iteration did not converge");
    }
    std::vector<Complex> out(static_cast<std::size_t>(a.rows()));
    for (Eigen::Index i = 0; i < a.rows(); ++i) out[static_cast<std::size_t>(i)] = schur.matrixT()(i, i);
    return out;
}

std::vector<std::vector<int>> cluster_groups(const std::vector<Complex>& values, double radius) {
    const std::size_t m = values.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (std::abs(values[i] - values[j]) <= radius) parent[find(i)] = find(j);
        }
    }
    std::vector<std::vector<int>> groups;
    std::vector<int> slot(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(slot[root])].push_back(static_cast<int>(i));
    }
    return groups;
}

std::vector<Cluster> cluster(const std::vector<Complex>& values, const Config& cfg,
                             double source_norm) {
    if (values.empty()) return {};
    const double radius = cfg.cluster_tol * std::max(1.0, source_norm);
    std::vector<Cluster> out;
    for (const auto& group : cluster_groups(values, radius)) {
        Complex mean{0.0};
        for (int i : group) mean += values[static_cast<std::size_t>(i)];
        mean /= static_cast<double>(group.size());
        out.push_back(Cluster{mean, static_cast<int>(group.size())});
    }
    return out;
}

int numerical_rank(const Matrix& m, double rel_tol, double zero_floor) {
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= zero_floor) return 0;
    const double cut = rel_tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cut && sv(i) > 0.0) ++rank;
    }
    return rank;
}

int eigenvalue_index(const Matrix& a, Complex lambda, const Config& cfg) {
    check_square(a, cfg);
    const Eigen::Index n = a.rows();
    const Matrix shifted = a - lambda * Matrix::Identity(n, n);
    // A power of the shifted matrix whose norm falls to the rank_tol scale of
    // the source is the zero matrix up to the accuracy of the cluster
    // representative; a cut relative to its own largest singular value would
    // count noise as rank. The floor for the j-th power grows with the norm
    // of the shifted matrix.
    const double zero_scale = cfg.rank_tol * std::max(1.0, a.norm());
    const double floor_base = std::max(shifted.norm(), zero_scale);
    Matrix power = shifted;
    double floor_j = zero_scale;
    int prev_rank = numerical_rank(power, cfg.rank_tol, floor_j);
    if (prev_rank == static_cast<int>(n)) {
        throw NotAnEigenvalue("shifted matrix has full numerical rank");
    }
    for (int j = 1; j <= static_cast<int>(n); ++j) {
        Matrix next = power * shifted;
        floor_j *= floor_base;
        const int next_rank = numerical_rank(next, cfg.rank_tol, floor_j);
        if (next_rank == prev_rank) return j;
        power = std::move(next);
        prev_rank = next_rank;
    }
    return static_cast<int>(n);
}

int SpectralData::dim() const {
    int total = 0;
    for (const auto& e : eigs) total += e.alg_mult;
    return total;
}

int SpectralData::total_index() const {
    int total = 0;
    for (const auto& e : eigs) total += e.index;
    return total;
}

SpectralData spectral_data(const Matrix& a, const Config& cfg, bool with_projections) {
    check_square(a, cfg);
    SpectralData sd;
    sd.source_norm = a.norm();

    const std::vector<Complex> eigs = eigenvalues(a, cfg);
    const std::vector<Cluster> clusters = cluster(eigs, cfg, sd.source_norm);
    sd.eigs.reserve(clusters.size());
    for (const Cluster& c : clusters) {
        const int index = (c.mult == 1) ? 1 : eigenvalue_index(a, c.rep, cfg);
        sd.eigs.push_back(EigenvalueInfo{c.rep, c.mult, index});
    }

    if (!with_projections) return sd;

    // E(lambda_i) = g_i(A) prod_{j != i} (A - lambda_j I)^{m_j}, with g_i the
    // truncated reciprocal series of that product at lambda_i. This is the
    // Hermite interpolation idempotent: value 1 and flat to order m_i - 1 at
    // lambda_i, flat zero at every other eigenvalue.
    const Eigen::Index n = a.rows();
    const Matrix id = Matrix::Identity(n, n);
    if (sd.eigs.size() == 1) {
        sd.projections.push_back(id);
        return sd;
    }
    for (std::size_t i = 0; i < sd.eigs.size(); ++i) {
        const int mi = sd.eigs[i].index;
        const std::vector<Complex> q = product_series(sd.eigs, static_cast<int>(i),
                                                      sd.eigs[i].lambda, mi);
        const std::vector<Complex> gamma = series_inverse(q, mi);

        const Matrix shifted_i = a - sd.eigs[i].lambda * id;
        Matrix g = gamma[static_cast<std::size_t>(mi - 1)] * id;
        for (int l = mi - 2; l >= 0; --l) {
            g = g * shifted_i + gamma[static_cast<std::size_t>(l)] * id;
        }
        for (std::size_t j = 0; j < sd.eigs.size(); ++j) {
            if (j == i) continue;
            const Matrix factor = a - sd.eigs[j].lambda * id;
            for (int rep = 0; rep < sd.eigs[j].index; ++rep) g = g * factor;
        }
        sd.projections.push_back(std::move(g));
    }
    return sd;
}

ComplexPoly minimal_polynomial(const Matrix& a, const Config& cfg) {
    const SpectralData sd = spectral_data(a, cfg, /*with_projections=*/false);
    std::vector<Complex> rts;
    for (const auto& e : sd.eigs) {
        for (int k = 0; k < e.index; ++k) rts.push_back(e.lambda);
    }
    return ComplexPoly::from_roots(rts);
}

ComplexPoly minimal_polynomial_oracle(const Matrix& a, const Config& cfg) {
    check_square(a, cfg);
    const Eigen::Index n = a.rows();
    if (static_cast<int>(n) > cfg.oracle_max_n) {
        throw InputError("oracle limited to dimension oracle_max_n");
    }

    const Eigen::Index nn = n * n;
    std::vector<Matrix> powers;
    powers.push_back(Matrix::Identity(n, n));
    for (int k = 1; k <= static_cast<int>(n); ++k) powers.push_back(powers.back() * a);

    auto vec = [&](const Matrix& m) {
        Eigen::VectorXcd v(nn);
        for (Eigen::Index c = 0; c < n; ++c) {
            v.segment(c * n, n) = m.col(c);
        }
        return v;
    };

    for (int k = 1; k <= static_cast<int>(n); ++k) {
        Eigen::MatrixXcd krylov(nn, k);
        Eigen::VectorXd col_scale(k);
        for (int j = 0; j < k; ++j) {
            Eigen::VectorXcd col = vec(powers[static_cast<std::size_t>(j)]);
            const double s = std::max(col.norm(), 1e-300);
            col_scale(j) = s;
            krylov.col(j) = col / s;
        }
        const Eigen::VectorXcd target = vec(powers[static_cast<std::size_t>(k)]);
        const double target_norm = std::max(target.norm(), 1.0);
        const Eigen::VectorXcd sol =
            krylov.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(-target);
        const double residual = (krylov * sol + target).norm();
        if (residual <= cfg.dep_tol * target_norm || k == static_cast<int>(n)) {
            std::vector<Complex> coeffs(static_cast<std::size_t>(k) + 1);
            for (int j = 0; j < k; ++j) {
                coeffs[static_cast<std::size_t>(j)] = sol(j) / col_scale(j);
            }
            coeffs[static_cast<std::size_t>(k)] = Complex{1.0};
            return ComplexPoly{std::move(coeffs)};
        }
    }
    throw NumericalError("unreachable: Cayley-Hamilton guarantees dependence at n");
}

SymPoint char_coords(const Matrix& a, const Config& cfg) {
    const std::vector<Complex> eigs = eigenvalues(a, cfg);
    return symmetrize(eigs);
}

Matrix companion_matrix(const ComplexPoly& monic_poly) {
    const int deg = monic_poly.degree();
    if (deg < 1) throw InputError("companion matrix needs degree >= 1");
    const auto& c = monic_poly.coeffs();
    Matrix m = Matrix::Zero(deg, deg);
    for (int i = 0; i + 1 < deg; ++i) m(i + 1, i) = Complex{1.0};
    for (int i = 0; i < deg; ++i) {
        // last column carries -a_{deg - i} where p = t^deg + sum a_j t^(deg-j)
        m(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(deg)];
    }
    return m;
}

Matrix companion(const SymPoint& x) {
    return companion_matrix(poly_from_sym(x));
}

double spectral_radius(const Matrix& a, const Config& cfg) {
    double r = 0.0;
    for (const Complex& lambda : eigenvalues(a, cfg)) r = std::max(r, std::abs(lambda));
    return r;
}

Matrix eval_poly(const ComplexPoly& p, const Matrix& a) {
    const Eigen::Index n = a.rows();
    const auto& c = p.coeffs();
    Matrix acc = Matrix::Zero(n, n);
    for (std::size_t i = c.size(); i > 0; --i) {
        acc = acc * a + c[i - 1] * Matrix::Identity(n, n);
    }
    return acc;
}

}  // namespace specnp
