#pragma once

#include <random>

#include "specnp/funcalc.hpp"
#include "specnp/spectra.hpp"

// Generators for randomized property sweeps. Test matrices are built
// Jordan-first (eigenvalues and block sizes chosen, then conjugated by a
// similarity with prescribed singular values) so the ground-truth index of
// every eigenvalue is known exactly.
namespace specnp::gen {

struct JordanSpec {
    Complex lambda;
    std::vector<int> blocks;  // Jordan block sizes at lambda

    int mult() const;   // sum of block sizes
    int index() const;  // largest block size
};

/// Block-diagonal matrix assembled from the given Jordan structure.
Matrix jordan_matrix(const std::vector<JordanSpec>& spec);

Complex random_in_disc(std::mt19937_64& rng, double radius = 1.0);

/// Random similarity with singular values in [smin, smax]; its condition
/// number is bounded by smax/smin.
Matrix bounded_similarity(int n, std::mt19937_64& rng, double smin = 0.5, double smax = 2.0);

Matrix conjugate(const Matrix& a, const Matrix& s);

/// Random Jordan structure with eigenvalues in the disc of the given radius,
/// pairwise separated by at least min_sep, total dimension in [1, max_n],
/// block sizes at most max_block.
std::vector<JordanSpec> random_jordan_spec(int max_n, int max_block, std::mt19937_64& rng,
                                           double min_sep = 0.25, double radius = 0.9);

/// Bottleneck matching distance between equal-size multisets: the smallest
/// possible value of the largest pairwise distance over perfect matchings.
double multiset_match_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

struct WeightedPoint {
    Complex value;
    int mult;
};

/// Cluster a point multiset into (mean, multiplicity) pairs with the given
/// merge radius.
std::vector<WeightedPoint> cluster_points(const std::vector<Complex>& pts, double radius);

/// Bottleneck matching of weighted multisets; pairs with unequal
/// multiplicities cost infinity, so a finite result certifies that the
/// multiplicity patterns agree.
double weighted_match_distance(const std::vector<WeightedPoint>& a,
                               const std::vector<WeightedPoint>& b);

/// Tolerances adequate for matrices assembled from exact Jordan structure:
/// the eigensolver scatters a size-m block by O(eps^(1/m)), so the cluster
/// radius must sit above that and the rank threshold above the accuracy of
/// the recovered cluster mean.
Config jordan_tolerances(Config base);

struct FuncalcTrial {
    Matrix a;
    HoloFunction f;
};

/// One randomized trial for the minimal-polynomial predictor: a Jordan-built
/// matrix (n <= 8, blocks <= 4) with a random Blaschke product (degree <= 4)
/// or polynomial (degree <= 5). Mixes in trials with an eigenvalue placed
/// exactly at a critical point of f and trials whose eigenvalues share one
/// f-image, the two regimes where the exponent formula is nontrivial.
FuncalcTrial random_funcalc_trial(std::mt19937_64& rng, const Config& cfg);

}  // namespace specnp::gen
