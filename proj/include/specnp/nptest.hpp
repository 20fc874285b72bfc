#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "specnp/funcalc.hpp"

namespace specnp {

/// Nodes in the unit disc with target matrices whose spectra lie in the unit
/// disc; the data of a spectral interpolation problem.
struct InterpolationData {
    std::vector<Complex> nodes;
    std::vector<Matrix> targets;

    int size() const { return static_cast<int>(nodes.size()); }
    int dim() const;

    /// Checks node distinctness, matching dimensions and disc containment of
    /// every target spectrum.
    void validate(const Config& cfg) const;
};

enum class Status { Infeasible, Inconclusive };

/// Both sides of the two-point inequality, plus the eigenvalue attaining the
/// left-hand side.
struct TwoPointWitness {
    double lhs = 0.0;
    double rhs = 0.0;
    int side = 0;  // 0: b_1 evaluated on sigma(W_2); 1: b_2 on sigma(W_1)
    Complex arg_max;
};

struct CandidateRecord {
    Complex u;              // trial unimodular factor, before normalization
    double modulus = 0.0;   // |u|
    bool unimodular = false;
    bool preimage_high_ok = false;
    bool preimage_low_ok = false;
};

/// Everything evaluated at one k of the three-point test; kept for all three
/// k so refutations are auditable.
struct ThreePointReport {
    int k = 0, high = 0, low = 0;  // 0-based data indices; high/low = G(k)/L(k)
    bool containment_high = false, containment_low = false;
    double max_mod_high = 0.0, radius_high = 0.0;
    double max_mod_low = 0.0, radius_low = 0.0;
    bool inequality_evaluated = false;
    double lhs = 0.0, rhs = 0.0;
    bool branch1 = false;
    std::vector<CandidateRecord> candidates;
    bool branch2 = false;
};

/// Outcome of a necessary-condition check. The conditions only ever refute:
/// Infeasible comes with a witness, anything else is Inconclusive.
struct Verdict {
    Status status = Status::Inconclusive;
    std::optional<TwoPointWitness> two_point;
    std::vector<ThreePointReport> three_point;
    int witness_k = -1;  // 0-based k that refuted, when status == Infeasible (N = 3)
};

/// Two-point necessary condition: with b_j the minimal Blaschke product of
/// W_j, infeasible iff
///   max{ max_{mu in sigma(W_2)} |b_1(mu)|, max_{lambda in sigma(W_1)} |b_2(lambda)| }
/// exceeds the Moebius distance of the nodes by more than verdict_margin.
Verdict check_two_point(const InterpolationData& data, const Config& cfg);

/// Exponent q(nu, j, k) = max{ floor((m(j,lambda)-1)/(ord_lambda B_k' + 1)) + 1 }
/// over lambda in sigma(W_j) with B_k(lambda) = nu. Indices are 0-based.
int q_exponent(Complex nu, int j, int k, const InterpolationData& data, const Config& cfg);

/// Three-point necessary condition. For each k, either the spectra of
/// B_k(W_j) sit strictly inside discs of radii |psi_k(zeta_j)| and a
/// two-sided product inequality holds (branch 1), or some unimodular
/// rotation sends both psi_k values to points whose full Blaschke preimages
/// lie inside the corresponding target spectra (branch 2). Infeasible iff
/// both branches fail at some k.
Verdict check_three_point(const InterpolationData& data, const Config& cfg);

struct SchwarzViolation {
    Complex zeta;
    double rho = 0.0;
    double bound = 0.0;
};

struct SchwarzReport {
    bool passed = true;
    int samples = 0;
    double max_excess = 0.0;  // max over samples of rho - |zeta|
    std::vector<SchwarzViolation> violations;
};

/// Verifies rho(F(zeta)) <= |zeta| + schwarz_tol at every sample for an
/// analytic disc F with F(0) = 0.
SchwarzReport schwarz_check(const std::function<Matrix(Complex)>& disc_map,
                            std::span<const Complex> samples, const Config& cfg);

struct FeasibleDataset {
    InterpolationData data;
    std::function<Matrix(Complex)> generator;  // the interpolant the data was read from
};

/// Random dataset that admits an interpolant by construction: a random
/// matrix polynomial rescaled until its spectral radius stays below
/// 1 - margin on a 512-point boundary grid, then sampled at the nodes.
/// Both checkers must return Inconclusive on it.
FeasibleDataset random_feasible_dataset(std::uint64_t seed, int n, int big_n, double margin,
                                        const Config& cfg);

/// Extremal-function provider for a planar domain: the unique normalized
/// extremal through (lambda, z) together with the distance it realizes.
/// Only the disc provider ships; the interface is the extension point for
/// other domains.
class CaratheodoryProvider {
public:
    virtual ~CaratheodoryProvider() = default;
    virtual HoloFunction extremal(Complex lambda, Complex z, const Config& cfg) const = 0;
    virtual double distance(Complex lambda, Complex z, const Config& cfg) const = 0;
    virtual bool contains(Complex point) const = 0;
};

class DiscProvider final : public CaratheodoryProvider {
public:
    HoloFunction extremal(Complex lambda, Complex z, const Config& cfg) const override;
    double distance(Complex lambda, Complex z, const Config& cfg) const override;
    bool contains(Complex point) const override;
};

/// Experimental general-domain three-point path: evaluates both branches per
/// z sample with B_k built from the provider's extremals, and reports one
/// verdict per z without aggregating.
std::vector<Verdict> check_three_point_general(const InterpolationData& data,
                                               const CaratheodoryProvider& provider,
                                               std::span<const Complex> z_samples,
                                               const Config& cfg);

}  // namespace specnp
