#pragma once

#include "salemlab/geometry.hpp"
#include "salemlab/rational.hpp"

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace salemlab {

constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class RepKind { Difference, KFoldSum };

// Multiplicities of differences x-y or k-fold sums x_1+...+x_k, keyed by the
// encoded value. Counting is exact integer arithmetic throughout.
struct RepMap {
    RepKind kind = RepKind::Difference;
    unsigned k = 1;
    std::uint64_t set_size = 0;
    std::unordered_map<std::uint64_t, std::uint64_t> counts;

    std::uint64_t total() const;
    std::uint64_t max_nonzero() const;  // max over t != 0
};

RepMap representation_counts(const PointSet& E, RepKind kind, unsigned k = 2,
                             std::uint64_t budget = kDefaultBudget);

struct EnergyReport {
    unsigned k = 2;
    std::uint64_t lambda = 0;     // Lambda_{2k}, exact
    std::uint64_t set_size = 0;
    std::uint64_t grid_size = 0;  // q^d

    Rational random_term() const {  // |A|^{2k} / q^d
        return Rational(bigint_pow(BigInt(set_size), 2 * k), BigInt(grid_size));
    }
    double structured_term(const Rational& s) const;  // |A|^{2k(1-s)}
};

// Lambda_{2k} via squared k-fold representation counts (hash-map convolution,
// split in half for k >= 3).
EnergyReport additive_energy(const PointSet& E, unsigned k,
                             std::uint64_t budget = kDefaultBudget);

// Independent brute force over all 2k-tuples; requires |E|^{2k} <= budget.
std::uint64_t additive_energy_oracle(const PointSet& E, unsigned k,
                                     std::uint64_t budget = kDefaultBudget);

// \hat{A}(m) = q^{-d} sum_{y in A} chi(-m.y)
std::complex<double> fourier_coefficient(const PointSet& A, const Vector& m);

struct SpectralMoments {
    double sum_all = 0;      // sum over every m of |\hat{A}(m)|^u
    double sum_nonzero = 0;  // sum over m != 0
    double sup_nonzero = 0;  // max over m != 0 of |\hat{A}(m)|
};

// Full-spectrum enumeration (q^d coefficients); u even >= 2.
SpectralMoments spectral_moments(const PointSet& A, unsigned u,
                                 std::uint64_t grid_limit = kDefaultGridLimit);

// Normalized L^u norm of the Fourier transform over m != 0.
double lu_norm(const PointSet& A, unsigned u, std::uint64_t grid_limit = kDefaultGridLimit);
double lu_norm_sup(const PointSet& A, std::uint64_t grid_limit = kDefaultGridLimit);

enum class SalemRegime { StructuredTermDominates, RandomTermDominates };

// Observed constants for the (u, s) Salem inequalities with u = 2k. Never a
// boolean verdict: callers threshold the reported constants.
struct SalemAssessment {
    Rational s;
    unsigned u = 4;
    std::uint64_t set_size = 0;
    std::uint64_t grid_size = 0;
    std::uint64_t lambda = 0;
    double energy_constant = 0;   // Lambda / (|A|^{2k(1-s)} + |A|^{2k}/q^d)
    double lu = 0;                // ||\hat{A}||_u over m != 0
    double fourier_constant = 0;  // ||\hat{A}||_u / (q^{-d} |A|^{1-s})
    SalemRegime regime = SalemRegime::RandomTermDominates;
};

SalemAssessment salem_assess(const PointSet& A, const Rational& s, unsigned k,
                             std::uint64_t budget = kDefaultBudget,
                             std::uint64_t grid_limit = kDefaultGridLimit);

// Difference-set statistics: max multiplicity M, n-rich difference counts,
// and the observed strong/weak s-Sidon constants.
struct SidonProfile {
    std::uint64_t set_size = 0;
    std::uint64_t max_multiplicity = 0;  // M_E; 0 when |E| <= 1
    std::uint64_t diff_support = 0;      // |E-E| (0 included)
    std::uint64_t lambda4 = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rich_counts;  // (n, |R_n|)
    double mean = 0;       // of r over E-E
    double deviation = 0;
    std::vector<std::pair<Rational, double>> strong_constants;  // M / |E|^{2-4s}
    std::vector<std::pair<Rational, double>> weak_constants;    // max_n n^2 |R_n| / |E|^{4-4s}
};

SidonProfile sidon_profile(const PointSet& E, std::vector<std::uint64_t> thresholds = {},
                           const std::vector<Rational>& s_queries = {},
                           std::uint64_t budget = kDefaultBudget);

// |R_n(E)| from a difference map (n >= 1, t != 0).
std::uint64_t rich_count(const RepMap& diff, std::uint64_t n);

// |{t in E-E : |r(t) - mu| >= n*sigma}|, decided in exact rational arithmetic.
std::uint64_t chebyshev_deviation_count(const RepMap& diff, std::uint64_t n);

// Lambda_4 / (M * |E|^{2-2s} * |E-E|^{1/2}).
double weak_tech_ratio(const PointSet& E, const Rational& s,
                       std::uint64_t budget = kDefaultBudget);

}  // namespace salemlab
