#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcube/cube.hpp"

namespace mcube {

// Dense exact probability mass function over {0,1}^n, indexed by mask.
// Dimensions above the dense cap would need gigabytes per table; every
// quantity the estimators are validated against is computed exactly from
// this representation.
inline constexpr int kDenseCapDefault = 24;
inline constexpr int kDenseCapHard = 26;

inline constexpr double kNormTol = 1e-9;    // |sum - 1| on construction
inline constexpr double kSlackTol = 1e-12;  // inequality slack in checks

struct DenseDistribution {
    int n = 1;
    std::vector<double> p;  // size 2^n, entries >= 0, sum within kNormTol of 1

    std::uint64_t size() const { return p.size(); }
};

DenseDistribution make_distribution(int n, std::vector<double> probs,
                                    int dense_cap = kDenseCapDefault);

struct SampleSet {
    int n = 1;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> samples;

    std::uint64_t count() const { return samples.size(); }
    // Occurrence counts per mask (the lookup table the estimators use).
    std::vector<std::uint32_t> count_table() const;
};

struct SlackProfile {
    int n = 1;
    std::vector<double> avg_slack;      // per level
    std::vector<char> has_nonzero;      // per level, slack > kSlackTol somewhere
};

// ---- analytics on raw value tables (need not be normalized) ----

bool is_monotone_table(std::span<const double> f, int n, double tol = kSlackTol);

// slack_f(x) = f(x) - max over one-bit-down neighbors; f(0^n) at the bottom.
double slack_at(std::span<const double> f, int n, std::uint64_t x);
std::vector<double> slack_table(std::span<const double> f, int n);
SlackProfile slack_profile(std::span<const double> f, int n);

double level_average(std::span<const double> f, int n, int k);

// ---- distribution analytics ----

bool is_monotone(const DenseDistribution& d, double tol = kSlackTol);
double tv_distance(const DenseDistribution& a, const DenseDistribution& b);
// Half the L1 distance between two raw tables of the same length.
double tv_distance_tables(std::span<const double> a, std::span<const double> b);
double support_fraction(const DenseDistribution& d);
bool is_well_behaved(const DenseDistribution& d);

// count i.i.d. draws by inverse CDF over ascending mask order; identical
// (rho, seed, count) give identical output on every platform.
SampleSet sample(const DenseDistribution& rho, std::uint64_t seed, std::uint64_t count);

// Sample access to a fixed distribution; every draw() derives a fresh
// sub-seed so repeated draws are independent but fully reproducible.
struct SampleSource {
    const DenseDistribution* dist = nullptr;
    std::uint64_t seed = 0;
    mutable std::uint64_t stream = 0;

    int dim() const { return dist->n; }
    SampleSet draw(std::uint64_t count) const;
};

// ---- generators ----

DenseDistribution uniform_distribution(int n);
// Uniform over the up-set of center: mass 2^-(n-||center||) there, exact 0 elsewhere.
DenseDistribution subcube_distribution(CubePoint center);
DenseDistribution mixture(const std::vector<DenseDistribution>& components,
                          const std::vector<double>& weights);
// g(x) = max_{y<=x} r(y) for i.i.d. r >= 0, then normalized. Monotone by construction.
DenseDistribution random_monotone(int n, std::uint64_t seed);
// Normalized indicator of the up-closure of a few random seed points.
DenseDistribution uniform_on_upset(int n, std::uint64_t seed);

// Subcube-mixture pair behind the tolerant-testing lower bound. delta_close
// mixes all centers of weight m = round(n^exponent); delta_far mixes
// floor(2^m / 2) centers drawn with replacement.
DenseDistribution delta_close(int n, double exponent = 0.49);
DenseDistribution delta_far(int n, std::uint64_t seed, double exponent = 0.49);

}  // namespace mcube
