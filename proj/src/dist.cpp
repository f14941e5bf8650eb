#include "mcube/dist.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "mcube/common.hpp"

namespace mcube {

namespace {

void validate_dense_dim(int n, int cap) {
    validate_dim(n);
    if (cap > kDenseCapHard) cap = kDenseCapHard;
    if (n > cap) throw std::invalid_argument("dimension too large for dense storage");
}

void validate_table(std::span<const double> f, int n) {
    if (n < 1 || n > kDenseCapHard || f.size() != (std::uint64_t{1} << n))
        throw std::invalid_argument("table size does not match dimension");
}

}  // namespace

DenseDistribution make_distribution(int n, std::vector<double> probs, int dense_cap) {
    validate_dense_dim(n, dense_cap);
    if (probs.size() != (std::uint64_t{1} << n))
        throw std::invalid_argument("probability table has wrong size");
    for (double v : probs)
        if (!(v >= 0.0)) throw std::invalid_argument("negative or NaN probability entry");
    const double total = pairwise_sum(probs);
    if (std::fabs(total - 1.0) > kNormTol)
        throw std::invalid_argument("probabilities do not sum to 1");
    return DenseDistribution{n, std::move(probs)};
}

std::vector<std::uint32_t> SampleSet::count_table() const {
    std::vector<std::uint32_t> counts(std::uint64_t{1} << n, 0);
    for (std::uint64_t s : samples) ++counts[s];
    return counts;
}

bool is_monotone_table(std::span<const double> f, int n, double tol) {
    validate_table(f, n);
    const std::uint64_t size = f.size();
    for (std::uint64_t x = 0; x < size; ++x)
        for (int i = 0; i < n; ++i) {
            const std::uint64_t up = x | (std::uint64_t{1} << i);
            if (up != x && f[x] > f[up] + tol) return false;
        }
    return true;
}

double slack_at(std::span<const double> f, int n, std::uint64_t x) {
    validate_table(f, n);
    if (x == 0) return f[0];
    double best = 0.0;
    bool first = true;
    std::uint64_t rem = x;
    while (rem != 0) {
        const std::uint64_t bit = rem & (~rem + 1);
        const double v = f[x ^ bit];
        if (first || v > best) best = v;
        first = false;
        rem ^= bit;
    }
    return f[x] - best;
}

std::vector<double> slack_table(std::span<const double> f, int n) {
    validate_table(f, n);
    std::vector<double> s(f.size());
    for (std::uint64_t x = 0; x < f.size(); ++x) s[x] = slack_at(f, n, x);
    return s;
}

SlackProfile slack_profile(std::span<const double> f, int n) {
    validate_table(f, n);
    SlackProfile prof;
    prof.n = n;
    prof.avg_slack.assign(n + 1, 0.0);
    prof.has_nonzero.assign(n + 1, 0);
    std::vector<std::vector<double>> per_level(n + 1);
    BinomialTable binom(n);
    for (int h = 0; h <= n; ++h) per_level[h].reserve(binom.choose(h));
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        const double s = slack_at(f, n, x);
        const int h = std::popcount(x);
        per_level[h].push_back(s);
        if (s > kSlackTol) prof.has_nonzero[h] = 1;
    }
    for (int h = 0; h <= n; ++h)
        prof.avg_slack[h] = pairwise_sum(per_level[h]) / static_cast<double>(binom.choose(h));
    return prof;
}

double level_average(std::span<const double> f, int n, int k) {
    validate_table(f, n);
    if (k < 0 || k > n) throw std::invalid_argument("level out of range");
    std::vector<double> vals;
    BinomialTable binom(n);
    vals.reserve(binom.choose(k));
    for (std::uint64_t x = 0; x < f.size(); ++x)
        if (std::popcount(x) == k) vals.push_back(f[x]);
    return pairwise_sum(vals) / static_cast<double>(binom.choose(k));
}

bool is_monotone(const DenseDistribution& d, double tol) {
    return is_monotone_table(d.p, d.n, tol);
}

double tv_distance_tables(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    std::vector<double> diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = std::fabs(a[i] - b[i]);
    return 0.5 * pairwise_sum(diff);
}

double tv_distance(const DenseDistribution& a, const DenseDistribution& b) {
    if (a.n != b.n) throw std::invalid_argument("dimension mismatch");
    return tv_distance_tables(a.p, b.p);
}

double support_fraction(const DenseDistribution& d) {
    std::uint64_t cnt = 0;
    for (double v : d.p)
        if (v > 0.0) ++cnt;
    return static_cast<double>(cnt) / static_cast<double>(d.size());
}

bool is_well_behaved(const DenseDistribution& d) {
    const double floor = std::ldexp(1.0, -d.n) - 1e-15;
    for (double v : d.p)
        if (v != 0.0 && v < floor) return false;
    return true;
}

SampleSet sample(const DenseDistribution& rho, std::uint64_t seed, std::uint64_t count) {
    std::vector<double> cdf(rho.p.size());
    double acc = 0.0;
    for (std::uint64_t x = 0; x < rho.p.size(); ++x) {
        acc += rho.p[x];
        cdf[x] = acc;
    }
    cdf.back() = std::max(cdf.back(), 1.0);

    SampleSet out;
    out.n = rho.n;
    out.seed = seed;
    out.samples.resize(count);
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < count; ++i) {
        const double u = to_unit_double(rng());
        auto idx = static_cast<std::uint64_t>(
            std::distance(cdf.begin(), std::upper_bound(cdf.begin(), cdf.end(), u)));
        if (idx >= cdf.size()) idx = cdf.size() - 1;
        out.samples[i] = idx;
    }
    return out;
}

SampleSet SampleSource::draw(std::uint64_t count) const {
    return sample(*dist, derive_seed(seed, stream++), count);
}

DenseDistribution uniform_distribution(int n) {
    validate_dense_dim(n, kDenseCapHard);
    const std::uint64_t size = std::uint64_t{1} << n;
    return DenseDistribution{n, std::vector<double>(size, std::ldexp(1.0, -n))};
}

DenseDistribution subcube_distribution(CubePoint center) {
    validate_dense_dim(center.n, kDenseCapHard);
    const int w = hamming_weight(center);
    const std::uint64_t size = std::uint64_t{1} << center.n;
    std::vector<double> p(size, 0.0);
    const double mass = std::ldexp(1.0, -(center.n - w));
    // Exact zeros off the up-set; "well-behaved" semantics need true zeros.
    const std::uint64_t free = ((size - 1) ^ center.bits);
    std::uint64_t s = 0;
    do {
        p[center.bits | s] = mass;
        s = (s - free) & free;
    } while (s != 0);
    return DenseDistribution{center.n, std::move(p)};
}

DenseDistribution mixture(const std::vector<DenseDistribution>& components,
                          const std::vector<double>& weights) {
    if (components.empty() || components.size() != weights.size())
        throw std::invalid_argument("mixture needs matching components and weights");
    const int n = components.front().n;
    double wsum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("negative mixture weight");
        wsum += w;
    }
    if (std::fabs(wsum - 1.0) > kNormTol) throw std::invalid_argument("mixture weights must sum to 1");
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<double> p(size, 0.0);
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].n != n) throw std::invalid_argument("mixture dimension mismatch");
        if (weights[i] == 0.0) continue;
        for (std::uint64_t x = 0; x < size; ++x) p[x] += weights[i] * components[i].p[x];
    }
    return DenseDistribution{n, std::move(p)};
}

DenseDistribution random_monotone(int n, std::uint64_t seed) {
    validate_dense_dim(n, kDenseCapHard);
    const std::uint64_t size = std::uint64_t{1} << n;
    std::mt19937_64 rng(seed);
    std::vector<double> g(size);
    for (std::uint64_t x = 0; x < size; ++x) g[x] = to_unit_double(rng());
    // max over the down-set via one upward DP pass.
    for (std::uint64_t x = 1; x < size; ++x) {
        std::uint64_t rem = x;
        while (rem != 0) {
            const std::uint64_t bit = rem & (~rem + 1);
            g[x] = std::max(g[x], g[x ^ bit]);
            rem ^= bit;
        }
    }
    const double total = pairwise_sum(g);
    for (double& v : g) v /= total;
    return DenseDistribution{n, std::move(g)};
}

DenseDistribution uniform_on_upset(int n, std::uint64_t seed) {
    validate_dense_dim(n, kDenseCapHard);
    const std::uint64_t size = std::uint64_t{1} << n;
    std::mt19937_64 rng(seed);
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<char> in(size, 0);
    for (int i = 0; i < k; ++i) in[rng() & (size - 1)] = 1;
    for (std::uint64_t x = 1; x < size; ++x) {
        if (in[x]) continue;
        std::uint64_t rem = x;
        while (rem != 0) {
            const std::uint64_t bit = rem & (~rem + 1);
            if (in[x ^ bit]) {
                in[x] = 1;
                break;
            }
            rem ^= bit;
        }
    }
    std::uint64_t cnt = 0;
    for (char c : in) cnt += c;
    std::vector<double> p(size, 0.0);
    const double mass = 1.0 / static_cast<double>(cnt);
    for (std::uint64_t x = 0; x < size; ++x)
        if (in[x]) p[x] = mass;
    return DenseDistribution{n, std::move(p)};
}

}  // namespace mcube
