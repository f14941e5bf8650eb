#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <thread>
#include <vector>

namespace mcube {

// Fixed-order pairwise summation. The recursion tree depends only on the
// input length, so the result is bit-stable regardless of thread count or
// platform (assuming IEEE-754 doubles).
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 32) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

inline double pairwise_sum(const std::vector<double>& v) {
    return pairwise_sum(std::span<const double>(v));
}

// splitmix64, used to derive independent sub-seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream));
}

// Uniform double in [0,1) from the top 53 bits. std::mt19937_64 is fully
// specified by the standard; std::uniform_real_distribution is not, so we
// never use it where reproducibility matters.
inline double to_unit_double(std::uint64_t r) {
    return static_cast<double>(r >> 11) * 0x1.0p-53;
}

// Static block partition over [0, count). Results must be written to
// disjoint slots; the partition depends only on (count, threads).
inline void parallel_for(std::uint64_t count, int threads,
                         const std::function<void(std::uint64_t, std::uint64_t)>& body) {
    if (threads <= 1 || count < 2) {
        body(0, count);
        return;
    }
    const std::uint64_t t = static_cast<std::uint64_t>(threads);
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (std::uint64_t i = 0; i < t; ++i) {
        const std::uint64_t lo = count * i / t;
        const std::uint64_t hi = count * (i + 1) / t;
        if (lo < hi) pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace mcube
