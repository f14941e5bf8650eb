#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace mcube {

// A point of {0,1}^n is an n-bit mask in one machine word; bit i set means
// coordinate i equals 1. n is capped so that every point, interval and
// dominance test stays a single-word bit operation.
inline constexpr int kMaxDim = 62;

struct CubePoint {
    std::uint64_t bits = 0;
    int n = 1;
};

void validate_dim(int n);
CubePoint make_point(std::uint64_t bits, int n);

inline int hamming_weight(CubePoint x) { return std::popcount(x.bits); }

// True iff y is coordinatewise below x (y <= x in the cube order).
bool dominates(CubePoint x, CubePoint y);

// All points of weight h, ascending mask order.
std::vector<CubePoint> enumerate_level(int n, int h);

// All z with y <= z <= x, ascending mask order. Requires y <= x.
std::vector<CubePoint> enumerate_interval(CubePoint y, CubePoint x);

// Exact binomial tables for one dimension. C(62,31) and the tail sums all
// fit in 64 bits, which is why the dimension cap is 62.
class BinomialTable {
public:
    explicit BinomialTable(int n);

    int dim() const { return n_; }
    std::uint64_t choose(int k) const;
    // tail(h) = sum_{j>=h} C(n,j)
    std::uint64_t tail(int h) const;

private:
    int n_;
    std::vector<std::uint64_t> choose_;
    std::vector<std::uint64_t> tail_;
};

// Arbitrary-precision binomial tables, for the appendix-scale scans where n
// reaches a few thousand. Exact; conversion to double happens last.
class WideBinomialTable {
public:
    explicit WideBinomialTable(int n);
    ~WideBinomialTable();
    WideBinomialTable(WideBinomialTable&&) noexcept;
    WideBinomialTable& operator=(WideBinomialTable&&) noexcept;

    int dim() const;
    // C(n,h) / tail(h), exact rational rounded once to double.
    double ratio(int h) const;
    // C(n,h) / 2^n, exact rational rounded once to double.
    double level_fraction(int h) const;
    // log2 C(n,h), accurate to double rounding.
    double log2_choose(int h) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// C(n,h) / sum_{j>=h} C(n,j), exact rational evaluated to a real.
double level_ratio(int n, int h);

// Piecewise upper bound on level_ratio: 2/n^2 far below the middle,
// 200/sqrt(n) around the middle, 200*(h-n/2)/n above it. Asymptotic; the
// scan in the verify module reports where it actually starts holding.
double ratio_bound(int n, int h);

// log2 C(n,h) for any n the wide table supports.
double log2_choose(int n, int h);

}  // namespace mcube
