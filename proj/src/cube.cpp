#include "mcube/cube.hpp"

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace mcube {

void validate_dim(int n) {
    if (n < 1 || n > kMaxDim)
        throw std::invalid_argument("dimension must be in [1, " + std::to_string(kMaxDim) +
                                    "], got " + std::to_string(n));
}

CubePoint make_point(std::uint64_t bits, int n) {
    validate_dim(n);
    if (n < 64 && (bits >> n) != 0)
        throw std::invalid_argument("point has bits above position n-1");
    return CubePoint{bits, n};
}

bool dominates(CubePoint x, CubePoint y) {
    if (x.n != y.n) throw std::invalid_argument("dimension mismatch in dominates");
    return (y.bits & x.bits) == y.bits;
}

std::vector<CubePoint> enumerate_level(int n, int h) {
    validate_dim(n);
    if (h < 0 || h > n) throw std::invalid_argument("level out of range");
    std::vector<CubePoint> out;
    out.reserve(static_cast<std::size_t>(BinomialTable(n).choose(h)));
    if (h == 0) {
        out.push_back({0, n});
        return out;
    }
    // Gosper's hack walks fixed-popcount masks in ascending order.
    std::uint64_t v = (std::uint64_t{1} << h) - 1;
    const std::uint64_t limit = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
    while (v < limit) {
        out.push_back({v, n});
        std::uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

std::vector<CubePoint> enumerate_interval(CubePoint y, CubePoint x) {
    if (!dominates(x, y)) throw std::invalid_argument("interval requires y below x");
    const std::uint64_t free = x.bits ^ y.bits;
    std::vector<CubePoint> out;
    out.reserve(std::uint64_t{1} << std::popcount(free));
    std::uint64_t s = 0;
    do {
        out.push_back({y.bits | s, x.n});
        s = (s - free) & free;
    } while (s != 0);
    return out;
}

BinomialTable::BinomialTable(int n) : n_(n) {
    validate_dim(n);
    choose_.assign(n + 1, 0);
    choose_[0] = 1;
    for (int k = 1; k <= n; ++k)
        choose_[k] = choose_[k - 1] * static_cast<std::uint64_t>(n - k + 1) /
                     static_cast<std::uint64_t>(k);
    tail_.assign(n + 2, 0);
    for (int h = n; h >= 0; --h) tail_[h] = tail_[h + 1] + choose_[h];
}

std::uint64_t BinomialTable::choose(int k) const {
    if (k < 0 || k > n_) throw std::invalid_argument("choose index out of range");
    return choose_[k];
}

std::uint64_t BinomialTable::tail(int h) const {
    if (h < 0 || h > n_) throw std::invalid_argument("tail index out of range");
    return tail_[h];
}

struct WideBinomialTable::Impl {
    int n;
    std::vector<mpz_class> choose;
    std::vector<mpz_class> tail;
};

WideBinomialTable::WideBinomialTable(int n) : impl_(std::make_unique<Impl>()) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    impl_->n = n;
    impl_->choose.resize(n + 1);
    impl_->choose[0] = 1;
    for (int k = 1; k <= n; ++k)
        impl_->choose[k] = impl_->choose[k - 1] * (n - k + 1) / k;
    impl_->tail.assign(n + 2, mpz_class(0));
    for (int h = n; h >= 0; --h) impl_->tail[h] = impl_->tail[h + 1] + impl_->choose[h];
}

WideBinomialTable::~WideBinomialTable() = default;
WideBinomialTable::WideBinomialTable(WideBinomialTable&&) noexcept = default;
WideBinomialTable& WideBinomialTable::operator=(WideBinomialTable&&) noexcept = default;

int WideBinomialTable::dim() const { return impl_->n; }

double WideBinomialTable::ratio(int h) const {
    if (h < 0 || h > impl_->n) throw std::invalid_argument("level out of range");
    mpq_class q(impl_->choose[h], impl_->tail[h]);
    q.canonicalize();
    return q.get_d();
}

double WideBinomialTable::level_fraction(int h) const {
    if (h < 0 || h > impl_->n) throw std::invalid_argument("level out of range");
    mpz_class denom = mpz_class(1) << impl_->n;
    mpq_class q(impl_->choose[h], denom);
    q.canonicalize();
    return q.get_d();
}

double WideBinomialTable::log2_choose(int h) const {
    if (h < 0 || h > impl_->n) throw std::invalid_argument("level out of range");
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, impl_->choose[h].get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp2);
}

double level_ratio(int n, int h) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    if (h < 0 || h > n) throw std::invalid_argument("level out of range");
    if (n <= 52) {
        BinomialTable t(n);
        return static_cast<double>(t.choose(h)) / static_cast<double>(t.tail(h));
    }
    return WideBinomialTable(n).ratio(h);
}

double ratio_bound(int n, int h) {
    if (n < 2) throw std::invalid_argument("ratio_bound requires n >= 2");
    if (h < 0 || h > n) throw std::invalid_argument("level out of range");
    const double nd = static_cast<double>(n);
    const double hd = static_cast<double>(h);
    if (hd <= nd / 2 - std::sqrt(nd * std::log(nd))) return 2.0 / (nd * nd);
    if (hd < nd / 2 + std::sqrt(nd)) return 200.0 / std::sqrt(nd);
    return 200.0 * (hd - nd / 2) / nd;
}

double log2_choose(int n, int h) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    if (h < 0 || h > n) throw std::invalid_argument("level out of range");
    if (n <= kMaxDim) return std::log2(static_cast<double>(BinomialTable(n).choose(h)));
    return WideBinomialTable(n).log2_choose(h);
}

}  // namespace mcube
