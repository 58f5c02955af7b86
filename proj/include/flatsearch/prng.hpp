#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace flatsearch::detail {

// mt19937_64 output is fully specified by the standard, so everything here
// reproduces bit-for-bit across platforms. std::*_distribution is not, which
// is why the samplers below are hand-rolled.

/// Uniform double in (0, 1].
inline double unit_open(std::mt19937_64& g) {
    return double((g() >> 11) + 1) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) without modulo bias (Lemire).
inline uint64_t random_below(std::mt19937_64& g, uint64_t bound) {
    using u128 = unsigned __int128;
    u128 m = u128(g()) * bound;
    auto lo = uint64_t(m);
    if (lo < bound) {
        uint64_t t = (0 - bound) % bound;
        while (lo < t) {
            m = u128(g()) * bound;
            lo = uint64_t(m);
        }
    }
    return uint64_t(m >> 64);
}

/// Standard normal draws via Box-Muller, one cached spare per pair.
class NormalSampler {
public:
    explicit NormalSampler(uint64_t seed) : gen_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = unit_open(gen_);
        double u2 = unit_open(gen_);
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace flatsearch::detail
