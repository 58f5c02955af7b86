#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "flatsearch/core.hpp"
#include "flatsearch/prng.hpp"

namespace flatsearch {

/// No benchmark key may have more matches than this; enforced at generation
/// and load time so result materialization stays bounded.
inline constexpr size_t kMaxDuplicates = 100;

enum class Family { uden, uspr, logn, norm };

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::uden: return "uden";
        case Family::uspr: return "uspr";
        case Family::logn: return "logn";
        case Family::norm: return "norm";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    if (s == "uden") return Family::uden;
    if (s == "uspr") return Family::uspr;
    if (s == "logn") return Family::logn;
    if (s == "norm") return Family::norm;
    throw std::invalid_argument("unknown dataset family: " + std::string(s));
}

struct DatasetSpec {
    Family family = Family::uspr;
    uint64_t n = 0;
    unsigned width = 64;  // 32 or 64
    uint64_t seed = 42;
    double mu = 0.0;
    double sigma = 1.0;
};

/// Spec with the distribution parameter defaults filled in: logn uses
/// sigma 2 at 64-bit and sigma 1 at 32-bit, norm is the standard normal.
inline DatasetSpec make_spec(Family family, uint64_t n, unsigned width, uint64_t seed) {
    DatasetSpec s{family, n, width, seed, 0.0, 1.0};
    if (family == Family::logn) s.sigma = (width == 64) ? 2.0 : 1.0;
    return s;
}

/// "uden64"-style display name.
inline std::string spec_name(const DatasetSpec& s) {
    return std::string(family_name(s.family)) + std::to_string(s.width);
}

/// "<family>_<width>_<n>_<seed>.bin", the on-disk naming convention.
inline std::string dataset_filename(const DatasetSpec& s) {
    return std::string(family_name(s.family)) + "_" + std::to_string(s.width) + "_" +
           std::to_string(s.n) + "_" + std::to_string(s.seed) + ".bin";
}

namespace detail {

/// Rewrites `keys` (sorted in-place) until no value occurs more than
/// kMaxDuplicates times, replacing surplus copies with fresh draws. Throws
/// when the draws cannot satisfy the cap within `max_rounds`.
template <KeyType K, typename DrawKey>
void enforce_duplicate_cap(std::vector<K>& keys, DrawKey&& draw, int max_rounds = 32) {
    std::sort(keys.begin(), keys.end());
    for (int round = 0; round < max_rounds; ++round) {
        size_t write = 0;
        size_t surplus = 0;
        size_t i = 0;
        while (i < keys.size()) {
            size_t j = i;
            while (j < keys.size() && keys[j] == keys[i]) ++j;
            size_t keep = std::min(j - i, kMaxDuplicates);
            for (size_t k = 0; k < keep; ++k) keys[write++] = keys[i];
            surplus += (j - i) - keep;
            i = j;
        }
        if (surplus == 0) {
            keys.resize(write);
            return;
        }
        keys.resize(write);
        for (size_t k = 0; k < surplus; ++k) keys.push_back(draw());
        std::sort(keys.begin(), keys.end());
    }
    throw std::runtime_error("duplicate-cap resampling did not converge");
}

template <KeyType K>
void assert_generated_invariants(const std::vector<K>& keys) {
    size_t run = 1;
    for (size_t i = 1; i < keys.size(); ++i) {
        if (keys[i - 1] > keys[i]) throw std::logic_error("generator produced unsorted keys");
        run = (keys[i] == keys[i - 1]) ? run + 1 : 1;
        if (run > kMaxDuplicates) throw std::logic_error("generator violated the duplicate cap");
    }
}

}  // namespace detail

/// Deterministic synthetic dataset generation. Identical (family, n, width,
/// seed, params) produce identical datasets, independent of the platform's
/// standard library.
///
/// Scalings for the continuous families (the concrete choice is pinned by
/// regression tests, not claimed canonical):
///  - norm: key = round(2^(w-1) + (mu + sigma*z) * 2^w / 12), draws outside
///    the key domain are resampled.
///  - logn: key = round(exp(mu + sigma*z) * s) with s = (2^w - 1) /
///    exp(mu + 6*sigma), draws above the domain are resampled.
template <KeyType K>
SortedDataset<K> generate(const DatasetSpec& spec) {
    if (spec.n == 0) throw std::invalid_argument("dataset size must be >= 1");
    if (spec.width != SortedDataset<K>::key_width())
        throw std::invalid_argument("spec width does not match requested key type");

    const long double domain_max = std::numeric_limits<K>::max();
    std::vector<K> keys;

    switch (spec.family) {
        case Family::uden: {
            // Dense integers 0..n-1; n may not exceed the key domain.
            if (spec.n > uint64_t(std::numeric_limits<K>::max()) + 1)
                throw std::invalid_argument("uden: n exceeds the key domain");
            keys.resize(spec.n);
            for (uint64_t i = 0; i < spec.n; ++i) keys[i] = K(i);
            break;
        }
        case Family::uspr: {
            std::mt19937_64 g(spec.seed);
            auto draw = [&g]() -> K {
                if constexpr (sizeof(K) == 8) return K(g());
                else return K(g() >> 32);
            };
            keys.reserve(spec.n);
            for (uint64_t i = 0; i < spec.n; ++i) keys.push_back(draw());
            detail::enforce_duplicate_cap(keys, draw);
            break;
        }
        case Family::norm: {
            detail::NormalSampler ns(spec.seed);
            const long double center = std::ldexp(1.0L, int(spec.width) - 1);
            const long double scale = std::ldexp(1.0L, int(spec.width)) / 12.0L;
            auto draw = [&]() -> K {
                for (;;) {
                    long double v = center + (spec.mu + spec.sigma * ns.next()) * scale;
                    if (v >= 0.0L && v <= domain_max) return K(v + 0.5L);
                }
            };
            keys.reserve(spec.n);
            for (uint64_t i = 0; i < spec.n; ++i) keys.push_back(draw());
            detail::enforce_duplicate_cap(keys, draw);
            break;
        }
        case Family::logn: {
            detail::NormalSampler ns(spec.seed);
            const long double scale = domain_max / std::exp((long double)(spec.mu + 6.0 * spec.sigma));
            auto draw = [&]() -> K {
                for (;;) {
                    long double v = std::exp((long double)(spec.mu) +
                                             (long double)(spec.sigma) * ns.next()) *
                                    scale;
                    if (v >= 0.0L && v <= domain_max) return K(v + 0.5L);
                }
            };
            keys.reserve(spec.n);
            for (uint64_t i = 0; i < spec.n; ++i) keys.push_back(draw());
            detail::enforce_duplicate_cap(keys, draw);
            break;
        }
    }

    detail::assert_generated_invariants(keys);
    return SortedDataset<K>::from_keys(std::move(keys));
}

/// Width-erased dataset, as produced by file loading and the CLI.
using Dataset = std::variant<SortedDataset<uint32_t>, SortedDataset<uint64_t>>;

inline Dataset generate_any(const DatasetSpec& spec) {
    if (spec.width == 32) return generate<uint32_t>(spec);
    if (spec.width == 64) return generate<uint64_t>(spec);
    throw std::invalid_argument("key width must be 32 or 64");
}

}  // namespace flatsearch
