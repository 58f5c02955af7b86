#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "flatsearch/core.hpp"
#include "flatsearch/datagen.hpp"
#include "flatsearch/prng.hpp"

namespace flatsearch {

/// Lookup keys with their precomputed expected results. Keys are sampled
/// uniformly (with replacement) from the dataset's distinct keys, so every
/// lookup has between 1 and kMaxDuplicates matches.
template <KeyType K>
struct Workload {
    std::vector<K> keys;
    std::vector<LookupResult> expected;
    uint64_t seed = 0;

    size_t size() const { return keys.size(); }
};

template <KeyType K>
Workload<K> generate_workload(const SortedDataset<K>& data, size_t m, uint64_t seed) {
    if (data.empty()) throw std::invalid_argument("workload needs a non-empty dataset");

    // One entry per distinct key: its expected checksum and match count,
    // computed from the sorted run.
    std::vector<K> distinct;
    std::vector<LookupResult> results;
    auto recs = data.records();
    size_t i = 0;
    while (i < recs.size()) {
        LookupResult r;
        K k = recs[i].key;
        size_t j = i;
        while (j < recs.size() && recs[j].key == k) {
            r.checksum += recs[j].tid;
            ++r.count;
            ++j;
        }
        if (r.count <= kMaxDuplicates) {
            distinct.push_back(k);
            results.push_back(r);
        }
        i = j;
    }
    if (distinct.empty()) throw std::invalid_argument("no keys satisfy the duplicate cap");

    Workload<K> wl;
    wl.seed = seed;
    wl.keys.reserve(m);
    wl.expected.reserve(m);
    std::mt19937_64 g(seed);
    for (size_t q = 0; q < m; ++q) {
        size_t pick = size_t(detail::random_below(g, distinct.size()));
        wl.keys.push_back(distinct[pick]);
        wl.expected.push_back(results[pick]);
    }
    return wl;
}

}  // namespace flatsearch
