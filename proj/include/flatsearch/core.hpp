#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flatsearch {

/// 64-bit tuple identifier carried alongside every key.
using Tid = uint64_t;

template <typename K>
concept KeyType = std::same_as<K, uint32_t> || std::same_as<K, uint64_t>;

#pragma pack(push, 1)
/// One indexed entry. Packed so the in-memory layout equals the accounted
/// data-array bytes: 12 B per record for 32-bit keys, 16 B for 64-bit keys.
template <KeyType K>
struct Record {
    K key;
    Tid tid;
};
#pragma pack(pop)

static_assert(sizeof(Record<uint32_t>) == 12);
static_assert(sizeof(Record<uint64_t>) == 16);

/// Key-sorted record array. Immutable in normal use; all search structures
/// operate on (and return positions into) this array.
template <KeyType K>
class SortedDataset {
public:
    using key_type = K;

    SortedDataset() = default;

    /// Builds a dataset from a non-decreasing key sequence. TIDs are the
    /// records' positions in the sorted order.
    static SortedDataset from_keys(std::vector<K> keys) {
        std::vector<Record<K>> recs;
        recs.reserve(keys.size());
        for (size_t i = 0; i < keys.size(); ++i) recs.push_back({keys[i], Tid(i)});
        return from_records(std::move(recs));
    }

    /// Builds a dataset from records already sorted by key; TIDs are kept
    /// as given.
    static SortedDataset from_records(std::vector<Record<K>> recs) {
        for (size_t i = 1; i < recs.size(); ++i) {
            if (recs[i - 1].key > recs[i].key)
                throw std::invalid_argument("records not sorted at index " + std::to_string(i));
        }
        return SortedDataset(std::move(recs));
    }

    size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

    K key_at(size_t i) const { return records_[i].key; }
    Tid tid_at(size_t i) const { return records_[i].tid; }
    std::span<const Record<K>> records() const { return records_; }

    K min_key() const { return records_.empty() ? K(0) : records_.front().key; }
    K max_key() const { return records_.empty() ? K(0) : records_.back().key; }

    static constexpr unsigned key_width() { return 8 * sizeof(K); }

    /// Bytes occupied by the record array itself; the denominator of every
    /// size-overhead figure.
    size_t data_bytes() const { return records_.size() * sizeof(Record<K>); }

    /// Test hook (fault injection); datasets are otherwise immutable.
    void set_tid(size_t i, Tid t) { records_.at(i).tid = t; }

private:
    explicit SortedDataset(std::vector<Record<K>> recs) : records_(std::move(recs)) {}

    std::vector<Record<K>> records_;
};

/// Half-open index interval [lo, hi). Contract for a lookup key k:
/// lower_bound(k) lies in [lo, hi] (hi inclusive), so a bounded binary
/// search inside the interval finds the exact lower bound. Structures that
/// resolve the position exactly return [p, p+1); the last-mile forward scan
/// collects any equal-key run regardless of hi.
struct SearchBound {
    size_t lo = 0;
    size_t hi = 0;

    bool operator==(const SearchBound&) const = default;
    size_t width() const { return hi - lo; }
};

/// Result of one equality lookup: wrapping 64-bit sum of the matching TIDs
/// (0 when nothing matches) and the number of matches.
struct LookupResult {
    uint64_t checksum = 0;
    uint64_t count = 0;

    bool operator==(const LookupResult&) const = default;
};

/// Counts key reads issued against the data array while locating a
/// position. Reads done by the final equal-run scan are result
/// materialization and are not counted.
struct ProbeCounter {
    uint64_t probes = 0;

    void add(uint64_t k = 1) { probes += k; }
    void reset() { probes = 0; }
};

/// Contract every search technique satisfies: a bound for a key, the
/// auxiliary structure's size, and a short identifier.
template <typename I, typename K>
concept SearchIndex = KeyType<K> && requires(const I& idx, K key, ProbeCounter& pc) {
    { idx.lookup(key, pc) } -> std::same_as<SearchBound>;
    { idx.size_bytes() } -> std::convertible_to<size_t>;
    { idx.name() } -> std::convertible_to<std::string_view>;
};

/// Smallest index whose key is >= `key`; data.size() when every key is
/// smaller. The semantic oracle all techniques must agree with.
template <KeyType K>
inline size_t lower_bound(const SortedDataset<K>& data, K key) {
    auto recs = data.records();
    auto it = std::lower_bound(recs.begin(), recs.end(), key,
                               [](const Record<K>& r, K k) { return r.key < k; });
    return size_t(it - recs.begin());
}

/// Lower bound by bisection restricted to [lo, hi). Requires the true lower
/// bound to lie in [lo, hi]. Each key read increments the probe counter.
template <KeyType K>
inline size_t bounded_lower_bound(const SortedDataset<K>& data, size_t lo, size_t hi, K key,
                                  ProbeCounter& pc) {
    while (lo < hi) {
        size_t mid = lo + (hi - lo) / 2;
        pc.add();
        if (data.key_at(mid) < key) lo = mid + 1;
        else hi = mid;
    }
    return lo;
}

/// Shared last mile: bisect [lo, hi) for the lower bound, then scan the
/// equal-key run forward accumulating the wrapping TID sum. The scan may run
/// past hi; bound edges only steer the bisection.
template <KeyType K>
inline LookupResult search_within(const SortedDataset<K>& data, SearchBound bound, K key,
                                  ProbeCounter& pc) {
    const size_t n = data.size();
    size_t lo = std::min(bound.lo, n);
    size_t hi = std::min(std::max(bound.hi, lo), n);
    size_t pos = bounded_lower_bound(data, lo, hi, key, pc);

    LookupResult res;
    auto recs = data.records();
    for (size_t i = pos; i < n; ++i) {
        if (recs[i].key != key) break;
        res.checksum += recs[i].tid;
        ++res.count;
    }
    return res;
}

struct CheckedLookup {
    LookupResult result;
    bool contract_ok = true;
};

/// search_within plus containment checking: flags bounds whose interval
/// provably missed the true lower bound (an equal or greater key just left
/// of lo, or a smaller key at hi). Used by verification paths.
template <KeyType K>
inline CheckedLookup search_within_checked(const SortedDataset<K>& data, SearchBound bound, K key,
                                           ProbeCounter& pc) {
    const size_t n = data.size();
    size_t lo = std::min(bound.lo, n);
    size_t hi = std::min(std::max(bound.hi, lo), n);
    size_t pos = bounded_lower_bound(data, lo, hi, key, pc);

    CheckedLookup out;
    if (pos == lo && lo > 0) {
        pc.add();
        if (data.key_at(lo - 1) >= key) out.contract_ok = false;
    }
    if (pos == hi && hi < n) {
        pc.add();
        if (data.key_at(hi) < key) out.contract_ok = false;
    }

    auto recs = data.records();
    for (size_t i = pos; i < n; ++i) {
        if (recs[i].key != key) break;
        out.result.checksum += recs[i].tid;
        ++out.result.count;
    }
    return out;
}

}  // namespace flatsearch
