#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatsearch/core.hpp"
#include "flatsearch/datagen.hpp"

namespace flatsearch {

// Dataset file format (bit-exact, little-endian):
//   8-byte unsigned record count n, followed by n keys of 4 bytes (32-bit
//   files) or 8 bytes (64-bit files), sorted non-decreasing. TIDs are not
//   stored; they are reassigned as the record's position on load. The key
//   width is inferred from the file size (8 + 4n vs 8 + 8n bytes).

namespace detail {

inline void put_le(std::vector<unsigned char>& out, uint64_t v, size_t bytes) {
    for (size_t i = 0; i < bytes; ++i) out.push_back((unsigned char)(v >> (8 * i)));
}

inline uint64_t get_le(const unsigned char* p, size_t bytes) {
    uint64_t v = 0;
    for (size_t i = 0; i < bytes; ++i) v |= uint64_t(p[i]) << (8 * i);
    return v;
}

template <KeyType K>
SortedDataset<K> parse_keys(const std::vector<unsigned char>& bytes, uint64_t n,
                            const std::string& path) {
    const unsigned char* p = bytes.data() + 8;
    std::vector<K> keys;
    keys.reserve(n);
    size_t run = 1;
    for (uint64_t i = 0; i < n; ++i) {
        K k = K(get_le(p + i * sizeof(K), sizeof(K)));
        if (i > 0) {
            if (k < keys.back())
                throw std::runtime_error(path + ": unsorted at index " + std::to_string(i));
            run = (k == keys.back()) ? run + 1 : 1;
            if (run > kMaxDuplicates)
                throw std::runtime_error(path + ": duplicate cap exceeded at index " +
                                         std::to_string(i));
        }
        keys.push_back(k);
    }
    return SortedDataset<K>::from_keys(std::move(keys));
}

}  // namespace detail

template <KeyType K>
void write_file(const SortedDataset<K>& data, const std::filesystem::path& path) {
    std::vector<unsigned char> bytes;
    bytes.reserve(8 + data.size() * sizeof(K));
    detail::put_le(bytes, data.size(), 8);
    for (const auto& r : data.records()) detail::put_le(bytes, uint64_t(r.key), sizeof(K));

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

inline void write_file(const Dataset& data, const std::filesystem::path& path) {
    std::visit([&](const auto& d) { write_file(d, path); }, data);
}

inline Dataset read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());

    const std::string name = path.string();
    if (bytes.size() < 8)
        throw std::runtime_error(name + ": truncated header (" + std::to_string(bytes.size()) +
                                 " bytes, need 8)");
    uint64_t n = detail::get_le(bytes.data(), 8);
    size_t payload = bytes.size() - 8;

    if (n == 0) {
        if (payload != 0)
            throw std::runtime_error(name + ": count is 0 but file has " +
                                     std::to_string(payload) + " payload bytes");
        return SortedDataset<uint64_t>{};
    }
    if (payload == n * 8) return detail::parse_keys<uint64_t>(bytes, n, name);
    if (payload == n * 4) return detail::parse_keys<uint32_t>(bytes, n, name);
    throw std::runtime_error(name + ": payload of " + std::to_string(payload) +
                             " bytes matches neither " + std::to_string(n * 4) + " (32-bit) nor " +
                             std::to_string(n * 8) + " (64-bit) for count " + std::to_string(n));
}

}  // namespace flatsearch
