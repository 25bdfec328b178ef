#pragma once

// Binary table cache. Layout, all integers little-endian:
//
//   "CSAD"              4 bytes magic
//   format_version      u32 (currently 1)
//   n_max               u32
//   rows                for n = 0..n_max, C(n) as ceil((n_max^2+1)/64) u64 words
//   checksum            u64, sum of all row words modulo 2^64
//
// Cumulative rows are not stored; they are recomputed on load.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include <fcntl.h>
#include <unistd.h>

#include "dim_table.hpp"
#include "errors.hpp"

namespace csadim {

inline constexpr std::array<char, 4> cache_magic = {'C', 'S', 'A', 'D'};
inline constexpr std::uint32_t cache_format_version = 1;

namespace detail {

inline void put_le(std::string& buf, std::uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline std::uint64_t get_le(const unsigned char* p, int bytes) {
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v |= std::uint64_t{p[i]} << (8 * i);
    return v;
}

/// Exclusive lock file next to the cache; removed on destruction.
class cache_lock {
public:
    explicit cache_lock(std::filesystem::path path) : path_(std::move(path)) {
        fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
        if (fd_ < 0)
            throw cache_error(cache_error::kind::locked,
                              "cache is locked by another writer: " + path_.string());
    }
    cache_lock(const cache_lock&) = delete;
    cache_lock& operator=(const cache_lock&) = delete;
    ~cache_lock() {
        ::close(fd_);
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }

private:
    std::filesystem::path path_;
    int fd_ = -1;
};

} // namespace detail

/// Serialized bytes of a table in the cache layout.
inline std::string encode_table(const DimTable& table) {
    const std::uint32_t n_max = table.n_max();
    const std::size_t words = words_for_bits(std::size_t{n_max} * n_max + 1);
    std::string buf;
    buf.reserve(12 + (std::size_t{n_max} + 1) * words * 8 + 8);
    buf.append(cache_magic.data(), cache_magic.size());
    detail::put_le(buf, cache_format_version, 4);
    detail::put_le(buf, n_max, 4);
    std::uint64_t sum = 0;
    for (unsigned n = 0; n <= n_max; ++n) {
        for (word_t w : table.csa_row(n).words()) {
            detail::put_le(buf, w, 8);
            sum += w;
        }
    }
    detail::put_le(buf, sum, 8);
    return buf;
}

/// Parses cache bytes, validating magic, version, size and checksum.
inline DimTable decode_table(std::string_view bytes,
                             std::uint64_t memory_cap = default_memory_cap) {
    using kind = cache_error::kind;
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
    if (bytes.size() < cache_magic.size() ||
        !std::equal(cache_magic.begin(), cache_magic.end(), bytes.begin()))
        throw cache_error(kind::magic, "not a table cache (bad magic)");
    if (bytes.size() < 12)
        throw cache_error(kind::checksum, "checksum mismatch: header truncated");
    const auto version = static_cast<std::uint32_t>(detail::get_le(p + 4, 4));
    if (version != cache_format_version)
        throw cache_error(kind::version, "unsupported cache format version " +
                                             std::to_string(version) + " (expected " +
                                             std::to_string(cache_format_version) + ")");
    const auto n_max = static_cast<std::uint32_t>(detail::get_le(p + 8, 4));
    if (estimated_table_bytes(n_max) > memory_cap)
        throw resource_error("cached table n_max=" + std::to_string(n_max) +
                             " exceeds the memory cap");
    const std::size_t len = std::size_t{n_max} * n_max + 1;
    const std::size_t words = words_for_bits(len);
    const std::size_t expected = 12 + (std::size_t{n_max} + 1) * words * 8 + 8;
    if (bytes.size() != expected)
        throw cache_error(kind::checksum, "checksum mismatch: file has " +
                                              std::to_string(bytes.size()) + " bytes, expected " +
                                              std::to_string(expected) + " (truncated or padded)");
    std::vector<bit_vector> rows(std::size_t{n_max} + 1, bit_vector(len));
    std::uint64_t sum = 0;
    const unsigned char* cur = p + 12;
    for (auto& row : rows) {
        for (word_t& w : row.words()) {
            w = detail::get_le(cur, 8);
            sum += w;
            cur += 8;
        }
    }
    if (detail::get_le(cur, 8) != sum) throw cache_error(kind::checksum, "checksum mismatch");
    for (unsigned n = 0; n <= n_max; ++n) {
        // Also rejects stray bits in the padding of the last word.
        const bit_view row = rows[n].view();
        const std::size_t top = row.last_set();
        if (top != bit_view::npos && top > std::size_t{n} * n)
            throw cache_error(kind::corrupt,
                              "row " + std::to_string(n) + " has dimensions above n^2");
    }
    return DimTable::from_rows(n_max, std::move(rows));
}

inline void save_table(const DimTable& table, const std::filesystem::path& path) {
    detail::cache_lock lock(path.string() + ".lock");
    const std::string bytes = encode_table(table);
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw cache_error(cache_error::kind::io, "cannot write " + tmp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw cache_error(cache_error::kind::io, "short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw cache_error(cache_error::kind::io, "cannot replace " + path.string());
}

inline DimTable load_table(const std::filesystem::path& path,
                           std::uint64_t memory_cap = default_memory_cap) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cache_error(cache_error::kind::io, "cannot open " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_table(bytes, memory_cap);
}

} // namespace csadim
