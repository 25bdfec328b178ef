#pragma once

// Dense bit vectors over 64-bit words, little-endian bit order within a
// word (bit i lives in word i/64 at position i%64). Bits at or beyond
// size() are always zero.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace csadim {

using word_t = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

constexpr std::size_t words_for_bits(std::size_t bits) noexcept {
    return (bits + word_bits - 1) / word_bits;
}

/// Read-only view of the first `size` bits of a word array.
class bit_view {
public:
    constexpr bit_view() = default;
    constexpr bit_view(std::span<const word_t> words, std::size_t size) noexcept
        : words_(words.first(words_for_bits(size))), size_(size) {}

    constexpr std::size_t size() const noexcept { return size_; }
    constexpr std::span<const word_t> words() const noexcept { return words_; }

    constexpr bool test(std::size_t i) const noexcept {
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }

    /// Number of set bits among the first `limit` bits (clamped to size()).
    std::size_t count(std::size_t limit) const noexcept {
        limit = std::min(limit, size_);
        const std::size_t full = limit / word_bits;
        std::size_t c = 0;
        for (std::size_t w = 0; w < full; ++w) c += std::popcount(words_[w]);
        if (const std::size_t rest = limit % word_bits; rest != 0)
            c += std::popcount(words_[full] & ((word_t{1} << rest) - 1));
        return c;
    }
    std::size_t count() const noexcept { return count(size_); }

    /// Index of the first set bit at or after `from`, or size() if none.
    std::size_t next_set(std::size_t from) const noexcept {
        if (from >= size_) return size_;
        std::size_t w = from / word_bits;
        word_t cur = words_[w] & (~word_t{0} << (from % word_bits));
        while (cur == 0) {
            if (++w == words_.size()) return size_;
            cur = words_[w];
        }
        return std::min(size_, w * word_bits + std::countr_zero(cur));
    }

    /// Index of the first clear bit, or size() if every bit is set.
    std::size_t first_unset() const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] != ~word_t{0})
                return std::min(size_, w * word_bits + std::countr_one(words_[w]));
        }
        return size_;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Index of the last set bit in the backing words, or npos if none.
    std::size_t last_set() const noexcept {
        for (std::size_t w = words_.size(); w-- > 0;) {
            if (words_[w] != 0) return w * word_bits + (word_bits - 1 - std::countl_zero(words_[w]));
        }
        return npos;
    }

    std::vector<std::uint64_t> indices() const {
        std::vector<std::uint64_t> out;
        for (std::size_t i = next_set(0); i < size_; i = next_set(i + 1)) out.push_back(i);
        return out;
    }

    /// Compares the first size() bits; backing bits past size() are ignored.
    friend bool operator==(const bit_view& a, const bit_view& b) noexcept {
        if (a.size_ != b.size_) return false;
        const std::size_t full = a.size_ / word_bits;
        if (!std::equal(a.words_.begin(), a.words_.begin() + full, b.words_.begin())) return false;
        const std::size_t rest = a.size_ % word_bits;
        if (rest == 0) return true;
        const word_t mask = (word_t{1} << rest) - 1;
        return (a.words_[full] & mask) == (b.words_[full] & mask);
    }

private:
    std::span<const word_t> words_;
    std::size_t size_ = 0;
};

class bit_vector {
public:
    bit_vector() = default;
    explicit bit_vector(std::size_t size) : words_(words_for_bits(size), 0), size_(size) {}

    std::size_t size() const noexcept { return size_; }
    std::span<const word_t> words() const noexcept { return words_; }
    std::span<word_t> words() noexcept { return words_; }

    bool test(std::size_t i) const noexcept { return view().test(i); }
    void set(std::size_t i) noexcept { words_[i / word_bits] |= word_t{1} << (i % word_bits); }
    void reset(std::size_t i) noexcept { words_[i / word_bits] &= ~(word_t{1} << (i % word_bits)); }

    bit_view view() const noexcept { return {words_, size_}; }
    /// View of the first `logical` bits (logical <= size()).
    bit_view view(std::size_t logical) const noexcept { return {words_, logical}; }

    bit_vector& operator|=(const bit_vector& other) noexcept {
        const std::size_t n = std::min(words_.size(), other.words_.size());
        for (std::size_t w = 0; w < n; ++w) words_[w] |= other.words_[w];
        clear_tail();
        return *this;
    }

    /// this |= (src << shift), reading only the first `src_bits` bits of src.
    /// Bits pushed past size() are dropped.
    void or_shifted(bit_view src, std::size_t shift, std::size_t src_bits) noexcept {
        src_bits = std::min(src_bits, src.size());
        if (src_bits == 0 || shift >= size_) return;
        const std::span<const word_t> in = src.words().first(words_for_bits(src_bits));
        const word_t last_mask = src_bits % word_bits == 0
                                     ? ~word_t{0}
                                     : (word_t{1} << (src_bits % word_bits)) - 1;
        const std::size_t ws = shift / word_bits;
        const unsigned bs = shift % word_bits;
        const std::size_t limit = words_.size();
        const std::size_t n = std::min(in.size(), limit - ws);
        word_t* out = words_.data() + ws;
        word_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const word_t x = i + 1 == in.size() ? in[i] & last_mask : in[i];
            if (bs == 0) {
                out[i] |= x;
            } else {
                out[i] |= (x << bs) | carry;
                carry = x >> (word_bits - bs);
            }
        }
        if (carry != 0 && ws + n < limit) out[n] |= carry;
        clear_tail();
    }

    friend bool operator==(const bit_vector& a, const bit_vector& b) noexcept {
        return a.view() == b.view();
    }

private:
    void clear_tail() noexcept {
        if (const std::size_t rest = size_ % word_bits; rest != 0 && !words_.empty())
            words_.back() &= (word_t{1} << rest) - 1;
    }

    std::vector<word_t> words_;
    std::size_t size_ = 0;
};

} // namespace csadim
