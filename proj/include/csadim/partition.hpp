#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace csadim {

/// Default largest n accepted by partition enumeration.
inline constexpr unsigned default_oracle_cap = 40;

/// A multiset of positive block sizes, stored non-increasing.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        if (std::ranges::find(parts_, 0u) != parts_.end())
            throw std::invalid_argument("partition parts must be positive");
        std::ranges::sort(parts_, std::greater<>{});
    }
    Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// n, the sum of the parts.
    std::uint64_t sum() const noexcept {
        return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
    }

    /// The dimension of the block-diagonal algebra: sum of squared parts.
    std::uint64_t squared_sum() const noexcept {
        std::uint64_t s = 0;
        for (unsigned d : parts_) s += std::uint64_t{d} * d;
        return s;
    }

    std::string to_string() const {
        std::string out;
        for (unsigned d : parts_) {
            if (!out.empty()) out += ' ';
            out += std::to_string(d);
        }
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    friend class partition_range;

    std::vector<unsigned> parts_;
};

/// All partitions of n in reverse-lexicographic order, as an input range.
/// n = 0 yields a single empty partition.
class partition_range {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const value_type*;
        using reference = const value_type&;

        iterator() = default;
        explicit iterator(unsigned n) : done_(false) {
            if (n > 0) current_.parts_.push_back(n);
        }

        reference operator*() const noexcept { return current_; }
        pointer operator->() const noexcept { return &current_; }

        iterator& operator++() {
            advance();
            return *this;
        }
        void operator++(int) { advance(); }

        friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept {
            return it.done_;
        }

    private:
        void advance() {
            // Strip trailing ones, decrement the last part > 1, then refill
            // greedily with parts no larger than the decremented value.
            auto& parts = current_.parts_;
            unsigned ones = 0;
            while (!parts.empty() && parts.back() == 1) {
                parts.pop_back();
                ++ones;
            }
            if (parts.empty()) {
                done_ = true;
                return;
            }
            const unsigned cap = --parts.back();
            unsigned rest = ones + 1;
            while (rest > 0) {
                const unsigned d = std::min(cap, rest);
                parts.push_back(d);
                rest -= d;
            }
        }

        Partition current_;
        bool done_ = true;
    };

    explicit partition_range(unsigned n) noexcept : n_(n) {}

    iterator begin() const { return iterator(n_); }
    std::default_sentinel_t end() const noexcept { return {}; }

private:
    unsigned n_;
};

/// Stream every partition of n, refusing n above `cap`.
inline partition_range enumerate_partitions(unsigned n, unsigned cap = default_oracle_cap) {
    if (n > cap)
        throw resource_error("partition enumeration of n=" + std::to_string(n) +
                             " exceeds the oracle cap of " + std::to_string(cap));
    return partition_range(n);
}

} // namespace csadim
