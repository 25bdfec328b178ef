#pragma once

// C(n): the set of dimensions sum(d_i^2) over partitions d of n, computed
// for n = 0..n_max by the shift-OR recursion
//     C(0) = {0},   C(n) = OR_{j=1..n} (C(n-j) << j^2),
// together with the cumulative unions D(n) = C(0) | ... | C(n).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bit_vector.hpp"
#include "errors.hpp"
#include "partition.hpp"

namespace csadim {

/// Bytes needed by a table with rows 0..n_max (csa + cumulative).
constexpr std::uint64_t estimated_table_bytes(unsigned n_max) noexcept {
    const std::uint64_t bits = std::uint64_t{n_max} * n_max + 1;
    return 2 * (std::uint64_t{n_max} + 1) * words_for_bits(bits) * sizeof(word_t);
}

/// Default memory cap: enough for a table up to n_max = 1200 (~432 MB).
inline constexpr std::uint64_t default_memory_cap = estimated_table_bytes(1200);

/// Non-owning view of C(n); logical length n^2 + 1.
class DimensionSetView {
public:
    DimensionSetView(unsigned n, bit_view bits) noexcept : n_(n), bits_(bits) {}

    unsigned n() const noexcept { return n_; }
    bit_view bits() const noexcept { return bits_; }

    bool contains(std::uint64_t dim) const noexcept {
        return dim < bits_.size() && bits_.test(dim);
    }
    std::size_t count() const noexcept { return bits_.count(); }
    std::vector<std::uint64_t> values() const { return bits_.indices(); }

    friend bool operator==(const DimensionSetView& a, const DimensionSetView& b) noexcept {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    unsigned n_;
    bit_view bits_;
};

/// Owning dimension set for a single n.
class DimensionSet {
public:
    explicit DimensionSet(unsigned n) : n_(n), bits_(std::size_t{n} * n + 1) {}

    unsigned n() const noexcept { return n_; }
    void insert(std::uint64_t dim) { bits_.set(dim); }
    DimensionSetView view() const noexcept { return {n_, bits_.view()}; }
    bool contains(std::uint64_t dim) const noexcept { return view().contains(dim); }
    std::vector<std::uint64_t> values() const { return view().values(); }

private:
    unsigned n_;
    bit_vector bits_;
};

class DimTable {
public:
    unsigned n_max() const noexcept { return n_max_; }
    std::uint64_t memory_bytes() const noexcept { return estimated_table_bytes(n_max_); }

    /// C(n).
    DimensionSetView csa(unsigned n) const {
        check_row(n);
        return {n, csa_[n].view(std::size_t{n} * n + 1)};
    }

    /// D(n) = union of C(t), t <= n; logical length n^2 + 1.
    bit_view cumulative(unsigned n) const {
        check_row(n);
        return cumulative_[n].view(std::size_t{n} * n + 1);
    }

    /// Full-width row storage (length n_max^2 + 1), used by serialization.
    const bit_vector& csa_row(unsigned n) const {
        check_row(n);
        return csa_[n];
    }

    /// Rebuilds a table from stored C(n) rows, recomputing the cumulative unions.
    static DimTable from_rows(unsigned n_max, std::vector<bit_vector> rows) {
        DimTable t(n_max);
        if (rows.size() != std::size_t{n_max} + 1)
            throw std::invalid_argument("row count does not match n_max");
        t.csa_ = std::move(rows);
        t.accumulate();
        return t;
    }

    void check_row(unsigned n) const {
        if (n > n_max_)
            throw range_error("n=" + std::to_string(n) + " exceeds table n_max=" +
                              std::to_string(n_max_));
    }

private:
    explicit DimTable(unsigned n_max) : n_max_(n_max) {}

    void accumulate() {
        const std::size_t len = std::size_t{n_max_} * n_max_ + 1;
        cumulative_.assign(n_max_ + 1, bit_vector(len));
        for (unsigned n = 0; n <= n_max_; ++n) {
            if (n > 0) cumulative_[n] = cumulative_[n - 1];
            cumulative_[n] |= csa_[n];
        }
    }

    friend DimTable build_table(unsigned, std::uint64_t);

    unsigned n_max_;
    std::vector<bit_vector> csa_;
    std::vector<bit_vector> cumulative_;
};

/// Runs the recursion up to n_max. Refuses, before allocating, when the
/// table would exceed `memory_cap` bytes.
inline DimTable build_table(unsigned n_max, std::uint64_t memory_cap = default_memory_cap) {
    const std::uint64_t need = estimated_table_bytes(n_max);
    if (need > memory_cap)
        throw resource_error("table for n_max=" + std::to_string(n_max) + " needs " +
                             std::to_string(need) + " bytes, over the memory cap of " +
                             std::to_string(memory_cap));
    DimTable t(n_max);
    const std::size_t len = std::size_t{n_max} * n_max + 1;
    t.csa_.assign(n_max + 1, bit_vector(len));
    t.csa_[0].set(0);
    for (unsigned n = 1; n <= n_max; ++n) {
        bit_vector& row = t.csa_[n];
        for (unsigned j = 1; j <= n; ++j) {
            const unsigned rest = n - j;
            // C(rest) has nothing above rest^2.
            row.or_shifted(t.csa_[rest].view(), std::size_t{j} * j, std::size_t{rest} * rest + 1);
        }
    }
    t.accumulate();
    return t;
}

/// C(n) by enumerating every partition of n. Independent of the recursion.
inline DimensionSet csa_dims_bruteforce(unsigned n, unsigned oracle_cap = default_oracle_cap) {
    DimensionSet out(n);
    for (const Partition& p : enumerate_partitions(n, oracle_cap)) out.insert(p.squared_sum());
    return out;
}

namespace detail {
inline void check_dim(unsigned n, std::uint64_t dim) {
    if (dim > std::uint64_t{n} * n)
        throw range_error("dimension " + std::to_string(dim) + " outside [0, " +
                          std::to_string(std::uint64_t{n} * n) + "] for n=" + std::to_string(n));
}
} // namespace detail

/// Whether dim is in C(n). Mismatched parity is rejected without a lookup.
inline bool is_csa_dim(const DimTable& table, unsigned n, std::uint64_t dim) {
    table.check_row(n);
    detail::check_dim(n, dim);
    if ((dim ^ n) & 1u) return false;
    return table.csa(n).contains(dim);
}

/// A partition of n with squared sum dim, or nothing if dim is not in C(n).
/// At every step the largest feasible block is taken, so the result is the
/// lexicographically largest witness.
inline std::optional<Partition> witness_partition(const DimTable& table, unsigned n,
                                                  std::uint64_t dim) {
    table.check_row(n);
    if (!is_csa_dim(table, n, dim)) return std::nullopt;
    std::vector<unsigned> parts;
    while (n > 0) {
        unsigned j = n;
        for (; j >= 1; --j) {
            const std::uint64_t sq = std::uint64_t{j} * j;
            if (sq <= dim && table.csa(n - j).contains(dim - sq)) break;
        }
        // j >= 1 always: dim in C(n) guarantees some block fits.
        parts.push_back(j);
        dim -= std::uint64_t{j} * j;
        n -= j;
    }
    return Partition(std::move(parts));
}

/// D(n): dimensions of all (not necessarily connected) semi-simple
/// subalgebras of n x n matrices.
inline bit_view semisimple_dims(const DimTable& table, unsigned n) {
    return table.cumulative(n);
}

} // namespace csadim
