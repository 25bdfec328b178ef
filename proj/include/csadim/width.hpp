#pragma once

// Greedy and exact widths of even integers 2m. A block of size t
// contributes t(t-1) to 2m = sum t_i(t_i - 1) when sum t_i = n, so a CSA
// of M_n with block sizes t_i has dimension n + 2m.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "dim_table.hpp"
#include "errors.hpp"
#include "int_math.hpp"

namespace csadim {

struct GreedyDecomposition {
    std::uint64_t target = 0;
    std::vector<std::uint64_t> terms; // non-increasing
    std::uint64_t width = 0;          // sum of terms
};

namespace detail {
inline void check_even(std::uint64_t two_m) {
    if (two_m % 2 != 0)
        throw parity_error("expected an even integer 2m, got " + std::to_string(two_m));
}
} // namespace detail

/// Largest t >= 1 with t(t-1) <= r, for r < 2^62.
inline std::uint64_t largest_block(std::uint64_t r) noexcept {
    // (t-1)^2 <= t(t-1) <= r < (t+1)t, so t is within one of isqrt(r) + 1.
    std::uint64_t t = isqrt(r) + 1;
    while (t > 1 && t * (t - 1) > r) --t;
    while ((t + 1) * t <= r) ++t;
    return t;
}

inline GreedyDecomposition greedy_decomposition(std::uint64_t two_m) {
    detail::check_even(two_m);
    GreedyDecomposition g;
    g.target = two_m;
    for (std::uint64_t rest = two_m; rest > 0;) {
        // rest is even and positive, so t >= 2.
        const std::uint64_t t = largest_block(rest);
        g.terms.push_back(t);
        g.width += t;
        rest -= t * (t - 1);
    }
    return g;
}

inline std::uint64_t greedy_width(std::uint64_t two_m) {
    return greedy_decomposition(two_m).width;
}

/// Whether 2m is realisable in dimension n, i.e. n + 2m is in C(n).
inline bool realisable_in(std::uint64_t two_m, unsigned n, const DimTable& table) {
    detail::check_even(two_m);
    table.check_row(n);
    const std::uint64_t dim = std::uint64_t{n} + two_m;
    if (dim > std::uint64_t{n} * n) return false;
    return table.csa(n).contains(dim);
}

/// The smallest n in which 2m is realisable. exact_width(0) = 0.
inline unsigned exact_width(std::uint64_t two_m, const DimTable& table) {
    detail::check_even(two_m);
    for (unsigned n = 0; n <= table.n_max(); ++n) {
        if (realisable_in(two_m, n, table)) return n;
    }
    throw range_error("width of " + std::to_string(two_m) + " exceeds table n_max=" +
                      std::to_string(table.n_max()) + "; greedy width upper bound is " +
                      std::to_string(greedy_width(two_m)));
}

struct GreedyViolation {
    std::uint64_t two_m;
    std::uint64_t greedy_width;
    double bound; // (3/2) sqrt(2m)

    friend bool operator==(const GreedyViolation&, const GreedyViolation&) = default;
};

/// Sign of G - (3/2) sqrt(2m), exactly.
constexpr int compare_greedy_to_sqrt_bound(std::uint64_t width, std::uint64_t two_m) noexcept {
    // 2G vs 3 sqrt(2m)  <=>  4G^2 vs 9 * 2m
    const u128 lhs = u128(4) * width * width;
    const u128 rhs = u128(9) * two_m;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

/// Whether G(2m) <= max{(3/2) sqrt(2m), 38}.
constexpr bool within_greedy_bound(std::uint64_t width, std::uint64_t two_m) noexcept {
    return width <= 38 || compare_greedy_to_sqrt_bound(width, two_m) <= 0;
}

/// Every even 2m <= 2 m_max with G(2m) > (3/2) sqrt(2m), in increasing order.
/// The 38 fallback is not applied; within_greedy_bound checks the full bound.
inline std::vector<GreedyViolation> verify_greedy_bound(std::uint64_t m_max) {
    std::vector<GreedyViolation> out;
    for (std::uint64_t two_m = 0; two_m <= 2 * m_max; two_m += 2) {
        const std::uint64_t g = greedy_width(two_m);
        if (compare_greedy_to_sqrt_bound(g, two_m) > 0)
            out.push_back({two_m, g, 1.5 * std::sqrt(static_cast<double>(two_m))});
    }
    return out;
}

} // namespace csadim
