#pragma once

// Checks of the large-n structure of C(n) and D(n): the overlapping
// interval family S_j, the n^2 - (9/2) n^{3/2} realisability bound, its
// corollary for D(n), gap(n), and density.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "dim_table.hpp"
#include "errors.hpp"
#include "int_math.hpp"
#include "width.hpp"

namespace csadim {

/// Smallest block count for which the greedy bound guarantees every
/// 2m <= (4/9) n^2 is realisable.
inline constexpr unsigned greedy_floor = 38;
inline constexpr unsigned default_theorem_n_min = 225;
inline constexpr unsigned corollary_n_min = 49;

/// Dimensions of CSAs with a j x j leading block followed by a CSA of
/// M_{n-j} covering offsets up to (4/9)(n-j)^2.
struct IntervalSj {
    unsigned n;
    unsigned j;
    std::uint64_t lo; // n + j(j-1)
    std::uint64_t hi; // lo + floor((4/9)(n-j)^2), lowered to the parity of n
};

inline IntervalSj interval_S(unsigned n, unsigned j) {
    if (j < 1 || n < greedy_floor || j > n - greedy_floor)
        throw range_error("interval S_j needs 1 <= j <= n - 38; got n=" + std::to_string(n) +
                          ", j=" + std::to_string(j));
    const std::uint64_t lo = std::uint64_t{n} + std::uint64_t{j} * (j - 1);
    const std::uint64_t rest = n - j;
    std::uint64_t hi = lo + (4 * rest * rest) / 9;
    if ((hi ^ n) & 1u) --hi;
    return {n, j, lo, hi};
}

/// Smaller root of 4j^2 - (8n+18)j + 4n^2, i.e. n + 9/4 - (3/2) sqrt(2n + 9/4).
/// The discriminant is 36(8n + 9). S_j and S_{j+1} overlap for integer j at
/// or below this root.
inline double overlap_root(unsigned n) {
    const double x = n;
    return x + 2.25 - 1.5 * std::sqrt(2 * x + 2.25);
}

/// 4j^2 - (8n+18)j + 4n^2; nonnegative iff (4/9)(n-j)^2 >= 2j.
constexpr std::int64_t overlap_quadratic(std::int64_t n, std::int64_t j) noexcept {
    return 4 * j * j - (8 * n + 18) * j + 4 * n * n;
}

/// floor(n - (3/2) sqrt(n)), exactly.
inline unsigned j_max(unsigned n) {
    if (n < 3) throw range_error("j_max needs n >= 3");
    // n - ceil((3/2) sqrt n); ceil is the least c with 4c^2 >= 9n.
    return n - static_cast<unsigned>(ceil_half_sqrt(u128(9) * n));
}

/// Largest integer <= c - (9/2) n^{3/2}, possibly negative.
inline std::int64_t floor_minus_nine_halves_n32(std::int64_t c, unsigned n) {
    return c - static_cast<std::int64_t>(ceil_scaled_n32(9, 2, n));
}

/// Largest even 2m <= n^2 - (9/2) n^{3/2}, or 0 if that is negative.
inline std::uint64_t theorem_bound(unsigned n) {
    const std::int64_t b = floor_minus_nine_halves_n32(std::int64_t{n} * n, n);
    if (b <= 0) return 0;
    return static_cast<std::uint64_t>(b) & ~std::uint64_t{1};
}

/// Upper end of the interval [0, n^2 - (9/2) n^{3/2} - 2n], clamped at 0.
inline std::uint64_t corollary_bound(unsigned n) {
    const std::int64_t b =
        floor_minus_nine_halves_n32(std::int64_t{n} * n - 2 * std::int64_t{n}, n);
    return b <= 0 ? 0 : static_cast<std::uint64_t>(b);
}

struct VerifyReport {
    unsigned n = 0;
    std::uint64_t upper = 0;            // last value checked
    std::uint64_t checked = 0;
    std::vector<std::uint64_t> failures; // 2m (theorem) or dimension (corollary)

    bool ok() const noexcept { return failures.empty(); }
};

/// n + 2m in C(n) for every even 2m in [0, theorem_bound(n)].
inline VerifyReport verify_theorem_main(unsigned n, const DimTable& table) {
    table.check_row(n);
    VerifyReport r;
    r.n = n;
    r.upper = theorem_bound(n);
    for (std::uint64_t two_m = 0; two_m <= r.upper; two_m += 2) {
        ++r.checked;
        if (!realisable_in(two_m, n, table)) r.failures.push_back(two_m);
    }
    return r;
}

/// Every integer in [0, corollary_bound(n)] lies in D(n).
inline VerifyReport verify_corollary(unsigned n, const DimTable& table) {
    const bit_view d = table.cumulative(n);
    VerifyReport r;
    r.n = n;
    r.upper = corollary_bound(n);
    for (std::uint64_t x = 0; x <= r.upper; ++x) {
        ++r.checked;
        if (x >= d.size() || !d.test(x)) r.failures.push_back(x);
    }
    return r;
}

struct GapRecord {
    unsigned n = 0;
    std::uint64_t gap = 0;
    double normalized = 0; // (n^2 - gap) / n^{3/2}
    int sign_13_4 = 0;     // sign of n^2 - (13/4) n^{3/2} - gap
    int sign_7_2 = 0;      // sign of n^2 - (7/2) n^{3/2} - gap
};

/// The first integer that is not in D(n).
inline GapRecord gap(unsigned n, const DimTable& table) {
    const bit_view d = table.cumulative(n);
    GapRecord g;
    g.n = n;
    g.gap = d.first_unset(); // d.size() = n^2 + 1 when D(n) is all of [0, n^2]
    const std::int64_t excess = std::int64_t{n} * n - static_cast<std::int64_t>(g.gap);
    g.normalized = n == 0 ? std::numeric_limits<double>::quiet_NaN()
                          : static_cast<double>(excess) / pow32(n);
    g.sign_13_4 = compare_with_n32(excess, 13, 4, n);
    g.sign_7_2 = compare_with_n32(excess, 7, 2, n);
    return g;
}

struct GapSummary {
    double min_normalized = 0;
    double max_normalized = 0;
    double frac_13_4_positive = 0;
    double frac_7_2_negative = 0;
};

struct GapSweep {
    std::vector<GapRecord> records;
    GapSummary summary;
};

inline GapSweep sweep_gap(unsigned n_lo, unsigned n_hi, const DimTable& table) {
    table.check_row(n_hi);
    if (n_lo > n_hi) throw range_error("sweep range is empty");
    GapSweep s;
    std::size_t pos = 0;
    std::size_t neg = 0;
    s.summary.min_normalized = std::numeric_limits<double>::infinity();
    s.summary.max_normalized = -std::numeric_limits<double>::infinity();
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        const GapRecord g = gap(n, table);
        s.records.push_back(g);
        if (n > 0) {
            s.summary.min_normalized = std::min(s.summary.min_normalized, g.normalized);
            s.summary.max_normalized = std::max(s.summary.max_normalized, g.normalized);
        }
        pos += g.sign_13_4 > 0;
        neg += g.sign_7_2 < 0;
    }
    const double count = static_cast<double>(s.records.size());
    s.summary.frac_13_4_positive = static_cast<double>(pos) / count;
    s.summary.frac_7_2_negative = static_cast<double>(neg) / count;
    return s;
}

/// |D(n)| / (n^2 + 1).
inline double density(unsigned n, const DimTable& table) {
    const bit_view d = table.cumulative(n);
    return static_cast<double>(d.count()) / static_cast<double>(d.size());
}

/// Whether |D(n)| / (n^2 + 1) >= (n^2 - (9/2) n^{3/2} - 2n) / (n^2 + 1), exactly.
inline bool density_meets_corollary_bound(unsigned n, const DimTable& table) {
    const std::int64_t members = static_cast<std::int64_t>(table.cumulative(n).count());
    // members >= n^2 - 2n - (9/2) n^{3/2}  <=>  n^2 - 2n - members <= (9/2) n^{3/2}
    const std::int64_t k = std::int64_t{n} * n - 2 * std::int64_t{n} - members;
    return compare_with_n32(k, 9, 2, n) <= 0;
}

/// Whether gap(n) > n^2 - (9/2) n^{3/2} - 2n, exactly.
inline bool gap_exceeds_corollary_bound(const GapRecord& g) {
    const std::int64_t k = std::int64_t{g.n} * g.n - 2 * std::int64_t{g.n} -
                           static_cast<std::int64_t>(g.gap);
    return compare_with_n32(k, 9, 2, g.n) < 0;
}

} // namespace csadim
