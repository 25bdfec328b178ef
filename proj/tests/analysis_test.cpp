#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include <csadim/analysis.hpp>

#include "oracles.hpp"

using namespace csadim;

namespace {

const DimTable& table300() {
    static const DimTable t = build_table(300);
    return t;
}

/// (9/2) n^{3/2} in long double, for cross-checking exact floors.
long double nine_halves_n32(unsigned n) { return 4.5L * n * std::sqrt(static_cast<long double>(n)); }

} // namespace

TEST(IntervalS, FormulaValues) {
    const IntervalSj a = interval_S(100, 1);
    EXPECT_EQ(a.lo, 100u);
    EXPECT_EQ(a.hi, 4456u); // 100 + floor(4 * 99^2 / 9)
    const IntervalSj b = interval_S(100, 62);
    EXPECT_EQ(b.lo, 3882u);  // 100 + 62 * 61
    EXPECT_EQ(b.hi, 4522u);  // 3882 + floor(4 * 38^2 / 9) = 4523, lowered to even
}

TEST(IntervalS, RangeErrors) {
    EXPECT_THROW(interval_S(100, 0), range_error);
    EXPECT_THROW(interval_S(100, 63), range_error);
    EXPECT_THROW(interval_S(37, 1), range_error);
    EXPECT_NO_THROW(interval_S(39, 1));
}

TEST(IntervalS, ParityAndOrder) {
    for (unsigned n = 39; n <= 400; ++n)
        for (unsigned j = 1; j <= n - greedy_floor; ++j) {
            const IntervalSj s = interval_S(n, j);
            ASSERT_EQ(s.lo % 2, n % 2);
            ASSERT_EQ(s.hi % 2, n % 2);
            ASSERT_LE(s.lo, s.hi);
        }
}

TEST(IntervalS, MembersOfS5At100AreInC100) {
    const DimTable& t = table300();
    const IntervalSj s = interval_S(100, 5);
    for (std::uint64_t d = s.lo; d <= s.hi; d += 2) ASSERT_TRUE(is_csa_dim(t, 100, d)) << d;
}

TEST(IntervalS, SoundForLargeN) {
    // Every member of S_j is 1 block of size j plus a CSA of M_{n-j}.
    const DimTable& t = table300();
    for (unsigned n = 225; n <= t.n_max(); n += 15) {
        const unsigned top = std::min(j_max(n), n - greedy_floor);
        for (unsigned j = 1; j <= top; ++j) {
            const IntervalSj s = interval_S(n, j);
            for (std::uint64_t d = s.lo; d <= s.hi; d += 2) ASSERT_TRUE(t.csa(n).contains(d)) << n << " " << j;
        }
    }
}

TEST(OverlapRoot, IsTheSmallerRootOfTheQuadratic) {
    EXPECT_NEAR(overlap_root(100), 102.25 - 1.5 * std::sqrt(202.25), 1e-12);
    EXPECT_NEAR(overlap_root(100), 80.9178, 1e-4);
    for (unsigned n = 1; n <= 10000; ++n) {
        const double r = overlap_root(n);
        const auto j = static_cast<std::int64_t>(std::floor(r));
        ASSERT_GE(overlap_quadratic(n, j), 0) << n;
        ASSERT_LT(overlap_quadratic(n, j + 1), 0) << n;
    }
}

TEST(OverlapRoot, ConsecutiveIntervalsAt100) {
    // j = 80 is below the root (80.92), j = 81 and j = 86 are above it.
    const auto hi = [](unsigned n, unsigned j) {
        return n + std::uint64_t{j} * (j - 1) + 4 * std::uint64_t(n - j) * (n - j) / 9;
    };
    const auto lo = [](unsigned n, unsigned j) { return n + std::uint64_t{j} * (j - 1); };
    EXPECT_GE(hi(100, 80), lo(100, 81));
    EXPECT_LT(hi(100, 81), lo(100, 82));
    EXPECT_LT(hi(100, 86), lo(100, 87));
    EXPECT_EQ(overlap_quadratic(100, 86), -764);
}

TEST(ChainOverlap, ConsecutiveIntervalsMeetBelowRoot) {
    for (unsigned n = 225; n <= 2000; ++n) {
        const unsigned top = std::min<unsigned>(n - greedy_floor,
                                                static_cast<unsigned>(std::floor(overlap_root(n))));
        for (unsigned j = 1; j < top; ++j) ASSERT_GE(interval_S(n, j).hi, interval_S(n, j + 1).lo) << n << " " << j;
    }
}

TEST(JMax, Values) {
    EXPECT_EQ(j_max(100), 85u);
    EXPECT_EQ(j_max(225), 202u);
    EXPECT_EQ(j_max(3), 0u); // 3 - 2.598...
    EXPECT_THROW(j_max(2), range_error);
    for (unsigned n = 3; n <= 10000; ++n) {
        const long double exact = n - 1.5L * std::sqrt(static_cast<long double>(n));
        ASSERT_EQ(j_max(n), static_cast<unsigned>(std::floor(exact))) << n;
    }
}

TEST(TheoremBound, Values) {
    EXPECT_EQ(theorem_bound(225), 35436u);
    EXPECT_EQ(theorem_bound(4), 0u);
    EXPECT_EQ(theorem_bound(1), 0u);
    for (unsigned n = 1; n <= 5000; ++n) {
        const std::uint64_t b = theorem_bound(n);
        ASSERT_EQ(b % 2, 0u);
        ASSERT_LE(b, std::uint64_t{n} * n);
        const long double real = static_cast<long double>(n) * n - nine_halves_n32(n);
        if (real < 0) {
            ASSERT_EQ(b, 0u);
        } else {
            ASSERT_LE(static_cast<long double>(b), real);
            ASSERT_GT(static_cast<long double>(b) + 2, real);
        }
    }
}

TEST(CorollaryBound, Values) {
    // 49: 2401 - 98 - 4.5 * 343 = 759.5
    EXPECT_EQ(corollary_bound(49), 759u);
    EXPECT_EQ(corollary_bound(10), 0u);
    for (unsigned n = 1; n <= 5000; ++n) {
        const long double real = static_cast<long double>(n) * n - 2.0L * n - nine_halves_n32(n);
        const std::uint64_t b = corollary_bound(n);
        if (real < 0) { ASSERT_EQ(b, 0u); }
        else { ASSERT_EQ(b, static_cast<std::uint64_t>(std::floor(real))) << n; }
    }
}

TEST(VerifyTheoremMain, NoFailuresAt225And300) {
    const DimTable& t = table300();
    for (unsigned n : {225u, 300u}) {
        const VerifyReport r = verify_theorem_main(n, t);
        EXPECT_TRUE(r.ok()) << n;
        EXPECT_EQ(r.upper, theorem_bound(n));
        EXPECT_EQ(r.checked, theorem_bound(n) / 2 + 1);
    }
}

TEST(VerifyTheoremMain, SmallNIsInformational) {
    const DimTable& t = table300();
    const VerifyReport r = verify_theorem_main(10, t);
    EXPECT_EQ(r.upper, 0u);
    EXPECT_EQ(r.checked, 1u);
    EXPECT_THROW(verify_theorem_main(301, t), range_error);
}

TEST(VerifyCorollary, NoFailuresAt49And100) {
    const DimTable& t = table300();
    for (unsigned n : {49u, 100u}) {
        const VerifyReport r = verify_corollary(n, t);
        EXPECT_TRUE(r.ok()) << n;
        EXPECT_EQ(r.checked, corollary_bound(n) + 1);
    }
}

TEST(Gap, SmallValuesAgainstEnumeration) {
    const DimTable& t = table300();
    EXPECT_EQ(gap(0, t).gap, 1u);
    EXPECT_EQ(gap(1, t).gap, 2u);
    EXPECT_EQ(gap(4, t).gap, 7u);
    for (unsigned n = 0; n <= 12; ++n) {
        const auto d = oracle::naive_semisimple(n);
        std::uint64_t first = 0;
        while (d.contains(first)) ++first;
        EXPECT_EQ(gap(n, t).gap, first) << n;
    }
}

TEST(Gap, RecordFields) {
    const DimTable& t = table300();
    const GapRecord g = gap(4, t);
    EXPECT_DOUBLE_EQ(g.normalized, 1.125); // (16 - 7) / 8
    EXPECT_EQ(g.sign_13_4, -1);             // 9 < 26
    EXPECT_EQ(g.sign_7_2, -1);              // 9 < 28
    EXPECT_THROW(gap(301, t), range_error);
}

TEST(Gap, EnvelopeAndNormalizedBound) {
    const DimTable& t = table300();
    for (unsigned n = 1; n <= t.n_max(); ++n) {
        const GapRecord g = gap(n, t);
        ASSERT_GT(g.gap, n);
        if (n >= 2) { ASSERT_GE(g.normalized, 0.0); }
        if (n >= corollary_n_min) { ASSERT_TRUE(gap_exceeds_corollary_bound(g)) << n; }
        if (n >= 225) { ASSERT_LE(g.normalized, 4.5 + 2 / std::sqrt(double(n)) + 1e-12); }
    }
}

TEST(SweepGap, SummaryMatchesRows) {
    const DimTable& t = table300();
    const GapSweep s = sweep_gap(100, 300, t);
    ASSERT_EQ(s.records.size(), 201u);
    double lo = 1e9, hi = -1e9;
    std::size_t pos = 0, neg = 0;
    for (const auto& g : s.records) {
        EXPECT_GE(g.normalized, 0.0);
        EXPECT_LE(g.normalized, 4.5);
        lo = std::min(lo, g.normalized);
        hi = std::max(hi, g.normalized);
        pos += g.sign_13_4 > 0;
        neg += g.sign_7_2 < 0;
    }
    EXPECT_EQ(s.summary.min_normalized, lo);
    EXPECT_EQ(s.summary.max_normalized, hi);
    EXPECT_DOUBLE_EQ(s.summary.frac_13_4_positive, pos / 201.0);
    EXPECT_DOUBLE_EQ(s.summary.frac_7_2_negative, neg / 201.0);
    EXPECT_THROW(sweep_gap(5, 4, t), range_error);
    EXPECT_THROW(sweep_gap(100, 301, t), range_error);
}

TEST(SweepGap, SignsAgreeWithFloatingPointAwayFromTies) {
    const DimTable& t = table300();
    for (const auto& g : sweep_gap(1, 300, t).records) {
        const long double n = g.n;
        const long double a = n * n - 3.25L * n * std::sqrt(n) - g.gap;
        const long double b = n * n - 3.5L * n * std::sqrt(n) - g.gap;
        if (std::fabs(a) > 1e-6L) { ASSERT_EQ(g.sign_13_4, a > 0 ? 1 : -1) << g.n; }
        if (std::fabs(b) > 1e-6L) { ASSERT_EQ(g.sign_7_2, b > 0 ? 1 : -1) << g.n; }
    }
}

TEST(Density, Values) {
    const DimTable& t = table300();
    EXPECT_DOUBLE_EQ(density(1, t), 1.0);
    EXPECT_DOUBLE_EQ(density(4, t), 11.0 / 17.0);
    EXPECT_DOUBLE_EQ(density(0, t), 1.0);
    for (unsigned n = corollary_n_min; n <= t.n_max(); ++n) {
        ASSERT_TRUE(density_meets_corollary_bound(n, t)) << n;
        const long double bound =
            (static_cast<long double>(n) * n - nine_halves_n32(n) - 2.0L * n) / (static_cast<long double>(n) * n + 1);
        ASSERT_GE(density(n, t), bound);
    }
}
