#pragma once

// Exact integer helpers. Every comparison against a multiple of n^{3/2}
// is reduced to a comparison of squares so no floating point is involved.

#include <cmath>
#include <cstdint>

namespace csadim {

using u128 = unsigned __int128;

/// floor(sqrt(x)) for 128-bit x below 2^126.
inline u128 isqrt(u128 x) noexcept {
    // Long double guess, then exact correction (a step or two at most).
    u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

/// floor(sqrt(x)) for any 64-bit x.
inline std::uint64_t isqrt(std::uint64_t x) noexcept {
    return static_cast<std::uint64_t>(isqrt(u128(x)));
}

/// Smallest k >= 0 with 4k^2 >= v, i.e. ceil(sqrt(v) / 2).
inline u128 ceil_half_sqrt(u128 v) noexcept {
    u128 r = isqrt(v);
    if (r * r != v) ++r; // r = ceil(sqrt(v))
    return (r + 1) / 2;
}

/// Sign of  k - (num/den) * n^{3/2}  computed exactly (den > 0).
constexpr int compare_with_n32(std::int64_t k, std::uint64_t num, std::uint64_t den,
                               std::uint64_t n) noexcept {
    const u128 rhs = u128(num) * num * n * n * n;
    if (k < 0) return -1;
    const u128 lhs = u128(den) * std::uint64_t(k);
    const u128 lhs2 = lhs * lhs;
    return lhs2 < rhs ? -1 : (lhs2 > rhs ? 1 : 0);
}

/// Smallest integer k >= 0 with k >= (num/den) * n^{3/2}.
inline std::uint64_t ceil_scaled_n32(std::uint64_t num, std::uint64_t den,
                                        std::uint64_t n) noexcept {
    // k >= (num/den) n^{3/2}  <=>  (den k)^2 >= num^2 n^3
    const u128 v = u128(num) * num * n * n * n;
    u128 r = isqrt(v);
    if (r * r != v) ++r; // den*k must reach ceil(sqrt(v))
    return static_cast<std::uint64_t>((r + den - 1) / den);
}

/// n^{3/2} in double precision, for reporting only.
inline double pow32(std::uint64_t n) {
    const double d = static_cast<double>(n);
    return d * std::sqrt(d);
}

} // namespace csadim
