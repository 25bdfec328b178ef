#pragma once

// Test-only reference computations. These do not use the library's
// partition iterator or bit vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace csadim::oracle {

/// Calls f with every partition of n (parts <= max_part), built recursively.
inline void for_each_partition(unsigned n, unsigned max_part, std::vector<unsigned>& prefix,
                               const std::function<void(const std::vector<unsigned>&)>& f) {
    if (n == 0) {
        f(prefix);
        return;
    }
    for (unsigned d = std::min(n, max_part); d >= 1; --d) {
        prefix.push_back(d);
        for_each_partition(n - d, d, prefix, f);
        prefix.pop_back();
    }
}

inline std::set<std::uint64_t> naive_csa(unsigned n) {
    std::set<std::uint64_t> out;
    std::vector<unsigned> prefix;
    for_each_partition(n, n, prefix, [&](const std::vector<unsigned>& p) {
        std::uint64_t s = 0;
        for (unsigned d : p) s += std::uint64_t{d} * d;
        out.insert(s);
    });
    return out;
}

/// Union of naive_csa(t) for t <= n.
inline std::set<std::uint64_t> naive_semisimple(unsigned n) {
    std::set<std::uint64_t> out;
    for (unsigned t = 0; t <= n; ++t) {
        const auto c = naive_csa(t);
        out.insert(c.begin(), c.end());
    }
    return out;
}

} // namespace csadim::oracle
