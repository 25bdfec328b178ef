// gap(n) and density of D(n) every `step` values of n.
#include <cstdio>
#include <cstdlib>

#include <csadim/csadim.hpp>

int main(int argc, char** argv) {
    const unsigned n_max = argc > 1 ? static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10)) : 600;
    const unsigned step = argc > 2 ? static_cast<unsigned>(std::strtoul(argv[2], nullptr, 10)) : 50;
    const auto table = csadim::build_table(n_max);

    std::printf("%6s %10s %10s %9s\n", "n", "gap", "norm", "density");
    for (unsigned n = step; n <= n_max; n += step) {
        const auto g = csadim::gap(n, table);
        std::printf("%6u %10lu %10.4f %9.4f\n", n, static_cast<unsigned long>(g.gap), g.normalized,
                    csadim::density(n, table));
    }
}
