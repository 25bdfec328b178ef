// Greedy versus exact widths of the first few even integers.
#include <cstdio>
#include <cstdlib>

#include <csadim/csadim.hpp>

int main(int argc, char** argv) {
    const unsigned long limit = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 100;
    const auto table = csadim::build_table(static_cast<unsigned>(csadim::greedy_width(limit & ~1ul)) + 40);

    std::printf("%6s %6s %6s  %s\n", "2m", "exact", "greedy", "terms");
    for (unsigned long two_m = 0; two_m <= limit; two_m += 2) {
        const auto g = csadim::greedy_decomposition(two_m);
        std::printf("%6lu %6u %6lu ", two_m, csadim::exact_width(two_m, table),
                    static_cast<unsigned long>(g.width));
        for (auto t : g.terms) std::printf(" %lu", static_cast<unsigned long>(t));
        std::printf("\n");
    }
}
