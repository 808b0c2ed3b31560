// Colours the six-car instance from the illustration with every classical
// scheme and the exact solver, printing one row per scheme.
#include <iomanip>
#include <iostream>

#include "bpsp/bpsp.hpp"

int main() {
    const auto x = bpsp::validate_instance({5, 1, 1, 3, 2, 2, 5, 4, 3, 6, 6, 4});
    std::cout << "instance  " << bpsp::format_instance(x) << "\n\n";
    const struct {
        const char* name;
        bpsp::FullColoring coloring;
    } rows[] = {
        {"red-first", bpsp::red_first(x)},
        {"greedy", bpsp::greedy(x)},
        {"rec-greedy", bpsp::recursive_greedy(x)},
        {"rec-star", bpsp::recursive_star_greedy(x)},
        {"optimum", bpsp::bpsp_bruteforce(x).coloring},
    };
    for (const auto& r : rows) {
        std::cout << std::left << std::setw(12) << r.name << r.coloring.str() << "  swaps "
                  << bpsp::swap_count(r.coloring) << '\n';
    }
}
