// Runs RQAOA on one random instance and shows each elimination, then
// compares against the classical heuristics.
#include <cstdlib>
#include <iostream>

#include "bpsp/bpsp.hpp"

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 20;
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
    if (n < 1) {
        std::cerr << "usage: sample_rqaoa_trace [n] [seed]\n";
        return 2;
    }
    const auto x = bpsp::generate_instance(n, bpsp::Seed{seed});
    std::cout << "instance " << bpsp::format_instance(x) << '\n';

    std::vector<bpsp::Constraint> trace;
    const bpsp::Solution s = bpsp::rqaoa_solve(x, bpsp::rqaoa_default_cutoff, &trace);
    bpsp::write_trace(std::cout, trace);
    std::cout << "rqaoa  " << s.cost << " swaps  " << s.coloring.str() << '\n';
    std::cout << "rsg    " << bpsp::swap_count(bpsp::recursive_star_greedy(x)) << " swaps\n";
    std::cout << "rg     " << bpsp::swap_count(bpsp::recursive_greedy(x)) << " swaps\n";
    if (n <= bpsp::brute_force_limit) {
        std::cout << "exact  " << bpsp::bpsp_bruteforce(x).cost << " swaps\n";
    }
}
