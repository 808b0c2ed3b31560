// Prints the MaxCut graph and Ising Hamiltonian of an instance read from the
// command line (default: 1 2 1 3 3 2), then checks the ground state against
// brute force over colourings.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "bpsp/bpsp.hpp"

int main(int argc, char** argv) {
    std::vector<int> word;
    for (int i = 1; i < argc; ++i) {
        word.push_back(std::atoi(argv[i]));
    }
    if (word.empty()) {
        word = {1, 2, 1, 3, 3, 2};
    }
    try {
        const auto x = bpsp::validate_instance(word);
        const auto g = bpsp::build_graph(x);
        const auto h = bpsp::build_ising(x);

        std::cout << "# graph: n m, then u v weight\n";
        bpsp::write_graph(std::cout, g);
        std::cout << "# ising: n offset, then u v J (fractions as num den)\n";
        bpsp::write_ising(std::cout, h);

        if (x.n() <= bpsp::brute_force_limit) {
            const auto ground = bpsp::ising_ground_state(h);
            const auto cut = bpsp::maxcut_bruteforce(g);
            std::cout << "ground energy " << ground.energy() << ", max cut " << cut.value << ", red-first "
                      << bpsp::swap_count(bpsp::red_first(x)) << ", optimum " << bpsp::bpsp_bruteforce(x).cost
                      << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
