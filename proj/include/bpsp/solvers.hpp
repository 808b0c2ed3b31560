#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bpsp/brute_force.hpp"
#include "bpsp/coloring.hpp"
#include "bpsp/heuristics.hpp"
#include "bpsp/instance.hpp"
#include "bpsp/ising.hpp"
#include "bpsp/qaoa1.hpp"
#include "bpsp/rqaoa.hpp"
#include "bpsp/statevector.hpp"
#include "bpsp/xqaoa.hpp"

// Name-based dispatch shared by the command line and the benchmark harness.

namespace bpsp {

inline constexpr std::array<std::string_view, 8> algorithm_names{"rf",    "greedy", "rg",    "rsg",
                                                                 "qaoa1", "xqaoa",  "rqaoa", "brute"};

inline bool is_algorithm(std::string_view name) {
    return std::find(algorithm_names.begin(), algorithm_names.end(), name) != algorithm_names.end();
}

class UnknownAlgorithm : public std::invalid_argument {
public:
    explicit UnknownAlgorithm(std::string_view name)
        : std::invalid_argument("unknown algorithm '" + std::string(name) + "'") {}
};

struct SolveOptions {
    int restarts = 100;                  // xqaoa
    int cutoff = rqaoa_default_cutoff;   // rqaoa
    MixerKind mixer = MixerKind::shared; // xqaoa
    std::size_t shots = 1024;            // qaoa1
    Seed seed{0};                        // xqaoa initial points, qaoa1 sampling
};

struct SolveReport {
    Solution solution;
    int restarts = 1;
    std::vector<int> restart_costs;     // xqaoa only
    std::vector<Constraint> trace;      // rqaoa only
};

/// Optimized depth-1 QAOA, then the cheapest of `shots` samples of the exact
/// state. Needs the full state vector, so n <= 20.
inline Solution qaoa1_solve(const BpspInstance& x, std::size_t shots, Seed seed) {
    const IsingHamiltonian h = build_ising(x);
    const Qaoa1Result opt = qaoa1_optimize(h);
    const XqaoaParams tied = XqaoaParams::uniform(h, opt.params.beta, opt.params.gamma);
    const StateVector state(xqaoa_circuit(h, tied));
    const auto samples = sample_bitstrings(state, std::max<std::size_t>(shots, 1), seed);
    long best = 0;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const long e = h.energy2(samples[i]);
        if (i == 0 || e < best) {
            best = e;
            best_i = i;
        }
    }
    return Solution{icc_swap_count_spin(x, samples[best_i]), expand(x, to_icc(samples[best_i]))};
}

namespace detail {

inline Solution scored(FullColoring f) {
    const int cost = swap_count(f);
    return Solution{cost, std::move(f)};
}

}  // namespace detail

/// Runs the named algorithm and checks the colouring before returning it.
inline SolveReport solve(const BpspInstance& x, std::string_view algorithm, const SolveOptions& opt = {}) {
    SolveReport r;
    if (algorithm == "rf") {
        r.solution = detail::scored(red_first(x));
    } else if (algorithm == "greedy") {
        r.solution = detail::scored(greedy(x));
    } else if (algorithm == "rg") {
        r.solution = detail::scored(recursive_greedy(x));
    } else if (algorithm == "rsg") {
        r.solution = detail::scored(recursive_star_greedy(x));
    } else if (algorithm == "qaoa1") {
        r.solution = qaoa1_solve(x, opt.shots, opt.seed);
    } else if (algorithm == "xqaoa") {
        XqaoaSolution s = xqaoa_solve(x, opt.restarts, opt.seed, opt.mixer);
        r.solution = std::move(s.solution);
        r.restarts = opt.restarts;
        r.restart_costs = std::move(s.restart_costs);
    } else if (algorithm == "rqaoa") {
        r.solution = rqaoa_solve(x, opt.cutoff, &r.trace);
    } else if (algorithm == "brute") {
        r.solution = bpsp_bruteforce(x);
    } else {
        throw UnknownAlgorithm(algorithm);
    }
    if (!is_valid_coloring(x, r.solution.coloring) || swap_count(r.solution.coloring) != r.solution.cost) {
        throw std::logic_error(std::string(algorithm) + " returned an inconsistent colouring");
    }
    return r;
}

}  // namespace bpsp
