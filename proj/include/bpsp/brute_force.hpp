#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpsp/coloring.hpp"
#include "bpsp/graph.hpp"
#include "bpsp/instance.hpp"
#include "bpsp/ising.hpp"

// Exhaustive solvers. Each fixes the first variable (red / +1), which is free
// by the global flip symmetry, and walks the remaining 2^(n-1) assignments in
// Gray-code order with O(degree) incremental updates.

namespace bpsp {

inline constexpr int brute_force_limit = 24;

namespace detail {

inline void require_enumerable(int n, const char* what) {
    if (n > brute_force_limit) {
        throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) + " exceeds " +
                                    std::to_string(brute_force_limit));
    }
}

template <class Flip>
void gray_walk(int n, Flip&& flip) {
    if (n <= 1) {
        return;
    }
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < steps; ++i) {
        flip(std::countr_zero(i) + 1);
    }
}

}  // namespace detail

/// Optimal colouring by enumerating ICC strings directly on the word.
inline Solution bpsp_bruteforce(const BpspInstance& x) {
    detail::require_enumerable(x.n(), "bpsp_bruteforce");
    const int n = x.n();
    const std::size_t len = x.length();

    // Boundaries whose swap status changes when car c flips. A boundary
    // between the two occurrences of c is unaffected.
    std::vector<std::vector<std::size_t>> touching(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k + 1 < len; ++k) {
        const int a = x.car(k);
        const int b = x.car(k + 1);
        if (a != b) {
            touching[static_cast<std::size_t>(a)].push_back(k);
            touching[static_cast<std::size_t>(b)].push_back(k);
        }
    }

    std::vector<unsigned char> z(static_cast<std::size_t>(n), 0);  // 0 = red
    auto colour_at = [&](std::size_t pos) {
        return z[static_cast<std::size_t>(x.car(pos))] ^ static_cast<unsigned char>(x.is_second(pos));
    };
    auto swapped = [&](std::size_t k) { return colour_at(k) != colour_at(k + 1) ? 1 : 0; };

    int cost = 0;
    for (std::size_t k = 0; k + 1 < len; ++k) {
        cost += swapped(k);
    }
    int best = cost;
    std::vector<unsigned char> best_z = z;

    detail::gray_walk(n, [&](int c) {
        const auto& ks = touching[static_cast<std::size_t>(c)];
        for (std::size_t k : ks) {
            cost -= swapped(k);
        }
        z[static_cast<std::size_t>(c)] ^= 1;
        for (std::size_t k : ks) {
            cost += swapped(k);
        }
        if (cost < best) {
            best = cost;
            best_z = z;
        }
    });

    IccColoring icc;
    icc.colours.reserve(static_cast<std::size_t>(n));
    for (unsigned char b : best_z) {
        icc.colours.push_back(b != 0 ? Colour::blue : Colour::red);
    }
    return Solution{best, expand(x, icc)};
}

struct MaxCutResult {
    long value = 0;
    IccColoring cut;
};

inline MaxCutResult maxcut_bruteforce(const BpspGraph& g) {
    detail::require_enumerable(g.n(), "maxcut_bruteforce");
    const int n = g.n();
    std::vector<int> side(static_cast<std::size_t>(n), 1);
    long value = 0;
    long best = 0;
    std::vector<int> best_side = side;
    detail::gray_walk(n, [&](int v) {
        const int s = side[static_cast<std::size_t>(v)];
        for (const auto& nb : g.neighbours(v)) {
            // Same side before the flip means the edge becomes cut.
            value += side[static_cast<std::size_t>(nb.vertex)] == s ? nb.weight : -nb.weight;
        }
        side[static_cast<std::size_t>(v)] = -s;
        if (value > best) {
            best = value;
            best_side = side;
        }
    });
    return MaxCutResult{best, to_icc(SpinAssignment{best_side})};
}

struct GroundState {
    long energy2 = 0;  // twice the minimum energy
    SpinAssignment spins;
    double energy() const noexcept { return 0.5 * static_cast<double>(energy2); }
};

inline GroundState ising_ground_state(const IsingHamiltonian& h) {
    detail::require_enumerable(h.n(), "ising_ground_state");
    const int n = h.n();
    SpinAssignment z{std::vector<int>(static_cast<std::size_t>(n), 1)};
    long e = h.energy2(z);
    GroundState best{e, z};
    detail::gray_walk(n, [&](int v) {
        int& zv = z.spins[static_cast<std::size_t>(v)];
        long local = 0;
        for (const auto& nb : h.neighbours(v)) {
            local += nb.j2 * z.spins[static_cast<std::size_t>(nb.vertex)];
        }
        e -= 2 * local * zv;
        zv = -zv;
        if (e < best.energy2) {
            best.energy2 = e;
            best.spins = z;
        }
    });
    return best;
}

}  // namespace bpsp
