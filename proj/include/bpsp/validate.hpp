#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bpsp/brute_force.hpp"
#include "bpsp/coloring.hpp"
#include "bpsp/graph.hpp"
#include "bpsp/heuristics.hpp"
#include "bpsp/instance.hpp"
#include "bpsp/ising.hpp"
#include "bpsp/maxcut.hpp"
#include "bpsp/qaoa1.hpp"
#include "bpsp/rng.hpp"
#include "bpsp/statevector.hpp"
#include "bpsp/xqaoa.hpp"

// Randomized cross-checks between independent computations of the same
// quantity. Used by the `validate` command.

namespace bpsp {

struct ValidationReport {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> failed;

    bool ok() const noexcept { return failures == 0; }
};

namespace detail {

class Checker {
public:
    Checker(ValidationReport& report, std::ostream* log) : report_(report), log_(log) {}

    void expect(bool condition, const std::string& name, std::size_t trial) {
        ++report_.checks;
        if (!condition) {
            ++report_.failures;
            report_.failed.push_back(name + " (trial " + std::to_string(trial) + ")");
            if (log_ != nullptr) {
                *log_ << "FAIL " << name << " trial " << trial << '\n';
            }
        }
    }

private:
    ValidationReport& report_;
    std::ostream* log_;
};

inline IccColoring random_icc(int n, Rng& rng) {
    IccColoring z;
    for (int i = 0; i < n; ++i) {
        z.colours.push_back(rng.below(2) == 0 ? Colour::red : Colour::blue);
    }
    return z;
}

}  // namespace detail

/// Runs the invariant suite on `trials` random instances with n in [1, 10].
/// `inject_fault` perturbs one computed value so the harness can be shown
/// to detect a failure.
inline ValidationReport run_validation(Seed seed, std::size_t trials, bool inject_fault = false,
                                       std::ostream* log = nullptr) {
    ValidationReport report;
    detail::Checker check(report, log);
    const BruteForceMaxCut exact;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, {t}));
        const int n = 1 + static_cast<int>(rng.below(10));
        const BpspInstance x = generate_instance(n, derive_seed(seed, {t, 1}));
        const BpspGraph g = build_graph(x);
        const IsingHamiltonian h = build_ising(x);
        const int rf = swap_count(red_first(x));

        // Encoding bijection and cost identities on a random ICC string.
        const IccColoring z = detail::random_icc(n, rng);
        const FullColoring f = expand(x, z);
        check.expect(is_valid_coloring(x, f) && compress(x, f) == z, "bijection", t);
        int direct = swap_count(f);
        if (inject_fault && t == 0) {
            direct += 1;
        }
        check.expect(direct == icc_swap_count(x, z), "icc cost", t);
        check.expect(direct == icc_swap_count_spin(x, to_spins(z)), "spin cost", t);
        check.expect(2L * direct == h.energy2(to_spins(z)), "ising energy", t);
        check.expect(direct == rf - cut_weight(g, z), "cost equals red-first minus cut", t);

        // Graph structure.
        bool weights_ok = true;
        for (const auto& e : g.edges()) {
            weights_ok = weights_ok && (e.weight == 1 || e.weight == -1 || e.weight == -2);
        }
        check.expect(weights_ok, "edge weights", t);
        check.expect(g.max_degree() <= 4, "degree bound", t);
        long sign_sum = 0;
        for (std::size_t k = 0; k + 1 < x.length(); ++k) {
            sign_sum += eta(x, k) != 0 ? -1 : 1;
        }
        check.expect(total_weight(g) == -double_letter_count(x) - sign_sum, "total weight", t);
        check.expect(2L * rf == 2L * n - 1 + double_letter_count(x) + total_weight(g), "red-first identity", t);
        check.expect(rf == red_first_cost_via_eta(x), "red-first via eta", t);

        // Exact optimum two ways, and heuristics never beat it.
        const Solution opt = bpsp_bruteforce(x);
        check.expect(bpsp_via_maxcut(x, exact).cost == opt.cost, "reduction vs brute force", t);
        for (const FullColoring& h_col : {red_first(x), greedy(x), recursive_greedy(x), recursive_star_greedy(x)}) {
            check.expect(is_valid_coloring(x, h_col) && swap_count(h_col) >= opt.cost, "heuristic bound", t);
        }

        // Analytic depth-1 expectations against dense simulation.
        constexpr double pi = 3.14159265358979323846;
        const Qaoa1Params q{rng.uniform(0.0, pi), rng.uniform(-pi, pi)};
        const XqaoaParams tied = XqaoaParams::uniform(h, q.beta, q.gamma);
        const double dense_qaoa = simulate_p1(xqaoa_circuit(h, tied)).energy;
        check.expect(std::abs(qaoa1_energy(h, q) - dense_qaoa) < 1e-9, "qaoa1 closed form", t);
        const XqaoaParams p = xqaoa_random_params(h, MixerKind::shared, derive_seed(seed, {t, 2}));
        const double dense_x = simulate_p1(xqaoa_circuit(h, p)).energy;
        check.expect(std::abs(xqaoa_energy(h, p) - dense_x) < 1e-9, "xqaoa closed form", t);
        check.expect(std::abs(xqaoa_energy_lightcone(h, p) - dense_x) < 1e-9, "xqaoa lightcone", t);
    }
    return report;
}

}  // namespace bpsp
