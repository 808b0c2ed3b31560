#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "bpsp/brute_force.hpp"
#include "bpsp/lbfgs.hpp"
#include "bpsp/qaoa1.hpp"
#include "bpsp/statevector.hpp"
#include "bpsp/xqaoa.hpp"

using namespace bpsp;

namespace {

constexpr double pi = std::numbers::pi;

const BpspInstance& t() {
    static const BpspInstance x = validate_instance({1, 2, 1, 3, 3, 2});
    return x;
}

double central_difference(const IsingHamiltonian& h, const XqaoaParams& p, std::size_t k, double step) {
    std::vector<double> v = p.flat();
    const double x0 = v[k];
    v[k] = x0 + step;
    const double up = xqaoa_energy(h, XqaoaParams::from_flat(p.kind, h.couplings().size(), v));
    v[k] = x0 - step;
    const double down = xqaoa_energy(h, XqaoaParams::from_flat(p.kind, h.couplings().size(), v));
    return (up - down) / (2 * step);
}

}  // namespace

TEST(Mixer, NamesRoundTrip) {
    for (MixerKind k : {MixerKind::shared, MixerKind::x, MixerKind::y, MixerKind::xy}) {
        EXPECT_EQ(parse_mixer(mixer_name(k)), k);
    }
    EXPECT_EQ(mixer_name(MixerKind::shared), "x=y");
    EXPECT_THROW(parse_mixer("z"), std::invalid_argument);
}

TEST(Xqaoa, ZeroAnglesGiveOffset) {
    const IsingHamiltonian h = build_ising(t());
    XqaoaParams p;
    p.gamma.assign(h.couplings().size(), 0.0);
    p.mixer.assign(3, 0.0);
    EXPECT_EQ(xqaoa_energy(h, p), 3.0);
}

TEST(Xqaoa, ClosedFormMatchesDenseForEveryMixer) {
    for (MixerKind kind : {MixerKind::shared, MixerKind::x, MixerKind::y, MixerKind::xy}) {
        double worst = 0.0;
        for (std::uint64_t s = 0; s < 40; ++s) {
            const int n = 1 + static_cast<int>(s % 10);
            const IsingHamiltonian h = build_ising(generate_instance(n, Seed{s + 10}));
            const XqaoaParams p = xqaoa_random_params(h, kind, Seed{s});
            const auto ref = simulate_p1(xqaoa_circuit(h, p));
            worst = std::max(worst, std::abs(xqaoa_energy(h, p) - ref.energy));
            XqaoaEvaluator ev(h);
            const auto z = ev.z_expectations(p);
            for (int j = 0; j < n; ++j) {
                worst = std::max(worst, std::abs(z[static_cast<std::size_t>(j)] - ref.z[static_cast<std::size_t>(j)]));
            }
        }
        EXPECT_LT(worst, 1e-9) << mixer_name(kind);
    }
}

TEST(Xqaoa, WeightedHamiltonianMatchesDense) {
    Rng rng(Seed{31});
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(6));
        std::vector<Coupling> cs;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng.below(3) != 0) {
                    cs.push_back({u, v, static_cast<long>(rng.below(7)) - 3});
                }
            }
        }
        const IsingHamiltonian h(n, -1, cs);
        const XqaoaParams p = xqaoa_random_params(h, MixerKind::xy, Seed{static_cast<std::uint64_t>(trial)});
        EXPECT_NEAR(xqaoa_energy(h, p), simulate_p1(xqaoa_circuit(h, p)).energy, 1e-9);
    }
}

TEST(Xqaoa, LightconeMatchesDense) {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const int n = 2 + static_cast<int>(s % 9);
        const IsingHamiltonian h = build_ising(generate_instance(n, Seed{s + 70}));
        const XqaoaParams p = xqaoa_random_params(h, MixerKind::shared, Seed{s});
        std::vector<std::pair<int, int>> pairs;
        for (const auto& c : h.couplings()) {
            pairs.emplace_back(c.u, c.v);
        }
        const auto ref = simulate_p1(xqaoa_circuit(h, p), pairs);
        EXPECT_NEAR(xqaoa_energy_lightcone(h, p), ref.energy, 1e-9);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            EXPECT_NEAR(xqaoa_pair_lightcone(h, p, pairs[k].first, pairs[k].second), ref.pair_zz[k], 1e-9);
        }
        for (int j = 0; j < n; ++j) {
            EXPECT_NEAR(xqaoa_z_lightcone(h, p, j), ref.z[static_cast<std::size_t>(j)], 1e-9);
        }
    }
}

TEST(Xqaoa, LightconeMatchesClosedFormBeyondDenseRange) {
    const IsingHamiltonian h = build_ising(generate_instance(60, Seed{5}));
    const XqaoaParams p = xqaoa_random_params(h, MixerKind::shared, Seed{6});
    EXPECT_NEAR(xqaoa_energy(h, p), xqaoa_energy_lightcone(h, p), 1e-9);
}

TEST(Xqaoa, TiedAnglesReduceToQaoa1) {
    Rng rng(Seed{12});
    for (std::uint64_t s = 0; s < 30; ++s) {
        const IsingHamiltonian h = build_ising(generate_instance(2 + static_cast<int>(s % 30), Seed{s}));
        const Qaoa1Params q{rng.uniform(0, pi), rng.uniform(-pi, pi)};
        EXPECT_NEAR(xqaoa_energy(h, XqaoaParams::uniform(h, q.beta, q.gamma)), qaoa1_energy(h, q), 1e-9);
    }
}

TEST(XqaoaGradient, MatchesCentralDifferences) {
    for (MixerKind kind : {MixerKind::shared, MixerKind::x, MixerKind::y, MixerKind::xy}) {
        for (std::uint64_t s = 0; s < 5; ++s) {
            const IsingHamiltonian h = build_ising(generate_instance(8, Seed{s + 200}));
            const XqaoaParams p = xqaoa_random_params(h, kind, Seed{s + 300});
            const auto g = xqaoa_gradient(h, p);
            ASSERT_EQ(g.size(), p.flat().size());
            double scale = 0.0;
            double worst = 0.0;
            for (std::size_t k = 0; k < g.size(); ++k) {
                const double fd = central_difference(h, p, k, 1e-5);
                scale = std::max(scale, std::abs(fd));
                worst = std::max(worst, std::abs(fd - g[k]));
            }
            EXPECT_LT(worst / std::max(scale, 1e-12), 1e-5) << mixer_name(kind);
        }
    }
}

TEST(XqaoaGradient, MixerGradientVanishesAtZero) {
    const IsingHamiltonian h = build_ising(generate_instance(7, Seed{1}));
    XqaoaParams p;
    p.gamma.assign(h.couplings().size(), 0.0);
    p.mixer.assign(7, 0.0);
    const auto g = xqaoa_gradient(h, p);
    for (std::size_t k = h.couplings().size(); k < g.size(); ++k) {
        EXPECT_NEAR(g[k], 0.0, 1e-15);
        EXPECT_NEAR(central_difference(h, p, k, 1e-5), 0.0, 1e-9);
    }
}

TEST(XqaoaGradient, BitwiseDeterministic) {
    const IsingHamiltonian h = build_ising(generate_instance(30, Seed{2}));
    const XqaoaParams p = xqaoa_random_params(h, MixerKind::shared, Seed{3});
    EXPECT_EQ(xqaoa_gradient(h, p), xqaoa_gradient(h, p));
}

TEST(Lbfgs, MinimizesRosenbrock) {
    auto fg = [](const std::vector<double>& x, std::vector<double>& g) {
        const double a = 1 - x[0];
        const double b = x[1] - x[0] * x[0];
        g = {-2 * a - 400 * x[0] * b, 200 * b};
        return a * a + 100 * b * b;
    };
    const LbfgsResult r = lbfgs_minimize(fg, {-1.2, 1.0}, {});
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.x[0], 1.0, 1e-5);
    EXPECT_NEAR(r.x[1], 1.0, 1e-5);
}

TEST(XqaoaOptimize, SingleEdgeReachesGroundState) {
    const IsingHamiltonian half(2, 1, {{0, 1, 1}});
    EXPECT_NEAR(xqaoa_optimize(half, 3, Seed{1}).best_restart().energy, 0.0, 1e-6);
    const IsingHamiltonian unit(2, 1, {{0, 1, 2}});
    const XqaoaRun run = xqaoa_optimize(unit, 3, Seed{1});
    EXPECT_NEAR(run.best_restart().energy, -0.5, 1e-6);
    const SpinAssignment s = extract_cut(unit, run.best_restart().params);
    EXPECT_EQ(unit.energy2(s), -1);
}

TEST(XqaoaOptimize, SameSeedSameResult) {
    const IsingHamiltonian h = build_ising(generate_instance(12, Seed{4}));
    const XqaoaRun a = xqaoa_optimize(h, 3, Seed{9});
    const XqaoaRun b = xqaoa_optimize(h, 3, Seed{9});
    ASSERT_EQ(a.restarts.size(), b.restarts.size());
    for (std::size_t r = 0; r < a.restarts.size(); ++r) {
        EXPECT_EQ(a.restarts[r].energy, b.restarts[r].energy);
        EXPECT_EQ(a.restarts[r].params.flat(), b.restarts[r].params.flat());
    }
    EXPECT_EQ(a.best, b.best);
}

TEST(XqaoaOptimize, LongerRunExtendsShorter) {
    const IsingHamiltonian h = build_ising(generate_instance(10, Seed{8}));
    const XqaoaRun a = xqaoa_optimize(h, 2, Seed{5});
    const XqaoaRun b = xqaoa_optimize(h, 4, Seed{5});
    EXPECT_EQ(a.restarts[1].energy, b.restarts[1].energy);
}

TEST(ExtractCut, ZeroAnglesRoundToPlus) {
    const IsingHamiltonian h = build_ising(t());
    XqaoaParams p;
    p.gamma.assign(h.couplings().size(), 0.0);
    p.mixer.assign(3, 0.0);
    EXPECT_EQ(extract_cut(h, p), (SpinAssignment{{1, 1, 1}}));
}

TEST(XqaoaSolve, SmallInstances) {
    const XqaoaSolution s = xqaoa_solve(t(), 10, Seed{0});
    EXPECT_EQ(s.solution.cost, 2);
    EXPECT_TRUE(is_valid_coloring(t(), s.solution.coloring));
    EXPECT_EQ(swap_count(s.solution.coloring), 2);
    EXPECT_EQ(s.restart_costs.size(), 10u);

    const XqaoaSolution one = xqaoa_solve(validate_instance({1, 1}), 2, Seed{0});
    EXPECT_EQ(one.solution.cost, 1);
    EXPECT_TRUE(one.solution.coloring.str() == "rb" || one.solution.coloring.str() == "br");
}

TEST(XqaoaSolve, TableInstanceNearOptimal) {
    const auto x = validate_instance({5, 1, 1, 3, 2, 2, 5, 4, 3, 6, 6, 4});
    const XqaoaSolution s = xqaoa_solve(x, 25, Seed{0});
    EXPECT_LE(s.solution.cost, 5);
    EXPECT_GE(s.solution.cost, bpsp_bruteforce(x).cost);
}

TEST(XqaoaSolve, RandomInstancesRespectOptimum) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto x = generate_instance(3 + static_cast<int>(s % 8), Seed{s + 600});
        const XqaoaSolution sol = xqaoa_solve(x, 3, Seed{s});
        EXPECT_GE(sol.solution.cost, bpsp_bruteforce(x).cost);
        EXPECT_EQ(swap_count(sol.solution.coloring), sol.solution.cost);
    }
}

TEST(XqaoaMaxCut, BackendGivesValidCut) {
    const BpspGraph g = build_graph(generate_instance(9, Seed{3}));
    const MaxCutResult r = XqaoaMaxCut(5, Seed{1}).solve(g);
    EXPECT_EQ(cut_weight(g, r.cut), r.value);
    EXPECT_LE(r.value, maxcut_bruteforce(g).value);
}
