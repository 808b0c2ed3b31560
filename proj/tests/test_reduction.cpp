#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "bpsp/brute_force.hpp"
#include "bpsp/graph.hpp"
#include "bpsp/ising.hpp"
#include "bpsp/maxcut.hpp"

using namespace bpsp;

namespace {

const BpspInstance& t() {
    static const BpspInstance x = validate_instance({1, 2, 1, 3, 3, 2});
    return x;
}

const std::vector<int> table1_word{5, 1, 1, 3, 2, 2, 5, 4, 3, 6, 6, 4};

IccColoring icc_from_bits(int n, unsigned bits) {
    IccColoring z;
    for (int i = 0; i < n; ++i) {
        z.colours.push_back(((bits >> i) & 1U) != 0 ? Colour::blue : Colour::red);
    }
    return z;
}

}  // namespace

TEST(Theta, PairsOfSmallWord) {
    EXPECT_EQ(theta(t(), 0, 1), 0);
    EXPECT_EQ(theta(t(), 0, 2), 1);
    EXPECT_EQ(theta(t(), 1, 2), -1);
    EXPECT_EQ(theta(t(), 2, 0), 1);
}

TEST(Graph, SmallWordEdges) {
    const BpspGraph g = build_graph(t());
    const std::vector<WeightedEdge> want{{0, 2, 1}, {1, 2, -1}};
    EXPECT_EQ(g.edges(), want);
    EXPECT_EQ(total_weight(g), 0);

    const BpspGraph g2 = build_graph(validate_instance({1, 1, 2, 2}));
    EXPECT_EQ(g2.edges(), (std::vector<WeightedEdge>{{0, 1, 1}}));

    EXPECT_EQ(total_weight(build_graph(validate_instance({1, 1}))), 0);
    EXPECT_TRUE(build_graph(validate_instance({1, 1})).edges().empty());
}

TEST(Graph, EdgesAreThetaOfEveryPair) {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const int n = 2 + static_cast<int>(s % 15);
        const auto x = generate_instance(n, Seed{s});
        const BpspGraph g = build_graph(x);
        std::map<std::pair<int, int>, int> have;
        for (const auto& e : g.edges()) {
            have[{e.u, e.v}] = e.weight;
        }
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                const int th = theta(x, a, b);
                const auto it = have.find({a, b});
                EXPECT_EQ(it == have.end() ? 0 : it->second, th);
            }
        }
    }
}

TEST(Graph, DegreeAndWeightBounds) {
    for (std::uint64_t s = 0; s < 300; ++s) {
        const auto x = generate_instance(1 + static_cast<int>(s % 64), Seed{s + 9});
        const BpspGraph g = build_graph(x);
        EXPECT_LE(g.max_degree(), 4);
        for (const auto& e : g.edges()) {
            EXPECT_TRUE(e.weight == 1 || e.weight == -1 || e.weight == -2) << e.weight;
        }
        long sign_sum = 0;
        for (std::size_t k = 0; k + 1 < x.length(); ++k) {
            sign_sum += eta(x, k) != 0 ? -1 : 1;
        }
        EXPECT_EQ(total_weight(g), -double_letter_count(x) - sign_sum);
        EXPECT_EQ(2L * swap_count(red_first(x)), 2L * x.n() - 1 + double_letter_count(x) + total_weight(g));
    }
}

TEST(Graph, RejectsBadEdges) {
    EXPECT_THROW(BpspGraph(2, {{0, 0, 1}}), std::invalid_argument);
    EXPECT_THROW(BpspGraph(2, {{0, 1, 0}}), std::invalid_argument);
    EXPECT_THROW(BpspGraph(2, {{0, 2, 1}}), std::invalid_argument);
    EXPECT_THROW(BpspGraph(2, {{0, 1, 1}, {1, 0, 1}}), std::invalid_argument);
}

TEST(CutWeight, Examples) {
    const BpspGraph g = build_graph(t());
    EXPECT_EQ(cut_weight(g, IccColoring::parse("rbb")), 1);
    EXPECT_EQ(cut_weight(g, IccColoring::parse("rrr")), 0);
    EXPECT_EQ(cut_weight(g, IccColoring::parse("bbb")), 0);
    EXPECT_EQ(cut_weight(g, SpinAssignment{{1, -1, -1}}), 1);
}

TEST(CutWeight, CostIsRedFirstMinusCut) {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const int n = 1 + static_cast<int>(s % 9);
        const auto x = generate_instance(n, Seed{s + 400});
        const BpspGraph g = build_graph(x);
        const int rf = swap_count(red_first(x));
        for (unsigned bits = 0; bits < (1U << n); ++bits) {
            const IccColoring z = icc_from_bits(n, bits);
            EXPECT_EQ(swap_count(expand(x, z)), rf - cut_weight(g, z));
        }
    }
}

TEST(MaxCut, BruteForceExamples) {
    EXPECT_EQ(maxcut_bruteforce(build_graph(t())).value, 1);
    EXPECT_EQ(maxcut_bruteforce(BpspGraph(2, {{0, 1, 1}})).value, 1);
    EXPECT_EQ(maxcut_bruteforce(BpspGraph(2, {{0, 1, -1}})).value, 0);
    const auto r = maxcut_bruteforce(build_graph(t()));
    EXPECT_EQ(cut_weight(build_graph(t()), r.cut), r.value);
}

TEST(MaxCut, ReductionGivesOptimum) {
    const BruteForceMaxCut exact;
    const Solution s = bpsp_via_maxcut(t(), exact);
    EXPECT_EQ(s.cost, 2);
    EXPECT_EQ(s.coloring.str(), "rbbbrr");
    EXPECT_EQ(bpsp_via_maxcut(validate_instance(table1_word), exact).cost, 4);
    const Solution one = bpsp_via_maxcut(validate_instance({1, 1}), exact);
    EXPECT_EQ(one.cost, 1);
    EXPECT_EQ(one.coloring.str(), "rb");
}

TEST(MaxCut, ReductionMatchesDirectBruteForce) {
    const BruteForceMaxCut exact;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto x = generate_instance(2 + static_cast<int>(s % 9), Seed{s + 77});
        const Solution via = bpsp_via_maxcut(x, exact);
        EXPECT_EQ(via.cost, bpsp_bruteforce(x).cost);
        EXPECT_EQ(swap_count(via.coloring), via.cost);
    }
}

TEST(Ising, SmallWordHamiltonian) {
    const IsingHamiltonian h = build_ising(t());
    EXPECT_EQ(h.offset2(), 6);
    const std::vector<Coupling> want{{0, 2, 1}, {1, 2, -1}};
    EXPECT_EQ(h.couplings(), want);
    EXPECT_EQ(h.energy(SpinAssignment{{1, -1, -1}}), 2.0);

    const IsingHamiltonian single = build_ising(validate_instance({1, 1}));
    EXPECT_EQ(single.offset2(), 2);
    EXPECT_TRUE(single.couplings().empty());
}

TEST(Ising, EnergyEqualsSwapCount) {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const int n = 1 + static_cast<int>(s % 9);
        const auto x = generate_instance(n, Seed{s + 4000});
        const IsingHamiltonian h = build_ising(x);
        for (unsigned bits = 0; bits < (1U << n); ++bits) {
            const IccColoring z = icc_from_bits(n, bits);
            EXPECT_EQ(h.energy2(to_spins(z)), 2L * swap_count(expand(x, z)));
        }
        EXPECT_EQ(ising_ground_state(h).energy2, 2L * bpsp_bruteforce(x).cost);
    }
}

TEST(Ising, MaxCutFormIsNegatedCut) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const int n = 2 + static_cast<int>(s % 8);
        const BpspGraph g = build_graph(generate_instance(n, Seed{s}));
        const IsingHamiltonian h = maxcut_ising(g);
        for (unsigned bits = 0; bits < (1U << n); ++bits) {
            const IccColoring z = icc_from_bits(n, bits);
            EXPECT_EQ(h.energy2(to_spins(z)), -2L * cut_weight(g, z));
        }
    }
}

TEST(Ising, ParallelCouplingsMerge) {
    const IsingHamiltonian h(3, 0, {{0, 1, 2}, {1, 0, 3}, {1, 2, 1}, {2, 1, -1}});
    EXPECT_EQ(h.couplings(), (std::vector<Coupling>{{0, 1, 5}}));
    EXPECT_EQ(h.j2(1, 0), 5);
    EXPECT_EQ(h.j2(1, 2), 0);
}

TEST(Export, GraphAndIsingText) {
    std::ostringstream g;
    write_graph(g, build_graph(t()));
    EXPECT_EQ(g.str(), "3 2\n1 3 1\n2 3 -1\n");
    std::ostringstream h;
    write_ising(h, build_ising(t()));
    EXPECT_EQ(h.str(), "3 3 1\n1 3 1 2\n2 3 -1 2\n");
    std::ostringstream one;
    write_graph(one, build_graph(validate_instance({1, 1})));
    EXPECT_EQ(one.str(), "1 0\n");
}
