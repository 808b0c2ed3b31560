#include <gtest/gtest.h>

#include "bpsp/brute_force.hpp"
#include "bpsp/heuristics.hpp"

using namespace bpsp;

namespace {

const std::vector<int> table1_word{5, 1, 1, 3, 2, 2, 5, 4, 3, 6, 6, 4};

// Recursive greedy written directly as the peel-and-reinsert recursion on
// copied subsequences. Slow, but shares no code with the library version.
std::vector<Colour> rg_reference(const std::vector<int>& word) {
    if (word.size() == 2) {
        return {Colour::red, Colour::blue};
    }
    const std::size_t len = word.size();
    std::size_t m = 0;
    while (word[m] != word[len - 1]) {
        ++m;
    }
    std::vector<int> shorter;
    for (std::size_t k = 0; k + 1 < len; ++k) {
        if (k != m) {
            shorter.push_back(word[k]);
        }
    }
    const std::vector<Colour> inner = rg_reference(shorter);
    std::vector<Colour> g(inner.begin(), inner.begin() + static_cast<long>(m));
    g.push_back(Colour::red);
    g.insert(g.end(), inner.begin() + static_cast<long>(m), inner.end());
    g.push_back(Colour::red);
    const std::size_t last = len - 1;
    if (m == 0) {
        g[m] = g[m + 1];
        g[last] = !g[m + 1];
    } else if (m == last - 1) {
        g[m] = g[m - 1];
        g[last] = !g[m - 1];
    } else if (g[m - 1] == g[m + 1]) {
        g[m] = g[m - 1];
        g[last] = !g[m - 1];
    } else {
        g[last] = g[last - 1];
        g[m] = !g[last - 1];
    }
    return g;
}

FullColoring first_red(std::vector<Colour> c) {
    FullColoring f{std::move(c)};
    return f.colours.front() == Colour::red ? f : flipped(f);
}

}  // namespace

TEST(RedFirst, Examples) {
    const auto t = validate_instance({1, 2, 1, 3, 3, 2});
    EXPECT_EQ(red_first(t).str(), "rrbrbb");
    EXPECT_EQ(swap_count(red_first(t)), 3);
    EXPECT_EQ(red_first(validate_instance({1, 1})).str(), "rb");
    EXPECT_EQ(swap_count(red_first(validate_instance(table1_word))), 7);
}

TEST(Greedy, Examples) {
    EXPECT_EQ(greedy(validate_instance({1, 2, 1, 2})).str(), "rrbb");
    EXPECT_EQ(greedy(validate_instance({1, 1})).str(), "rb");
    EXPECT_EQ(swap_count(greedy(validate_instance(table1_word))), 6);
}

TEST(RecursiveGreedy, Examples) {
    EXPECT_EQ(recursive_greedy(validate_instance({1, 2, 2, 1})).str(), "rrbb");
    EXPECT_EQ(recursive_greedy(validate_instance({1, 1})).str(), "rb");
    EXPECT_EQ(swap_count(recursive_greedy(validate_instance(table1_word))), 5);
}

TEST(RecursiveGreedy, MatchesLiteralRecursion) {
    for (std::uint64_t s = 0; s < 300; ++s) {
        const int n = 1 + static_cast<int>(s % 40);
        const auto x = generate_instance(n, Seed{s * 7 + 3});
        const std::vector<int> word(x.word().begin(), x.word().end());
        EXPECT_EQ(recursive_greedy(x), first_red(rg_reference(word))) << format_instance(x);
    }
}

TEST(RecursiveStarGreedy, Examples) {
    EXPECT_EQ(recursive_star_greedy(validate_instance({1, 1})).str(), "rb");
    EXPECT_EQ(swap_count(recursive_star_greedy(validate_instance(table1_word))), 4);
}

TEST(Heuristics, ValidAndNeverBelowOptimum) {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const int n = 1 + static_cast<int>(s % 10);
        const auto x = generate_instance(n, Seed{s + 500});
        const int opt = bpsp_bruteforce(x).cost;
        for (const FullColoring& f : {red_first(x), greedy(x), recursive_greedy(x), recursive_star_greedy(x)}) {
            ASSERT_TRUE(is_valid_coloring(x, f));
            EXPECT_GE(swap_count(f), opt);
            EXPECT_EQ(f.colours.front(), Colour::red);
        }
    }
}

TEST(RedFirst, CostViaEta) {
    EXPECT_EQ(red_first_cost_via_eta(validate_instance({1, 2, 1, 3, 3, 2})), 3);
    EXPECT_EQ(red_first_cost_via_eta(validate_instance({1, 1})), 1);
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto x = generate_instance(1 + static_cast<int>(s % 50), Seed{s});
        EXPECT_EQ(red_first_cost_via_eta(x), swap_count(red_first(x)));
    }
    const auto alt = validate_instance({1, 2, 1, 2});
    EXPECT_EQ(red_first_cost_via_eta(alt), swap_count(red_first(alt)));
}

TEST(Heuristics, Deterministic) {
    const auto x = generate_instance(200, Seed{77});
    EXPECT_EQ(recursive_star_greedy(x), recursive_star_greedy(x));
    EXPECT_EQ(recursive_greedy(x), recursive_greedy(x));
}
