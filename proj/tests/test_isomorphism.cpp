#include "distrank/enumerate.hpp"
#include "distrank/isomorphism.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace distrank;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> e;
    for (auto [u, v] : g.edges())
        e.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), e);
}

} // namespace

TEST(Isomorphism, Examples) {
    EXPECT_TRUE(is_isomorphic(make_cycle(4), join(make_empty(2), make_empty(2))));
    EXPECT_TRUE(distrank::testing::brute_force_isomorphic(make_cycle(4), join(make_empty(2), make_empty(2))));
    EXPECT_FALSE(is_isomorphic(make_path(4), make_star(4)));
    Graph h = distrank::testing::house();
    EXPECT_TRUE(is_isomorphic(h, h));
}

// Same degree sequence and distance profile multiset, different graphs:
// C6 versus two disjoint triangles is split by connectivity; K3,3 versus the
// prism needs the search.
TEST(Isomorphism, RegularPairs) {
    Graph k33 = join(make_empty(3), make_empty(3));
    Graph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    EXPECT_FALSE(is_isomorphic(k33, prism));
    EXPECT_FALSE(is_isomorphic(make_cycle(6), disjoint_union(make_complete(3), make_complete(3))));
    Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                        {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    std::vector<int> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(5);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_TRUE(is_isomorphic(petersen, relabel(petersen, perm)));
}

TEST(Isomorphism, EquivalenceOnRandomRelabellings) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 14);
        Graph g = Graph::from_mask(std::min(n, 11), rng());
        std::vector<int> perm(static_cast<std::size_t>(g.order()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = relabel(g, perm);
        EXPECT_TRUE(is_isomorphic(g, g));
        EXPECT_TRUE(is_isomorphic(g, h));
        EXPECT_TRUE(is_isomorphic(h, g));
    }
}

// Agreement with the all-permutations oracle on random pairs, n <= 6.
TEST(Isomorphism, AgreesWithBruteForce) {
    std::mt19937_64 rng(23);
    int positives = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const int bits = n * (n - 1) / 2;
        const std::uint64_t mask_bits = bits == 0 ? 0 : (std::uint64_t{1} << bits) - 1;
        Graph g = Graph::from_mask(n, rng() & mask_bits);
        Graph h = Graph::from_mask(n, rng() & mask_bits);
        if (trial % 3 == 0) {
            // bias towards isomorphic pairs
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            h = relabel(g, perm);
        }
        const bool fast = is_isomorphic(g, h);
        positives += fast ? 1 : 0;
        ASSERT_EQ(fast, distrank::testing::brute_force_isomorphic(g, h));
        ASSERT_EQ(fast, is_isomorphic(h, g));
    }
    EXPECT_GT(positives, 900);
}

// Exhaustive over n = 5: number of classes of all labelled graphs is 34.
TEST(Isomorphism, ClassCountOnFiveVertices) {
    std::vector<Graph> reps;
    for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
        Graph g = Graph::from_mask(5, mask);
        if (std::none_of(reps.begin(), reps.end(), [&](const Graph& r) { return is_isomorphic(r, g); }))
            reps.push_back(g);
    }
    EXPECT_EQ(reps.size(), 34u);
}
