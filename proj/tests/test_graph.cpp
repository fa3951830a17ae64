#include "distrank/distance.hpp"
#include "distrank/enumerate.hpp"
#include "distrank/graph.hpp"
#include "distrank/isomorphism.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace distrank;
using distrank::testing::floyd_warshall;

TEST(BuildGraph, PathTriangleAndCycle) {
    std::vector<Edge> p3{{0, 1}, {1, 2}};
    Graph g = build_graph(3, p3);
    EXPECT_EQ(g.order(), 3);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_FALSE(g.adjacent(0, 2));
    EXPECT_TRUE(is_isomorphic(g, make_path(3)));

    Graph k1 = build_graph(1, {});
    EXPECT_EQ(k1.order(), 1);
    EXPECT_EQ(k1.edge_count(), 0u);

    std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    EXPECT_TRUE(is_isomorphic(build_graph(4, c4), make_cycle(4)));
}

TEST(BuildGraph, DuplicatesCollapse) {
    Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(BuildGraph, Errors) {
    EXPECT_THROW(Graph(3, {{1, 1}}), invalid_edge_error);
    EXPECT_THROW(Graph(3, {{0, 3}}), index_error);
    EXPECT_THROW(Graph(3, {{-1, 0}}), index_error);
    EXPECT_THROW(make_empty(0), domain_error);
}

TEST(Constructors, Families) {
    EXPECT_EQ(make_complete(3).edge_count(), 3u);
    EXPECT_EQ(degree_sequence(make_star(4)), (std::vector<int>{3, 1, 1, 1}));
    Graph c5 = make_cycle(5);
    for (Vertex v = 0; v < 5; ++v)
        EXPECT_EQ(c5.degree(v), 2);
    EXPECT_THROW(make_cycle(2), domain_error);
    EXPECT_EQ(make_path(1).order(), 1);
}

TEST(Constructors, JoinAndUnion) {
    EXPECT_EQ(join(make_empty(1), make_empty(1)), make_complete(2));
    EXPECT_TRUE(is_isomorphic(join(make_empty(2), make_empty(2)), make_cycle(4)));
    Graph u = disjoint_union(make_complete(2), make_empty(1));
    EXPECT_EQ(u.order(), 3);
    EXPECT_EQ(u.edge_count(), 1u);
}

TEST(Metrics, DiameterDegreeConnectivity) {
    EXPECT_EQ(diameter(make_cycle(5)), 2);
    EXPECT_EQ(max_degree(make_star(6)), 5);
    EXPECT_FALSE(is_connected(disjoint_union(make_complete(2), make_empty(1))));
    EXPECT_TRUE(is_connected(make_empty(1)));
    EXPECT_THROW(diameter(disjoint_union(make_complete(2), make_empty(1))), not_connected_error);
}

TEST(DistanceMatrix, SmallGraphs) {
    auto p3 = distance_matrix(make_path(3));
    EXPECT_EQ(p3.entries(), (IntMatrix{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));

    auto k4 = distance_matrix(make_complete(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            EXPECT_EQ(k4(i, j), i == j ? 0 : 1);

    auto c4 = distance_matrix(make_cycle(4));
    EXPECT_EQ(c4(0, 2), 2);
    EXPECT_EQ(c4(1, 3), 2);
    EXPECT_EQ(c4(0, 1), 1);

    EXPECT_THROW(distance_matrix(make_empty(2)), not_connected_error);
}

TEST(DistanceMatrix, InvariantsAgreeWithFloydWarshall) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        Graph g = distrank::testing::random_connected(n, 0.25, rng);
        auto d = distance_matrix(g);
        auto fw = floyd_warshall(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                ASSERT_EQ(d(i, j), fw[i][j]);
                ASSERT_EQ(d(i, j), d(j, i));
                ASSERT_EQ(d(i, j) == 1, i != j && g.adjacent(i, j));
                if (i != j) {
                    ASSERT_GE(d(i, j), 1);
                }
                for (int k = 0; k < n; ++k)
                    ASSERT_LE(d(i, k), d(i, j) + d(j, k));
            }
        for (int i = 0; i < n; ++i)
            ASSERT_EQ(d(i, i), 0);
    }
}

TEST(Isometric, CycleExamples) {
    Graph c6 = make_cycle(6);
    std::vector<Vertex> three{0, 1, 2};
    std::vector<Vertex> four{0, 1, 2, 3};
    std::vector<Vertex> five{0, 1, 2, 3, 4};
    std::vector<Vertex> all{0, 1, 2, 3, 4, 5};
    EXPECT_TRUE(is_isometric_subgraph(c6, three));
    // 0 and 3 are antipodal on C6, so the induced P4 keeps every distance.
    EXPECT_TRUE(is_isometric_subgraph(c6, four));
    EXPECT_FALSE(is_isometric_subgraph(c6, five));
    EXPECT_TRUE(is_isometric_subgraph(c6, all));
    EXPECT_THROW(is_isometric_subgraph(c6, std::vector<Vertex>{}), domain_error);
}

// Connected induced subgraphs of diameter <= 2 are isometric.
TEST(Isometric, DiameterTwoSubgraphsAreIsometric) {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 7);
        Graph g = distrank::testing::random_connected(n, 0.3, rng);
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
            if (rng() % 2)
                s.push_back(v);
        if (s.empty())
            continue;
        Graph h = g.induced(s);
        if (!is_connected(h) || diameter(h) > 2)
            continue;
        ++checked;
        EXPECT_TRUE(is_isometric_subgraph(g, s));
    }
    EXPECT_GT(checked, 50);
}

TEST(Twins, Predicates) {
    Graph k3 = make_complete(3);
    EXPECT_TRUE(are_true_twins(k3, 0, 1));
    EXPECT_TRUE(are_true_twins(k3, 1, 2));

    Graph c4 = make_cycle(4);
    EXPECT_TRUE(are_false_twins(c4, 0, 2));
    EXPECT_TRUE(are_false_twins(c4, 1, 3));
    EXPECT_FALSE(are_false_twins(c4, 0, 1));

    Graph p3 = make_path(3);
    EXPECT_TRUE(are_false_twins(p3, 0, 2));
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = u + 1; v < 3; ++v)
            EXPECT_FALSE(are_true_twins(p3, u, v));

    EXPECT_THROW(are_true_twins(p3, 1, 1), domain_error);
    // Two isolated vertices share N(v) but are not true twins.
    Graph e2 = make_empty(2);
    EXPECT_TRUE(are_false_twins(e2, 0, 1));
    EXPECT_FALSE(are_true_twins(e2, 0, 1));
}

TEST(Graph, MaskRoundTripAndWideGraphs) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 11);
        const int bits = n * (n - 1) / 2;
        const std::uint64_t mask = bits == 0 ? 0 : rng() & ((std::uint64_t{1} << bits) - 1);
        EXPECT_EQ(Graph::from_mask(n, mask).to_mask(), mask);
    }
    // Rows spanning several words.
    Graph big = make_cycle(130);
    EXPECT_EQ(big.degree(129), 2);
    EXPECT_TRUE(big.adjacent(0, 129));
    EXPECT_EQ(diameter(big), 65);
    EXPECT_TRUE(are_false_twins(make_star(100), 70, 99));
}
