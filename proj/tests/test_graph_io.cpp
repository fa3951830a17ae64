#include "distrank/graph_io.hpp"
#include "distrank/isomorphism.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace distrank;

namespace {

// Location reported by a parse failure, as (line, byte).
std::pair<std::size_t, std::size_t> where(std::string_view text) {
    try {
        parse_edge_list(text);
    } catch (const parse_error& e) {
        return {e.line(), e.byte()};
    }
    return {0, 0};
}

} // namespace

TEST(EdgeList, PathFromText) {
    Graph g = parse_edge_list("p edge 3 2\ne 1 2\ne 2 3");
    EXPECT_EQ(g, make_path(3));
}

TEST(EdgeList, CommentsAndBlankLines) {
    Graph g = parse_edge_list("c a triangle\n\np edge 3 3\ne 1 2\nc mid\ne 2 3\n\ne 1 3\n");
    EXPECT_EQ(g, make_complete(3));
}

TEST(EdgeList, SelfLoopRejected) {
    EXPECT_THROW(parse_edge_list("p edge 2 1\ne 1 1"), invalid_edge_error);
}

TEST(EdgeList, ErrorsCarryPosition) {
    EXPECT_EQ(where("p edge 3 1\ne 1 x\n"), (std::pair<std::size_t, std::size_t>{2, 5}));
    EXPECT_EQ(where("p edge 3 1\ne 1 4\n"), (std::pair<std::size_t, std::size_t>{2, 5}));
    EXPECT_EQ(where("p edge 3 1\n  q 1 2\n"), (std::pair<std::size_t, std::size_t>{2, 3}));
    EXPECT_EQ(where("p edge 3 1\np edge 3 1\ne 1 2\n"), (std::pair<std::size_t, std::size_t>{2, 1}));
    EXPECT_EQ(where("e 1 2\n").first, 1u);
    EXPECT_EQ(where("p edge 3 2\ne 1 2\n").first, 1u);
    EXPECT_THROW(parse_edge_list(""), parse_error);
    EXPECT_THROW(parse_edge_list("p edge 0 0"), parse_error);
    EXPECT_THROW(parse_edge_list("p graph 3 0"), parse_error);
}

TEST(EdgeList, RoundTrip) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 11);
        Graph g = Graph::from_mask(n, rng());
        EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
    }
}

// "Bw": order 'B'-63 = 3, 'w'-63 = 56 = 0b111000, so all three pairs are edges.
TEST(Graph6, DecodesTriangle) {
    EXPECT_EQ(parse_graph6("Bw"), make_complete(3));
    EXPECT_EQ(write_graph6(make_complete(3)), "Bw");
    EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), make_complete(3));
}

// C4 on 0-1-2-3-0: pairs (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) give bits
// 101101 = 45, and 45+63 = 'l'.
TEST(Graph6, HandEncodedCycle) {
    EXPECT_EQ(write_graph6(make_cycle(4)), "Cl");
    EXPECT_EQ(parse_graph6("Cl"), make_cycle(4));
    EXPECT_EQ(parse_graph6("@"), make_empty(1));
}

TEST(Graph6, Errors) {
    EXPECT_THROW(parse_graph6(""), parse_error);
    EXPECT_THROW(parse_graph6("B"), parse_error);        // too short
    EXPECT_THROW(parse_graph6("Bww"), parse_error);      // too long
    EXPECT_THROW(parse_graph6("Bx"), parse_error);       // padding bit set
    EXPECT_THROW(parse_graph6("B\x7f"), parse_error);    // outside 63..126
    EXPECT_THROW(parse_graph6("~?@"), parse_error);      // long form
    EXPECT_THROW(parse_graph6("?"), parse_error);        // order zero
    try {
        parse_graph6("C l");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.byte(), 2u);
    }
}

TEST(Graph6, RoundTrip) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 11);
        Graph g = Graph::from_mask(n, rng());
        EXPECT_EQ(parse_graph6(write_graph6(g)), g);
    }
    Graph big = make_cycle(62);
    EXPECT_EQ(parse_graph6(write_graph6(big)), big);
    EXPECT_THROW(write_graph6(make_path(63)), domain_error);
}
