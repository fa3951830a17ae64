#pragma once

// Test-only oracles and generators. Nothing here calls into the elimination,
// BFS or isomorphism code it is used to check.

#include "distrank/graph.hpp"
#include "distrank/matrix.hpp"
#include "distrank/rational.hpp"
#include "distrank/trivially_perfect.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace distrank::testing {

/// Laplace expansion along the first row.
inline Rational cofactor_determinant(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1)
        return m(0, 0);
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0)
            continue;
        if (n == 2) {
            total = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
            break;
        }
        ExactMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c)
                    minor(i - 1, jj++) = m(i, j);
        const Rational term = m(0, c) * cofactor_determinant(minor);
        total += c % 2 == 0 ? term : Rational(-term);
    }
    return total;
}

/// All-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int n = g.order();
    const int inf = n + 1;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d[i][j] = i == j ? 0 : (g.adjacent(i, j) ? 1 : inf);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (auto& x : row)
            if (x >= inf)
                x = -1;
    return d;
}

/// Tries every permutation.
inline bool brute_force_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order())
        return false;
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < g.order() && ok; ++u)
            for (int v = u + 1; v < g.order() && ok; ++v)
                ok = g.adjacent(u, v) == h.adjacent(perm[u], perm[v]);
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Union-find connectivity straight from the edge mask bit order.
inline bool mask_connected(int n, std::uint64_t mask) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = n;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1u) {
                int a = find(i), b = find(j);
                if (a != b) {
                    parent[a] = b;
                    --components;
                }
            }
    return components == 1;
}

inline std::uint64_t brute_force_connected_count(int n) {
    const int bits = n * (n - 1) / 2;
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask)
        count += mask_connected(n, mask) ? 1 : 0;
    return count;
}

/// Uniform random labelled tree via a random Pruefer sequence.
inline Graph random_tree(int n, std::mt19937_64& rng) {
    if (n == 1)
        return make_empty(1);
    if (n == 2)
        return make_path(2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (auto& c : code)
        c = pick(rng);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code)
        ++degree[c];
    std::vector<Edge> edges;
    for (int c : code) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (degree[leaf] == 1) {
                edges.emplace_back(leaf, c);
                --degree[leaf];
                --degree[c];
                break;
            }
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1)
            last.push_back(v);
    edges.emplace_back(last.at(0), last.at(1));
    return Graph(n, edges);
}

/// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
    Graph t = random_tree(n, rng);
    std::vector<Edge> edges = t.edges();
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!t.adjacent(i, j) && coin(rng))
                edges.emplace_back(i, j);
    return Graph(n, edges);
}

/// Random rooted tree with 1..max_nodes nodes, each node attached to a
/// uniformly chosen earlier node, sizes uniform in [lo, hi].
inline CliqueTree random_clique_tree(int max_nodes, int lo, int hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, max_nodes);
    std::uniform_int_distribution<int> size(lo, hi);
    const int k = count(rng);
    std::vector<int> sizes, parents;
    for (int i = 0; i < k; ++i) {
        sizes.push_back(size(rng));
        parents.push_back(i == 0 ? -1 : std::uniform_int_distribution<int>(0, i - 1)(rng));
    }
    return CliqueTree::from_parents(sizes, parents);
}

/// Counts induced 4-vertex subgraphs of each forbidden type. On four
/// vertices: P4 has 3 edges with degrees {1,1,2,2}; C4 has 4 edges all of
/// degree 2; 2K2 has 2 edges all of degree 1.
struct FourVertexScan {
    int p4 = 0;
    int c4 = 0;
    int two_k2 = 0;
};

inline FourVertexScan scan_four_subsets(const Graph& g) {
    FourVertexScan out;
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const int vs[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(vs[i], vs[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    std::sort(deg, deg + 4);
                    if (edges == 3 && deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2)
                        ++out.p4;
                    else if (edges == 4 && deg[0] == 2 && deg[3] == 2)
                        ++out.c4;
                    else if (edges == 2 && deg[0] == 1 && deg[3] == 1)
                        ++out.two_k2;
                }
    return out;
}

// Named small graphs.
inline Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}); }
inline Graph diamond() { return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline Graph house() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}}); }

} // namespace distrank::testing
