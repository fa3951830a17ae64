#pragma once

#include "distrank/error.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace distrank {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bitset row per vertex. Instances are immutable
/// once built; every mutation-like operation returns a new graph.
class Graph {
public:
    using Word = std::uint64_t;
    static constexpr int word_bits = 64;

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    Graph(int n, std::span<const Edge> edges) : Graph(n) {
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw index_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for " + std::to_string(n) + " vertices");
            if (u == v)
                throw invalid_edge_error("self-loop at vertex " + std::to_string(u));
            set_edge(u, v);
        }
    }

    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    /// Decodes an upper-triangle edge mask. Bit `j*(j-1)/2 + i` encodes the
    /// pair (i, j) with i < j, matching the graph6 column-major bit order.
    static Graph from_mask(int n, std::uint64_t mask) {
        Graph g(n);
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((mask >> bit) & 1u)
                    g.set_edge(i, j);
        return g;
    }

    int order() const noexcept { return n_; }

    std::size_t edge_count() const noexcept {
        std::size_t total = 0;
        for (Word w : adj_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total / 2;
    }

    bool adjacent(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return test(u, v);
    }

    int degree(Vertex v) const {
        check_vertex(v);
        int d = 0;
        for (Word w : row(v))
            d += std::popcount(w);
        return d;
    }

    /// Raw adjacency row of `v` (bit u set iff u ~ v).
    std::span<const Word> row(Vertex v) const {
        return {adj_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    std::size_t words_per_row() const noexcept { return words_; }

    std::vector<Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        std::vector<Vertex> out;
        for_each_neighbor(v, [&](Vertex u) { out.push_back(u); });
        return out;
    }

    template <class F>
    void for_each_neighbor(Vertex v, F&& f) const {
        auto r = row(v);
        for (std::size_t w = 0; w < words_; ++w) {
            Word bits = r[w];
            while (bits != 0) {
                int b = std::countr_zero(bits);
                f(static_cast<Vertex>(w * word_bits + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    /// Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < n_; ++u)
            for_each_neighbor(u, [&](Vertex v) {
                if (u < v)
                    out.emplace_back(u, v);
            });
        return out;
    }

    /// Upper-triangle mask (inverse of from_mask); requires n <= 11.
    std::uint64_t to_mask() const {
        if (n_ > 11)
            throw domain_error("edge mask needs n <= 11");
        std::uint64_t mask = 0;
        int bit = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (test(i, j))
                    mask |= std::uint64_t{1} << bit;
        return mask;
    }

    /// N(u) == N(v) when `closed` is false, N[u] == N[v] when true.
    bool same_neighborhood(Vertex u, Vertex v, bool closed) const {
        check_vertex(u);
        check_vertex(v);
        auto ru = row(u);
        auto rv = row(v);
        for (std::size_t w = 0; w < words_; ++w) {
            Word a = ru[w];
            Word b = rv[w];
            if (closed) {
                a |= bit_in_word(u, w);
                a |= bit_in_word(v, w);
                b |= bit_in_word(u, w);
                b |= bit_in_word(v, w);
            }
            if (a != b)
                return false;
        }
        // N[u] == N[v] requires u ~ v; the masking above would also accept
        // two isolated vertices otherwise.
        return !closed || test(u, v);
    }

    /// Subgraph induced by `vertices`, relabelled 0..|S|-1 in the given order.
    Graph induced(std::span<const Vertex> vertices) const {
        Graph g(static_cast<int>(vertices.size()));
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            check_vertex(vertices[i]);
            for (std::size_t j = i + 1; j < vertices.size(); ++j) {
                if (vertices[i] == vertices[j])
                    throw domain_error("duplicate vertex in induced subset");
                if (test(vertices[i], vertices[j]))
                    g.set_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    explicit Graph(int n) : n_(n), words_(static_cast<std::size_t>((n + word_bits - 1) / word_bits)) {
        if (n < 1)
            throw domain_error("a graph needs at least one vertex");
        adj_.assign(words_ * static_cast<std::size_t>(n), 0);
    }

    static Word bit_in_word(Vertex v, std::size_t w) {
        return static_cast<std::size_t>(v) / word_bits == w
                   ? Word{1} << (static_cast<std::size_t>(v) % word_bits)
                   : Word{0};
    }

    bool test(Vertex u, Vertex v) const {
        return (adj_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / word_bits] >>
                (static_cast<std::size_t>(v) % word_bits)) & 1u;
    }

    void set_edge(Vertex u, Vertex v) {
        adj_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / word_bits] |=
            Word{1} << (static_cast<std::size_t>(v) % word_bits);
        adj_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u) / word_bits] |=
            Word{1} << (static_cast<std::size_t>(u) % word_bits);
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw index_error("vertex " + std::to_string(v) + " out of range for " +
                              std::to_string(n_) + " vertices");
    }

    friend Graph join(const Graph&, const Graph&);
    friend Graph disjoint_union(const Graph&, const Graph&);

    int n_;
    std::size_t words_;
    std::vector<Word> adj_;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

inline Graph make_complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph make_path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph make_cycle(int n) {
    if (n < 3)
        throw domain_error("a cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

/// K_{1,n-1} with centre 0.
inline Graph make_star(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(0, i);
    return Graph(n, e);
}

/// nK_1.
inline Graph make_empty(int n) { return Graph(n, std::span<const Edge>{}); }

/// G + H; vertices of H follow those of G.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges())
        out.set_edge(u, v);
    for (auto [u, v] : h.edges())
        out.set_edge(u + g.order(), v + g.order());
    return out;
}

/// G v H: the disjoint union plus every edge between the two sides.
inline Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v)
            out.set_edge(u, g.order() + v);
    return out;
}

inline int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        d.push_back(g.degree(v));
    std::sort(d.rbegin(), d.rend());
    return d;
}

inline bool is_connected(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        g.for_each_neighbor(v, [&](Vertex u) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
        });
    }
    return reached == n;
}

inline bool are_true_twins(const Graph& g, Vertex u, Vertex v) {
    if (u == v)
        throw domain_error("twin test needs two distinct vertices");
    return g.same_neighborhood(u, v, true);
}

inline bool are_false_twins(const Graph& g, Vertex u, Vertex v) {
    if (u == v)
        throw domain_error("twin test needs two distinct vertices");
    return g.same_neighborhood(u, v, false);
}

} // namespace distrank
