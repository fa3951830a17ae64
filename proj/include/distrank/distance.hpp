#pragma once

#include "distrank/elimination.hpp"
#include "distrank/error.hpp"
#include "distrank/graph.hpp"
#include "distrank/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace distrank {

/// Shortest-path distance matrix D(G) of a connected graph.
class DistanceMatrix {
public:
    int order() const noexcept { return static_cast<int>(entries_.rows()); }

    std::int64_t operator()(Vertex u, Vertex v) const {
        return entries_(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }

    const IntMatrix& entries() const noexcept { return entries_; }
    ExactMatrix exact() const { return to_exact(entries_); }

    std::int64_t max_entry() const {
        std::int64_t best = 0;
        for (std::size_t i = 0; i < entries_.rows(); ++i)
            for (std::size_t j = 0; j < entries_.cols(); ++j)
                best = std::max(best, entries_(i, j));
        return best;
    }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    explicit DistanceMatrix(IntMatrix m) : entries_(std::move(m)) {}
    friend DistanceMatrix distance_matrix(const Graph&);

    IntMatrix entries_;
};

namespace detail {

/// BFS distances from `source`; -1 marks unreachable vertices.
inline std::vector<int> bfs(const Graph& g, Vertex source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        int next = dist[static_cast<std::size_t>(v)] + 1;
        g.for_each_neighbor(v, [&](Vertex u) {
            if (dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = next;
                queue.push_back(u);
            }
        });
    }
    return dist;
}

} // namespace detail

inline DistanceMatrix distance_matrix(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    IntMatrix m(n, n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        auto dist = detail::bfs(g, static_cast<Vertex>(s));
        for (std::size_t t = 0; t < n; ++t) {
            if (dist[t] < 0)
                throw not_connected_error();
            m(s, t) = dist[t];
        }
    }
    return DistanceMatrix(std::move(m));
}

inline int diameter(const Graph& g) { return static_cast<int>(distance_matrix(g).max_entry()); }

/// rank_d(G): rank of D(G) over the rationals.
inline std::size_t distance_rank(const Graph& g) { return rank(distance_matrix(g).entries()); }

inline std::size_t distance_nullity(const Graph& g) { return nullity(distance_matrix(g).entries()); }

/// True iff distances inside G[S] agree with distances in G for every pair in S.
inline bool is_isometric_subgraph(const Graph& g, std::span<const Vertex> subset) {
    if (subset.empty())
        throw domain_error("isometric subgraph test needs a nonempty vertex subset");
    const Graph h = g.induced(subset);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        auto in_g = detail::bfs(g, subset[i]);
        auto in_h = detail::bfs(h, static_cast<Vertex>(i));
        for (std::size_t j = 0; j < subset.size(); ++j) {
            int dg = in_g[static_cast<std::size_t>(subset[j])];
            if (dg < 0)
                throw not_connected_error();
            if (in_h[j] != dg)
                return false;
        }
    }
    return true;
}

} // namespace distrank
