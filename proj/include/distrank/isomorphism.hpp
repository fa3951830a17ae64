#pragma once

#include "distrank/distance.hpp"
#include "distrank/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

namespace distrank {

namespace detail {

/// Per-vertex distance profile: count of vertices at each distance, with
/// unreachable vertices counted in the last slot.
inline std::vector<std::vector<int>> distance_profiles(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::vector<int>> out(n, std::vector<int>(n + 1, 0));
    for (std::size_t v = 0; v < n; ++v) {
        for (int d : bfs(g, static_cast<Vertex>(v)))
            ++out[v][d < 0 ? n : static_cast<std::size_t>(d)];
    }
    return out;
}

/// Colour refinement run jointly over both graphs so that colour ids are
/// comparable between them. Returns the stable colouring of each.
inline std::pair<std::vector<int>, std::vector<int>> refine_jointly(const Graph& g, const Graph& h) {
    auto seed = [](const Graph& x) { return distance_profiles(x); };
    std::vector<int> cg, ch;
    {
        std::map<std::vector<int>, int> ids;
        auto pg = seed(g);
        auto ph = seed(h);
        for (auto& p : pg)
            ids.emplace(p, 0);
        for (auto& p : ph)
            ids.emplace(p, 0);
        int next = 0;
        for (auto& [k, v] : ids)
            v = next++;
        for (auto& p : pg)
            cg.push_back(ids[p]);
        for (auto& p : ph)
            ch.push_back(ids[p]);
    }
    std::size_t classes = 0;
    while (true) {
        std::map<std::vector<int>, int> ids;
        auto signature = [](const Graph& x, const std::vector<int>& col, Vertex v) {
            std::vector<int> sig{col[static_cast<std::size_t>(v)]};
            x.for_each_neighbor(v, [&](Vertex u) { sig.push_back(col[static_cast<std::size_t>(u)]); });
            std::sort(sig.begin() + 1, sig.end());
            return sig;
        };
        std::vector<std::vector<int>> sg, sh;
        for (Vertex v = 0; v < g.order(); ++v)
            sg.push_back(signature(g, cg, v));
        for (Vertex v = 0; v < h.order(); ++v)
            sh.push_back(signature(h, ch, v));
        for (auto& s : sg)
            ids.emplace(s, 0);
        for (auto& s : sh)
            ids.emplace(s, 0);
        int next = 0;
        for (auto& [k, v] : ids)
            v = next++;
        for (std::size_t i = 0; i < sg.size(); ++i)
            cg[i] = ids[sg[i]];
        for (std::size_t i = 0; i < sh.size(); ++i)
            ch[i] = ids[sh[i]];
        if (ids.size() == classes)
            break;
        classes = ids.size();
    }
    return {cg, ch};
}

class isomorphism_search {
public:
    isomorphism_search(const Graph& g, const Graph& h, std::vector<int> cg, std::vector<int> ch)
        : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)),
          map_(static_cast<std::size_t>(g.order()), -1), used_(static_cast<std::size_t>(h.order()), 0) {
        order_vertices();
    }

    bool run() { return extend(0); }

private:
    // Vertices in rarest-colour-first, then connected (BFS) order, so each
    // new vertex is constrained by already mapped neighbours.
    void order_vertices() {
        const auto n = static_cast<std::size_t>(g_.order());
        std::map<int, int> freq;
        for (int c : cg_)
            ++freq[c];
        std::vector<char> placed(n, 0);
        while (order_.size() < n) {
            Vertex start = -1;
            for (std::size_t v = 0; v < n; ++v)
                if (!placed[v] && (start < 0 || freq[cg_[v]] < freq[cg_[static_cast<std::size_t>(start)]]))
                    start = static_cast<Vertex>(v);
            std::vector<Vertex> queue{start};
            placed[static_cast<std::size_t>(start)] = 1;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                order_.push_back(queue[head]);
                g_.for_each_neighbor(queue[head], [&](Vertex u) {
                    if (!placed[static_cast<std::size_t>(u)]) {
                        placed[static_cast<std::size_t>(u)] = 1;
                        queue.push_back(u);
                    }
                });
            }
        }
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size())
            return true;
        const Vertex v = order_[depth];
        for (Vertex w = 0; w < h_.order(); ++w) {
            if (used_[static_cast<std::size_t>(w)] || ch_[static_cast<std::size_t>(w)] != cg_[static_cast<std::size_t>(v)])
                continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const Vertex u = order_[k];
                ok = g_.adjacent(u, v) == h_.adjacent(map_[static_cast<std::size_t>(u)], w);
            }
            if (!ok)
                continue;
            map_[static_cast<std::size_t>(v)] = w;
            used_[static_cast<std::size_t>(w)] = 1;
            if (extend(depth + 1))
                return true;
            used_[static_cast<std::size_t>(w)] = 0;
            map_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<int> cg_, ch_;
    std::vector<Vertex> map_;
    std::vector<char> used_;
    std::vector<Vertex> order_;
};

} // namespace detail

/// Cheap isomorphism invariant: order, size, degree sequence, and the sorted
/// multiset of distance profiles.
struct GraphInvariant {
    int order = 0;
    std::size_t edges = 0;
    std::vector<int> degrees;
    std::vector<std::vector<int>> profiles;

    friend auto operator<=>(const GraphInvariant&, const GraphInvariant&) = default;
};

inline GraphInvariant graph_invariant(const Graph& g) {
    GraphInvariant inv{g.order(), g.edge_count(), degree_sequence(g), detail::distance_profiles(g)};
    std::sort(inv.profiles.begin(), inv.profiles.end());
    return inv;
}

/// Decides whether an adjacency-preserving bijection exists.
inline bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return false;
    if (degree_sequence(g) != degree_sequence(h))
        return false;
    if (graph_invariant(g) != graph_invariant(h))
        return false;
    auto [cg, ch] = detail::refine_jointly(g, h);
    auto sorted_g = cg;
    auto sorted_h = ch;
    std::sort(sorted_g.begin(), sorted_g.end());
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_g != sorted_h)
        return false;
    return detail::isomorphism_search(g, h, std::move(cg), std::move(ch)).run();
}

} // namespace distrank
