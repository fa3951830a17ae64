#pragma once

#include "distrank/distance.hpp"
#include "distrank/error.hpp"
#include "distrank/graph.hpp"
#include "distrank/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <string>
#include <vector>

namespace distrank {

/// Hard ceiling imposed by 64-bit edge masks.
inline constexpr int max_mask_order = 11;

struct EnumerationLimits {
    int cap = 7;
    bool override_cap = false;
};

/// Contiguous slice `index` of `count` equal slices of a mask space.
struct Shard {
    std::uint64_t index = 0;
    std::uint64_t count = 1;
};

inline void check_shard(const Shard& s) {
    if (s.count == 0 || s.index >= s.count)
        throw domain_error("invalid shard " + std::to_string(s.index) + "/" + std::to_string(s.count));
}

inline void check_order(int n, const EnumerationLimits& limits) {
    if (n < 1)
        throw domain_error("enumeration needs n >= 1");
    if (n > max_mask_order)
        throw domain_error("enumeration supports at most " + std::to_string(max_mask_order) + " vertices");
    if (n > limits.cap && !limits.override_cap)
        throw domain_error("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(limits.cap) +
                           " (set the override to proceed)");
}

/// Half-open range of edge masks covered by `shard` for order n.
inline std::pair<std::uint64_t, std::uint64_t> mask_range(int n, const Shard& shard) {
    check_shard(shard);
    const int bits = n * (n - 1) / 2;
    const unsigned __int128 total = static_cast<unsigned __int128>(1) << bits;
    auto cut = [&](std::uint64_t i) { return static_cast<std::uint64_t>(total * i / shard.count); };
    return {cut(shard.index), cut(shard.index + 1)};
}

/// Calls f(graph, mask) for every connected labelled graph on n vertices in
/// ascending mask order within the shard.
template <class F>
void for_each_connected(int n, F&& f, Shard shard = {}, EnumerationLimits limits = {}) {
    check_order(n, limits);
    auto [begin, end] = mask_range(n, shard);
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        // A connected graph on n vertices has at least n-1 edges.
        if (std::popcount(mask) < n - 1)
            continue;
        Graph g = Graph::from_mask(n, mask);
        if (is_connected(g))
            f(g, mask);
    }
}

inline std::vector<Graph> enumerate_connected(int n, Shard shard = {}, EnumerationLimits limits = {}) {
    std::vector<Graph> out;
    for_each_connected(n, [&](const Graph& g, std::uint64_t) { out.push_back(g); }, shard, limits);
    return out;
}

inline std::uint64_t count_connected(int n, Shard shard = {}, EnumerationLimits limits = {}) {
    std::uint64_t c = 0;
    for_each_connected(n, [&](const Graph&, std::uint64_t) { ++c; }, shard, limits);
    return c;
}

/// A labelled graph located by order and edge mask.
struct LabeledGraph {
    int order;
    std::uint64_t mask;

    Graph graph() const { return Graph::from_mask(order, mask); }
    friend auto operator<=>(const LabeledGraph&, const LabeledGraph&) = default;
};

/// Non-isomorphic representatives of connected graphs with a given distance
/// rank, plus how many labelled graphs were seen.
struct CensusWitness {
    int rank = 0;
    std::vector<Graph> representatives;
    std::uint64_t labeled_count = 0;
};

struct CensusOptions {
    Shard shard;
    EnumerationLimits limits;
    unsigned jobs = 1;
};

/// Every connected labelled graph on 1..max_n vertices with distance rank k,
/// in (order, mask) order.
inline std::vector<LabeledGraph> scan_distance_rank(int k, int max_n, const Shard& shard = {},
                                                    const EnumerationLimits& limits = {}) {
    if (k < 2)
        throw domain_error("census needs rank >= 2");
    check_shard(shard);
    check_order(max_n, limits);
    std::vector<LabeledGraph> hits;
    // rank_d(G) <= n, so orders below k cannot contribute.
    for (int n = std::max(k, 2); n <= max_n; ++n) {
        for_each_connected(
            n,
            [&](const Graph& g, std::uint64_t mask) {
                auto d = distance_matrix(g);
                // diam(G) + 1 <= rank_d(G)
                if (d.max_entry() + 1 > k)
                    return;
                if (rank(d.entries()) == static_cast<std::size_t>(k))
                    hits.push_back({n, mask});
            },
            shard, limits);
    }
    return hits;
}

/// Keeps the first graph of each isomorphism class in (order, mask) order.
inline CensusWitness dedupe_hits(int k, std::vector<LabeledGraph> hits) {
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    CensusWitness out;
    out.rank = k;
    out.labeled_count = hits.size();
    std::map<GraphInvariant, std::vector<std::size_t>> buckets;
    for (const auto& h : hits) {
        Graph g = h.graph();
        auto& bucket = buckets[graph_invariant(g)];
        bool seen = std::any_of(bucket.begin(), bucket.end(),
                                [&](std::size_t i) { return is_isomorphic(out.representatives[i], g); });
        if (!seen) {
            bucket.push_back(out.representatives.size());
            out.representatives.push_back(std::move(g));
        }
    }
    return out;
}

/// Labelled hits for the requested shard, split further across `jobs` worker
/// tasks and concatenated in sub-shard order.
inline std::vector<LabeledGraph> scan_distance_rank_parallel(int k, int max_n, const CensusOptions& opt) {
    check_shard(opt.shard);
    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1)
        return scan_distance_rank(k, max_n, opt.shard, opt.limits);
    std::vector<std::future<std::vector<LabeledGraph>>> parts;
    for (unsigned j = 0; j < jobs; ++j) {
        Shard sub{opt.shard.index * jobs + j, opt.shard.count * jobs};
        parts.push_back(std::async(std::launch::async, [=] { return scan_distance_rank(k, max_n, sub, opt.limits); }));
    }
    std::vector<LabeledGraph> all;
    for (auto& p : parts) {
        auto v = p.get();
        all.insert(all.end(), v.begin(), v.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

inline CensusWitness census_by_distance_rank(int k, int max_n, const CensusOptions& opt = {}) {
    return dedupe_hits(k, scan_distance_rank_parallel(k, max_n, opt));
}

} // namespace distrank
