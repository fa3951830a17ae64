#pragma once

#include "distrank/distance.hpp"
#include "distrank/elimination.hpp"
#include "distrank/error.hpp"
#include "distrank/graph.hpp"
#include "distrank/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace distrank {

enum class TwinKind { true_twin, false_twin };

struct TwinClass {
    std::vector<Vertex> members; // ascending
    TwinKind kind = TwinKind::true_twin;
};

/// Partition of V(G) into classes of true twins or of false twins, with one
/// designated representative per class.
class TwinPartition {
public:
    /// Validates `classes` against `g`: they must partition V(G), and every
    /// class of size >= 2 must be a clique of true twins or an independent
    /// set of false twins as tagged. Representatives default to the least
    /// member.
    TwinPartition(const Graph& g, std::vector<TwinClass> classes) : classes_(std::move(classes)) {
        std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
        std::size_t covered = 0;
        for (auto& c : classes_) {
            if (c.members.empty())
                throw domain_error("empty twin class");
            std::sort(c.members.begin(), c.members.end());
            for (Vertex v : c.members) {
                if (v < 0 || v >= g.order())
                    throw domain_error("twin class vertex out of range");
                if (seen[static_cast<std::size_t>(v)])
                    throw domain_error("vertex " + std::to_string(v) + " appears in two twin classes");
                seen[static_cast<std::size_t>(v)] = 1;
                ++covered;
            }
            const bool closed = c.kind == TwinKind::true_twin;
            for (std::size_t i = 0; i < c.members.size(); ++i)
                for (std::size_t j = i + 1; j < c.members.size(); ++j)
                    if (!g.same_neighborhood(c.members[i], c.members[j], closed))
                        throw domain_error("vertices " + std::to_string(c.members[i]) + " and " +
                                           std::to_string(c.members[j]) + " are not " +
                                           (closed ? "true" : "false") + " twins");
            representatives_.push_back(c.members.front());
        }
        if (covered != static_cast<std::size_t>(g.order()))
            throw domain_error("twin classes do not cover every vertex");
        order_ = g.order();
    }

    std::size_t size() const noexcept { return classes_.size(); }
    const std::vector<TwinClass>& classes() const noexcept { return classes_; }
    const TwinClass& operator[](std::size_t i) const { return classes_[i]; }
    Vertex representative(std::size_t i) const { return representatives_[i]; }
    int graph_order() const noexcept { return order_; }

    /// Same classes, different representatives (one member per class).
    TwinPartition with_representatives(std::span<const Vertex> reps) const {
        if (reps.size() != classes_.size())
            throw domain_error("one representative per class required");
        TwinPartition out = *this;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (!std::binary_search(classes_[i].members.begin(), classes_[i].members.end(), reps[i]))
                throw domain_error("representative is not a member of its class");
            out.representatives_[i] = reps[i];
        }
        return out;
    }

    /// Class index of every vertex.
    std::vector<std::size_t> class_of() const {
        std::vector<std::size_t> out(static_cast<std::size_t>(order_));
        for (std::size_t i = 0; i < classes_.size(); ++i)
            for (Vertex v : classes_[i].members)
                out[static_cast<std::size_t>(v)] = i;
        return out;
    }

private:
    std::vector<TwinClass> classes_;
    std::vector<Vertex> representatives_;
    int order_ = 0;
};

/// Maximal twin partition: classes of u ~ v <=> N(u) = N(v) or N[u] = N[v],
/// ordered by least member. Singletons are tagged true-twin.
inline TwinPartition twin_partition(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            auto a = static_cast<Vertex>(u), b = static_cast<Vertex>(v);
            if (g.same_neighborhood(a, b, true) || g.same_neighborhood(a, b, false)) {
                auto ru = find(u), rv = find(v);
                if (ru != rv)
                    parent[std::max(ru, rv)] = std::min(ru, rv);
            }
        }
    std::vector<TwinClass> classes;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        auto r = find(v);
        if (slot[r] == n) {
            slot[r] = classes.size();
            classes.push_back({});
        }
        classes[slot[r]].members.push_back(static_cast<Vertex>(v));
    }
    for (auto& c : classes) {
        if (c.members.size() < 2)
            continue;
        const bool adjacent = g.adjacent(c.members[0], c.members[1]);
        bool all_true = true, all_false = true;
        for (std::size_t i = 0; i < c.members.size(); ++i)
            for (std::size_t j = i + 1; j < c.members.size(); ++j) {
                all_true = all_true && g.same_neighborhood(c.members[i], c.members[j], true);
                all_false = all_false && g.same_neighborhood(c.members[i], c.members[j], false);
            }
        if (adjacent && all_true)
            c.kind = TwinKind::true_twin;
        else if (!adjacent && all_false)
            c.kind = TwinKind::false_twin;
        else
            throw consistency_error("twin class mixes true and false twins");
    }
    return TwinPartition(g, std::move(classes));
}

/// D/W: off-diagonal |W_j| d(w_i, w_j); diagonal |W_i| - 1 for true twins
/// and 2(|W_i| - 1) for false twins.
inline ExactMatrix quotient_matrix(const Graph& g, const TwinPartition& p) {
    if (p.graph_order() != g.order())
        throw domain_error("partition was built for a different graph");
    const auto d = distance_matrix(g);
    const std::size_t k = p.size();
    ExactMatrix q(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const long size_j = static_cast<long>(p[j].members.size());
            if (i == j) {
                const long c = p[i].kind == TwinKind::true_twin ? 1 : 2;
                q(i, i) = c * (size_j - 1);
            } else {
                q(i, j) = size_j * static_cast<long>(d(p.representative(i), p.representative(j)));
            }
        }
    return q;
}

struct NullityPair {
    std::size_t full;
    std::size_t quotient;
};

/// Nullity of D(G) and of D/W for the maximal twin partition, each computed
/// by its own elimination.
inline NullityPair verify_nullity_equivalence(const Graph& g) {
    const auto full = nullity(distance_matrix(g).entries());
    const auto quotient = nullity(quotient_matrix(g, twin_partition(g)));
    return {full, quotient};
}

/// True iff x takes equal values on every pair of (true or false) twins.
inline bool null_vector_twin_constancy(const Graph& g, std::span<const Rational> x) {
    if (x.size() != static_cast<std::size_t>(g.order()))
        throw shape_error("vector dimension does not match graph order");
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if ((g.same_neighborhood(u, v, true) || g.same_neighborhood(u, v, false)) &&
                x[static_cast<std::size_t>(u)] != x[static_cast<std::size_t>(v)])
                return false;
    return true;
}

/// One line per class: `T|F <size>: v1 v2 ...` with 1-based vertices.
inline void write_partition(std::ostream& os, const TwinPartition& p) {
    for (const auto& c : p.classes()) {
        os << (c.kind == TwinKind::true_twin ? 'T' : 'F') << ' ' << c.members.size() << ':';
        for (Vertex v : c.members)
            os << ' ' << v + 1;
        os << '\n';
    }
}

} // namespace distrank
