#pragma once

#include "distrank/distance.hpp"
#include "distrank/elimination.hpp"
#include "distrank/error.hpp"
#include "distrank/graph.hpp"
#include "distrank/matrix.hpp"
#include "distrank/rational.hpp"
#include "distrank/twin_quotient.hpp"

#include <charconv>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace distrank {

/// Block encoding [n_1, ..., n_2k] of the creation sequence
/// 0^{n_1} 1^{n_2} 0^{n_3} ... 1^{n_2k} of a connected threshold graph:
/// odd blocks add isolated vertices, even blocks add universal vertices.
class PowerSequence {
public:
    explicit PowerSequence(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty() || parts_.size() % 2 != 0)
            throw domain_error("power sequence needs an even, nonzero number of parts");
        for (int p : parts_)
            if (p < 1)
                throw domain_error("power sequence parts must be positive");
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    /// n_i with 1-based i.
    int part(std::size_t i) const { return parts_.at(i - 1); }
    int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i != 0)
                out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend auto operator<=>(const PowerSequence&, const PowerSequence&) = default;

private:
    std::vector<int> parts_;
};

/// Comma-separated positive integers; whitespace around items is ignored.
inline PowerSequence parse_power_sequence(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::size_t lead = 0;
        while (lead < item.size() && (item[lead] == ' ' || item[lead] == '\t'))
            ++lead;
        item.remove_prefix(lead);
        while (!item.empty() && (item.back() == ' ' || item.back() == '\t' || item.back() == '\n' || item.back() == '\r'))
            item.remove_suffix(1);
        int value = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || p != item.data() + item.size())
            throw parse_error("expected integer part, got '" + std::string(item) + "'", 1, pos + lead + 1);
        if (value < 1)
            throw parse_error("power sequence parts must be positive", 1, pos + lead + 1);
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    if (parts.size() % 2 != 0)
        throw parse_error("power sequence must have even length, got " + std::to_string(parts.size()), 1, 0);
    return PowerSequence(std::move(parts));
}

/// Threshold graph of the creation sequence: a vertex from an even block is
/// adjacent to every earlier vertex.
inline Graph power_sequence_to_graph(const PowerSequence& ps) {
    std::vector<Edge> edges;
    Vertex next = 0;
    for (std::size_t b = 0; b < ps.length(); ++b) {
        const bool universal = b % 2 == 1;
        for (int c = 0; c < ps.parts()[b]; ++c, ++next)
            if (universal)
                for (Vertex u = 0; u < next; ++u)
                    edges.emplace_back(u, next);
    }
    return Graph(next, edges);
}

/// Block-by-block partition: odd blocks false twins, even blocks true twins.
inline TwinPartition natural_partition(const PowerSequence& ps, const Graph& g) {
    std::vector<TwinClass> classes;
    Vertex next = 0;
    for (std::size_t b = 0; b < ps.length(); ++b) {
        TwinClass c;
        c.kind = b % 2 == 0 ? TwinKind::false_twin : TwinKind::true_twin;
        for (int i = 0; i < ps.parts()[b]; ++i)
            c.members.push_back(next++);
        classes.push_back(std::move(c));
    }
    return TwinPartition(g, std::move(classes));
}

/// The 2k x 2k quotient under the natural partition, built from the block
/// distances: a later odd block sits at distance 2 from earlier blocks, a
/// later even block at distance 1.
inline ExactMatrix threshold_quotient(const PowerSequence& ps) {
    const std::size_t m = ps.length();
    ExactMatrix q(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const long nj = ps.parts()[j];
            if (i == j) {
                q(i, i) = i % 2 == 0 ? 2 * (nj - 1) : nj - 1;
                continue;
            }
            const std::size_t later = std::max(i, j);
            const long dist = later % 2 == 0 ? 2 : 1; // 0-based: even index = odd block
            q(i, j) = nj * dist;
        }
    return q;
}

/// Row operations that take threshold_quotient(ps) to the tridiagonal form
/// with alpha_i on the diagonal, 1 above and -1 below.
inline std::vector<RowOp> threshold_tridiagonal_ops(const PowerSequence& ps) {
    const std::size_t m = ps.length();
    std::vector<RowOp> ops;
    // r_i - r_{i+1} -> r_i, top to bottom
    for (std::size_t i = 0; i + 1 < m; ++i)
        ops.push_back(RowOp::add(i, i + 1, Rational(-1)));
    // negate even rows except the last (1-based)
    for (std::size_t i = 1; i + 1 < m; i += 2)
        ops.push_back(RowOp::scale(i, Rational(-1)));
    // r_i - r_{i-1} -> r_i, bottom to top
    for (std::size_t i = m - 1; i >= 1; --i)
        ops.push_back(RowOp::add(i, i - 1, Rational(-1)));
    // divide even rows by -2
    for (std::size_t i = 1; i < m; i += 2)
        ops.push_back(RowOp::scale(i, make_rational(-1, 2)));
    return ops;
}

/// alpha_1 = n_1 - 2; alpha_i = n_i (odd i > 1); alpha_i = -n_i/2 (even
/// i < 2k); alpha_2k = (2 - n_2k)/2.
inline std::vector<Rational> alpha_sequence(const PowerSequence& ps) {
    const std::size_t m = ps.length();
    std::vector<Rational> a(m);
    for (std::size_t i = 1; i <= m; ++i) {
        const long n = ps.part(i);
        if (i == 1)
            a[0] = n - 2;
        else if (i == m)
            a[i - 1] = make_rational(2 - n, 2);
        else if (i % 2 == 1)
            a[i - 1] = n;
        else
            a[i - 1] = make_rational(-n, 2);
    }
    return a;
}

/// Leading principal minors of the tridiagonal alpha matrix:
/// d_1 = a_1, d_2 = 1 + a_1 a_2, d_i = a_i d_{i-1} + d_{i-2}.
inline std::vector<Rational> continuants(std::span<const Rational> alpha) {
    if (alpha.size() < 2)
        throw domain_error("continuants need at least two alphas");
    std::vector<Rational> d(alpha.size());
    d[0] = alpha[0];
    d[1] = 1 + alpha[0] * alpha[1];
    for (std::size_t i = 2; i < alpha.size(); ++i)
        d[i] = alpha[i] * d[i - 1] + d[i - 2];
    return d;
}

/// 1 iff the last continuant vanishes. The first 2k-1 rows of the reduced
/// form are always independent, so the nullity never exceeds 1.
inline int threshold_nullity(const PowerSequence& ps) {
    const auto alpha = alpha_sequence(ps);
    return continuants(alpha).back() == 0 ? 1 : 0;
}

/// Nullity of the full distance matrix, by elimination.
inline std::size_t threshold_oracle_nullity(const PowerSequence& ps) {
    return distance_nullity(power_sequence_to_graph(ps));
}

/// Visits every power sequence with total at most max_total in order of
/// (length, parts) lexicographically.
template <class F>
void for_each_power_sequence(int max_total, F&& f) {
    for (int len = 2; len <= max_total; len += 2) {
        std::vector<int> parts(static_cast<std::size_t>(len), 1);
        while (true) {
            f(PowerSequence(parts));
            // next composition in lexicographic order with sum <= max_total
            int sum = std::accumulate(parts.begin(), parts.end(), 0);
            std::size_t i = parts.size();
            if (sum < max_total) {
                ++parts.back();
                continue;
            }
            // sum == max_total: carry leftwards
            while (i > 1) {
                --i;
                sum -= parts[i] - 1;
                parts[i] = 1;
                if (sum < max_total) {
                    ++parts[i - 1];
                    break;
                }
            }
            if (sum >= max_total)
                break;
        }
    }
}

struct ThresholdHit {
    PowerSequence sequence;
    int order;
    Rational last_continuant;
    std::size_t oracle_nullity;
};

/// All power sequences with total <= max_total whose last continuant is
/// zero. Each hit is checked against the full-matrix nullity; a disagreement
/// anywhere in the space raises consistency_error.
inline std::vector<ThresholdHit> search_singular_power_sequences(int max_total) {
    if (max_total < 2)
        throw domain_error("search budget must be at least 2");
    std::vector<ThresholdHit> hits;
    for_each_power_sequence(max_total, [&](const PowerSequence& ps) {
        const auto d = continuants(alpha_sequence(ps));
        const int fast = d.back() == 0 ? 1 : 0;
        const auto oracle = threshold_oracle_nullity(ps);
        if (static_cast<std::size_t>(fast) != oracle)
            throw consistency_error("continuant test disagrees with elimination for [" + ps.str() + "]");
        if (fast == 1)
            hits.push_back({ps, ps.total(), d.back(), oracle});
    });
    return hits;
}

/// Family A: [4,1,m,2]; family B: [3,2,m,2].
inline PowerSequence family_generator(std::string_view name, int m) {
    if (m < 1)
        throw domain_error("family parameter must be >= 1");
    if (name == "A")
        return PowerSequence({4, 1, m, 2});
    if (name == "B")
        return PowerSequence({3, 2, m, 2});
    throw domain_error("unknown threshold family '" + std::string(name) + "'");
}

} // namespace distrank
