#pragma once

#include "distrank/elimination.hpp"
#include "distrank/error.hpp"
#include "distrank/graph.hpp"
#include "distrank/matrix.hpp"
#include "distrank/rational.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace distrank {

/// Rooted tree whose nodes are cliques of true twins; two vertices of the
/// associated graph are adjacent iff their nodes coincide or one is an
/// ancestor of the other.
///
/// Nodes are stored in depth-first pre-order (children in insertion order),
/// so node 0 is the root and every subtree occupies a contiguous index range.
class CliqueTree {
public:
    using Node = std::size_t;

    /// Builds from clique sizes and parent links (`parents[root]` must be
    /// -1). Nodes are renumbered into pre-order; children keep the relative
    /// order of their original indices.
    static CliqueTree from_parents(std::span<const int> sizes, std::span<const int> parents) {
        const std::size_t k = sizes.size();
        if (k == 0 || parents.size() != k)
            throw domain_error("clique tree needs matching nonempty size and parent lists");
        std::vector<std::vector<std::size_t>> kids(k);
        std::size_t root = k;
        for (std::size_t i = 0; i < k; ++i) {
            if (sizes[i] < 1)
                throw domain_error("clique sizes must be positive");
            if (parents[i] < 0) {
                if (root != k)
                    throw domain_error("clique tree has more than one root");
                root = i;
            } else {
                if (static_cast<std::size_t>(parents[i]) >= k || static_cast<std::size_t>(parents[i]) == i)
                    throw domain_error("bad parent index");
                kids[static_cast<std::size_t>(parents[i])].push_back(i);
            }
        }
        if (root == k)
            throw domain_error("clique tree has no root");
        CliqueTree t;
        std::vector<std::pair<std::size_t, int>> stack{{root, -1}};
        while (!stack.empty()) {
            auto [old, parent] = stack.back();
            stack.pop_back();
            const Node id = t.add_node(sizes[old], parent);
            for (auto it = kids[old].rbegin(); it != kids[old].rend(); ++it)
                stack.emplace_back(*it, static_cast<int>(id));
        }
        if (t.node_count() != k)
            throw domain_error("clique tree parent links contain a cycle or are disconnected");
        return t;
    }

    std::size_t node_count() const noexcept { return sizes_.size(); }
    int size(Node v) const { return sizes_.at(v); }
    const std::vector<int>& sizes() const noexcept { return sizes_; }
    /// -1 for the root.
    int parent(Node v) const { return parents_.at(v); }
    const std::vector<Node>& children(Node v) const { return children_.at(v); }
    std::size_t subtree_size(Node v) const { return span_.at(v); }

    /// True iff `a` is a proper ancestor of `b`.
    bool is_ancestor(Node a, Node b) const { return a < b && b < a + span_[a]; }
    bool related(Node a, Node b) const { return a == b || is_ancestor(a, b) || is_ancestor(b, a); }

    int vertex_count() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

    /// Copy of the subtree rooted at `v`.
    CliqueTree subtree(Node v) const {
        CliqueTree t;
        for (Node u = v; u < v + span_.at(v); ++u)
            t.add_node(sizes_[u], u == v ? -1 : parents_[u] - static_cast<int>(v));
        return t;
    }

    std::string str() const {
        std::string out;
        write(0, out);
        return out;
    }

    friend bool operator==(const CliqueTree& a, const CliqueTree& b) {
        return a.sizes_ == b.sizes_ && a.parents_ == b.parents_;
    }

private:
    friend class clique_tree_parser;

    Node add_node(int size, int parent) {
        const Node id = sizes_.size();
        sizes_.push_back(size);
        parents_.push_back(parent);
        children_.emplace_back();
        span_.push_back(1);
        if (parent >= 0)
            children_[static_cast<std::size_t>(parent)].push_back(id);
        for (int p = parent; p >= 0; p = parents_[static_cast<std::size_t>(p)])
            ++span_[static_cast<std::size_t>(p)];
        return id;
    }

    void write(Node v, std::string& out) const {
        out += std::to_string(sizes_[v]);
        if (children_[v].empty())
            return;
        out += '(';
        for (std::size_t i = 0; i < children_[v].size(); ++i) {
            if (i != 0)
                out += ',';
            write(children_[v][i], out);
        }
        out += ')';
    }

    std::vector<int> sizes_;
    std::vector<int> parents_;
    std::vector<std::vector<Node>> children_;
    std::vector<std::size_t> span_;
};

class clique_tree_parser {
public:
    explicit clique_tree_parser(std::string_view text) : text_(text) {}

    CliqueTree run() {
        CliqueTree t;
        skip_ws();
        node(t, -1);
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return t;
    }

private:
    void node(CliqueTree& t, int parent) {
        skip_ws();
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000'000)
                fail("clique size too large");
            ++pos_;
        }
        if (pos_ == start)
            fail("expected clique size");
        if (value < 1) {
            pos_ = start;
            fail("clique size must be positive");
        }
        const auto id = static_cast<int>(t.add_node(static_cast<int>(value), parent));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            while (true) {
                node(t, id);
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (pos_ < text_.size() && text_[pos_] == ')') {
                    ++pos_;
                    break;
                }
                fail("expected ',' or ')'");
            }
        }
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, 1, pos_ + 1); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

/// Grammar: tree := SIZE [ "(" tree ("," tree)* ")" ], whitespace ignored.
inline CliqueTree parse_clique_tree(std::string_view text) { return clique_tree_parser(text).run(); }

/// Vertices are numbered node by node in arrow order.
inline Graph clique_tree_to_graph(const CliqueTree& t) {
    std::vector<int> first(t.node_count() + 1, 0);
    for (std::size_t v = 0; v < t.node_count(); ++v)
        first[v + 1] = first[v] + t.size(v);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < t.node_count(); ++a)
        for (std::size_t b = a; b < t.node_count(); ++b) {
            if (!t.related(a, b))
                continue;
            for (int u = first[a]; u < first[a + 1]; ++u)
                for (int v = first[b]; v < first[b + 1]; ++v)
                    if (u < v)
                        edges.emplace_back(u, v);
        }
    return Graph(first.back(), edges);
}

/// Depth-first pre-order with children in stored order. No node precedes an
/// ancestor and every subtree is contiguous.
inline std::vector<CliqueTree::Node> arrow_ordering(const CliqueTree& t) {
    std::vector<CliqueTree::Node> order;
    std::vector<CliqueTree::Node> stack{0};
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        order.push_back(v);
        const auto& kids = t.children(v);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it)
            stack.push_back(*it);
    }
    return order;
}

/// Leaves have height 0; otherwise 1 + the largest child height.
inline int height(const CliqueTree& t, CliqueTree::Node v) {
    int h = 0;
    for (auto c : t.children(v))
        h = std::max(h, 1 + height(t, c));
    return h;
}

/// D/W for the node partition (every node a true-twin class), arrow order.
inline ExactMatrix tp_quotient(const CliqueTree& t) {
    const std::size_t k = t.node_count();
    ExactMatrix q(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j)
                q(i, i) = t.size(i) - 1;
            else
                q(i, j) = static_cast<long>(t.size(j)) * (t.related(i, j) ? 1 : 2);
        }
    return q;
}

/// Arrow matrix built recursively from the tree shape.
///
/// As a subtree under some ancestor: top-left |R|+1, first row the sizes of
/// all proper descendants, first column |R|, then the children's arrow
/// matrices on the block diagonal; a leaf gives [|R|+1].
/// As the whole graph: top-left |R|-1 and first column |R|-2, so a single
/// clique gives [|R|-1].
inline ExactMatrix arrow_matrix(const CliqueTree& t, bool as_subtree) {
    const std::size_t k = t.node_count();
    const long root = t.size(0);
    ExactMatrix a(k, k);
    a(0, 0) = as_subtree ? root + 1 : root - 1;
    for (std::size_t j = 1; j < k; ++j) {
        a(0, j) = t.size(j);
        a(j, 0) = as_subtree ? root : root - 2;
    }
    for (auto c : t.children(0)) {
        const ExactMatrix block = arrow_matrix(t.subtree(c), true);
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
                a(c + i, c + j) = block(i, j);
    }
    return a;
}

/// r_W - 2 r_R -> r_W followed by -r_W -> r_W for every non-root W.
inline std::vector<RowOp> m1_ops(const CliqueTree& t) {
    std::vector<RowOp> ops;
    for (std::size_t i = 1; i < t.node_count(); ++i) {
        ops.push_back(RowOp::add(i, 0, Rational(-2)));
        ops.push_back(RowOp::scale(i, Rational(-1)));
    }
    return ops;
}

/// Applies m1_ops to tp_quotient(t) and checks the resulting structure: first
/// column |R|-2 below the root row, children's arrow matrices on the block
/// diagonal, zeros between different child subtrees.
inline ExactMatrix m1_reduction(const CliqueTree& t) {
    if (t.node_count() < 2)
        throw domain_error("M1 reduction needs at least two nodes");
    const auto ops = m1_ops(t);
    ExactMatrix m = row_reduce(tp_quotient(t), ops);
    const long root = t.size(0);
    for (std::size_t i = 1; i < m.rows(); ++i)
        if (m(i, 0) != root - 2)
            throw consistency_error("M1 first column is not |R|-2");
    for (auto c : t.children(0)) {
        const ExactMatrix block = arrow_matrix(t.subtree(c), true);
        const std::size_t end = c + t.subtree_size(c);
        for (std::size_t i = c; i < end; ++i)
            for (std::size_t j = 1; j < m.cols(); ++j) {
                const bool inside = j >= c && j < end;
                if (inside ? m(i, j) != block(i - c, j - c) : m(i, j) != 0)
                    throw consistency_error("M1 block structure does not match the arrow matrices");
            }
    }
    return m;
}

/// Nullity of D(G) via the quotient.
inline std::size_t tp_nullity(const CliqueTree& t) { return nullity(tp_quotient(t)); }

inline ExactMatrix gadget_matrix(int w, int a, int b) {
    if (w < 1 || a < 1 || b < 1)
        throw domain_error("gadget sizes must be positive");
    return ExactMatrix{{w + 1, a, b}, {w, a + 1, 0}, {w, 0, b + 1}};
}

using Triple = std::array<int, 3>;

/// Every (w, a, b) in [1, bound]^3 whose gadget matrix is singular, in
/// lexicographic order.
inline std::vector<Triple> singular_gadget_triples(int bound) {
    if (bound < 1)
        throw domain_error("gadget bound must be >= 1");
    std::vector<Triple> out;
    for (int w = 1; w <= bound; ++w)
        for (int a = 1; a <= bound; ++a)
            for (int b = 1; b <= bound; ++b)
                if (determinant(gadget_matrix(w, a, b)) == 0)
                    out.push_back({w, a, b});
    return out;
}

/// Root R_1 of size root_sizes[0]; its children are the leaves R_2..R_r and
/// k nodes of size 3, each with two leaf children of size 2. Requires k >= 2,
/// r in {1,2,3}, positive root sizes summing to n - 7k.
inline CliqueTree nullity_family(int k, int r, int n, std::span<const int> root_sizes) {
    if (k < 2)
        throw domain_error("family needs k >= 2");
    if (r < 1 || r > 3)
        throw domain_error("family needs r in {1,2,3}");
    if (n < 7 * k + r)
        throw domain_error("family needs n >= 7k + r");
    if (root_sizes.size() != static_cast<std::size_t>(r))
        throw domain_error("family needs exactly r root sizes");
    for (int s : root_sizes)
        if (s < 1)
            throw domain_error("root sizes must be positive");
    if (std::accumulate(root_sizes.begin(), root_sizes.end(), 0) != n - 7 * k)
        throw domain_error("root sizes must sum to n - 7k = " + std::to_string(n - 7 * k));
    std::vector<int> sizes{root_sizes[0]};
    std::vector<int> parents{-1};
    for (int i = 1; i < r; ++i) {
        sizes.push_back(root_sizes[static_cast<std::size_t>(i)]);
        parents.push_back(0);
    }
    for (int i = 0; i < k; ++i) {
        const int w = static_cast<int>(sizes.size());
        sizes.insert(sizes.end(), {3, 2, 2});
        parents.insert(parents.end(), {0, w, w});
    }
    return CliqueTree::from_parents(sizes, parents);
}

/// All admissible root-size lists for (k, r, n) in lexicographic order.
inline std::vector<std::vector<int>> family_root_sizes(int k, int r, int n) {
    const int total = n - 7 * k;
    std::vector<std::vector<int>> out;
    if (r < 1 || total < r)
        return out;
    std::vector<int> cur(static_cast<std::size_t>(r), 1);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == cur.size()) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        const int rest = static_cast<int>(cur.size() - i - 1);
        for (int v = 1; v <= left - rest; ++v) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

} // namespace distrank
