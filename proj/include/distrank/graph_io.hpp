#pragma once

#include "distrank/error.hpp"
#include "distrank/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace distrank {

namespace detail {

struct token {
    std::string_view text;
    std::size_t column; // 1-based
};

inline std::vector<token> split_ws(std::string_view line) {
    std::vector<token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline long parse_count(const token& t, std::size_t line_no, const char* what) {
    long value = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || p != t.text.data() + t.text.size())
        throw parse_error(std::string("expected integer ") + what + ", got '" + std::string(t.text) + "'",
                          line_no, t.column);
    return value;
}

} // namespace detail

/// DIMACS-style edge list: `p edge <n> <m>` followed by exactly m lines
/// `e <u> <v>` with 1-based vertices. Blank lines and `c` comment lines are
/// skipped.
inline Graph parse_edge_list(std::string_view text) {
    long n = -1;
    long m = 0;
    std::size_t header_line = 0;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0].text.front() == 'c')
            continue;
        if (toks[0].text == "p") {
            if (n >= 0)
                throw parse_error("duplicate problem line", line_no, toks[0].column);
            if (toks.size() != 4 || toks[1].text != "edge")
                throw parse_error("expected 'p edge <n> <m>'", line_no, toks[0].column);
            n = detail::parse_count(toks[2], line_no, "vertex count");
            m = detail::parse_count(toks[3], line_no, "edge count");
            if (n < 1)
                throw parse_error("vertex count must be positive", line_no, toks[2].column);
            if (m < 0)
                throw parse_error("edge count must be nonnegative", line_no, toks[3].column);
            header_line = line_no;
            continue;
        }
        if (toks[0].text == "e") {
            if (n < 0)
                throw parse_error("edge line before 'p edge' header", line_no, toks[0].column);
            if (toks.size() != 3)
                throw parse_error("expected 'e <u> <v>'", line_no, toks[0].column);
            long u = detail::parse_count(toks[1], line_no, "vertex");
            long v = detail::parse_count(toks[2], line_no, "vertex");
            if (u < 1 || u > n)
                throw parse_error("vertex " + std::to_string(u) + " out of range 1.." + std::to_string(n), line_no,
                                  toks[1].column);
            if (v < 1 || v > n)
                throw parse_error("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n), line_no,
                                  toks[2].column);
            if (u == v)
                throw invalid_edge_error("self-loop at vertex " + std::to_string(u) + " (line " +
                                         std::to_string(line_no) + ")");
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            continue;
        }
        throw parse_error("unknown line type '" + std::string(toks[0].text) + "'", line_no, toks[0].column);
    }
    if (n < 0)
        throw parse_error("missing 'p edge' header", 0, 0);
    if (static_cast<long>(edges.size()) != m)
        throw parse_error("header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                          header_line, 0);
    return Graph(static_cast<int>(n), edges);
}

inline std::string write_edge_list(const Graph& g) {
    auto edges = g.edges();
    std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges)
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

/// Short-form graph6 (n <= 62): one size byte n+63, then the upper triangle
/// in column-major order packed six bits per byte, most significant first.
inline Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    if (text.empty())
        throw parse_error("empty graph6 string", 1, 1);
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw parse_error("character outside graph6 range 63..126", 1, i + 1);
    }
    if (static_cast<unsigned char>(text[0]) == 126)
        throw parse_error("graph6 long form (n > 62) is not supported", 1, 1);
    const int n = static_cast<unsigned char>(text[0]) - 63;
    if (n < 1)
        throw parse_error("graph6 order must be positive", 1, 1);
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() != 1 + bytes)
        throw parse_error("graph6 length " + std::to_string(text.size()) + " does not match order " +
                              std::to_string(n) + " (expected " + std::to_string(1 + bytes) + ")",
                          1, text.size() < 1 + bytes ? text.size() : 2 + bytes);
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int chunk = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if ((chunk >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    // Padding bits must be zero.
    for (; k < bytes * 6; ++k) {
        int chunk = static_cast<unsigned char>(text[1 + k / 6]) - 63;
        if ((chunk >> (5 - k % 6)) & 1)
            throw parse_error("nonzero graph6 padding bit", 1, 2 + k / 6);
    }
    return Graph(n, edges);
}

inline std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62)
        throw domain_error("graph6 short form supports at most 62 vertices");
    std::string out(1, static_cast<char>(n + 63));
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled != 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

} // namespace distrank
