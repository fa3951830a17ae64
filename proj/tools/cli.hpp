#pragma once

#include "distrank/distrank.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace distrank::cli {

enum class OutputFormat { table, tsv };

enum exit_code : int { ok = 0, failure = 1, usage = 2 };

inline std::string read_input(const std::string& path) {
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw domain_error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Graph load_graph(const std::string& path, const std::string& input_format) {
    const std::string text = read_input(path);
    if (input_format == "graph6")
        return parse_graph6(text);
    return parse_edge_list(text);
}

/// Writes `key value` rows, aligned for tables and tab-separated for TSV.
class record_writer {
public:
    record_writer(std::ostream& os, OutputFormat f) : os_(os), format_(f) {}

    void field(const std::string& key, const std::string& value) {
        if (format_ == OutputFormat::tsv)
            os_ << key << '\t' << value << '\n';
        else
            os_ << key << std::string(key.size() < 16 ? 16 - key.size() : 1, ' ') << value << '\n';
    }

    template <class T>
    void field(const std::string& key, const T& value) {
        std::ostringstream s;
        s << value;
        field(key, s.str());
    }

    void matrix(const std::string& title, const ExactMatrix& m) {
        if (format_ == OutputFormat::table)
            os_ << title << ":\n";
        else
            os_ << "matrix\t" << title << '\n';
        write_matrix(os_, m);
    }

private:
    std::ostream& os_;
    OutputFormat format_;
};

inline std::string join_rationals(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0)
            out += ',';
        out += to_string(v[i]);
    }
    return out;
}

template <class T>
std::string join_ints(const std::vector<T>& v, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0)
            out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

// Diagnostics must stay on one line whatever the exception text holds.
inline std::string one_line(std::string s) {
    for (char& c : s)
        if (c == '\n' || c == '\r')
            c = ' ';
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    return s;
}

inline Shard parse_shard(const std::string& spec) {
    const auto slash = spec.find('/');
    auto bad = [&] { return CLI::ValidationError("--shard", "expected i/of with 0 <= i < of, got '" + spec + "'"); };
    if (slash == std::string::npos)
        throw bad();
    try {
        std::size_t used_a = 0, used_b = 0;
        const std::string a = spec.substr(0, slash), b = spec.substr(slash + 1);
        if (a.empty() || b.empty() || a[0] == '-' || b[0] == '-')
            throw bad();
        const auto index = std::stoull(a, &used_a);
        const auto count = std::stoull(b, &used_b);
        if (used_a != a.size() || used_b != b.size() || count == 0 || index >= count)
            throw bad();
        return {index, count};
    } catch (const std::logic_error&) {
        throw bad();
    }
}

inline void cmd_rank(const Graph& g, record_writer& w) {
    if (!is_connected(g))
        throw not_connected_error();
    const auto d = distance_matrix(g);
    const auto r = rank(d.entries());
    const auto diam = d.max_entry();
    w.field("n", g.order());
    w.field("m", g.edge_count());
    w.field("diameter", diam);
    w.field("max_degree", max_degree(g));
    w.field("rank", r);
    w.field("nullity", static_cast<std::size_t>(g.order()) - r);
    w.field("diam_plus_1", diam + 1);
}

inline void cmd_quotient(const Graph& g, std::ostream& out, record_writer& w) {
    if (!is_connected(g))
        throw not_connected_error();
    const auto p = twin_partition(g);
    write_partition(out, p);
    const auto q = quotient_matrix(g, p);
    w.matrix("quotient", q);
    w.field("nullity_full", distance_nullity(g));
    w.field("nullity_quotient", nullity(q));
}

struct census_request {
    int rank = 0;
    int max_n = 7;
    std::string shard = "0/1";
    bool dedupe = false;
    unsigned jobs = 1;
    bool override_cap = false;
};

inline void cmd_census(const census_request& req, std::ostream& out, OutputFormat f) {
    CensusOptions opt;
    opt.shard = parse_shard(req.shard);
    opt.limits.override_cap = req.override_cap;
    opt.jobs = req.jobs;
    const auto hits = scan_distance_rank_parallel(req.rank, req.max_n, opt);
    std::vector<Graph> witnesses;
    std::uint64_t labeled = hits.size();
    if (req.dedupe) {
        auto c = dedupe_hits(req.rank, hits);
        witnesses = std::move(c.representatives);
        labeled = c.labeled_count;
    } else {
        for (const auto& h : hits)
            witnesses.push_back(h.graph());
    }
    if (f == OutputFormat::table) {
        out << "# distance rank " << req.rank << ", connected graphs with n <= " << req.max_n << ", shard "
            << opt.shard.index << "/" << opt.shard.count << (req.dedupe ? ", up to isomorphism" : ", labelled")
            << '\n';
        out << "graph6      n    m\n";
        for (const auto& g : witnesses) {
            std::string g6 = write_graph6(g);
            out << g6 << std::string(g6.size() < 12 ? 12 - g6.size() : 1, ' ') << g.order() << std::string(4, ' ')
                << g.edge_count() << '\n';
        }
        out << "witnesses " << witnesses.size() << '\n';
        out << "labeled   " << labeled << '\n';
    } else {
        for (const auto& g : witnesses)
            out << write_graph6(g) << '\t' << g.order() << '\t' << g.edge_count() << '\n';
        out << "labeled\t" << labeled << '\n';
    }
}

inline void cmd_threshold_sequence(const std::string& text, record_writer& w) {
    const auto ps = parse_power_sequence(text);
    const auto alpha = alpha_sequence(ps);
    const auto d = continuants(alpha);
    w.field("sequence", ps.str());
    w.field("n", ps.total());
    w.field("alpha", join_rationals(alpha));
    w.field("d", join_rationals(d));
    w.field("nullity", threshold_nullity(ps));
    w.field("nullity_oracle", threshold_oracle_nullity(ps));
}

inline void cmd_threshold_search(int budget, std::ostream& out, OutputFormat f) {
    const auto hits = search_singular_power_sequences(budget);
    if (f == OutputFormat::table)
        out << "sequence            n    d_last  nullity_oracle\n";
    for (const auto& h : hits) {
        if (f == OutputFormat::tsv) {
            out << h.sequence.str() << '\t' << h.order << '\t' << to_string(h.last_continuant) << '\t'
                << h.oracle_nullity << '\n';
        } else {
            const auto s = h.sequence.str();
            out << s << std::string(s.size() < 20 ? 20 - s.size() : 1, ' ') << h.order
                << std::string(h.order < 10 ? 4 : 3, ' ') << to_string(h.last_continuant) << "       "
                << h.oracle_nullity << '\n';
        }
    }
    if (f == OutputFormat::table)
        out << "hits " << hits.size() << '\n';
}

inline void cmd_tp_tree(const std::string& text, record_writer& w) {
    const auto t = parse_clique_tree(text);
    w.field("tree", t.str());
    w.field("nodes", t.node_count());
    w.field("vertices", t.vertex_count());
    std::vector<int> heights;
    for (std::size_t v = 0; v < t.node_count(); ++v)
        heights.push_back(height(t, v));
    w.field("heights", join_ints(heights));
    w.matrix("quotient", tp_quotient(t));
    if (t.node_count() >= 2)
        w.matrix("M1", m1_reduction(t));
    w.field("nullity", tp_nullity(t));
}

inline void cmd_tp_family(const std::vector<int>& spec, std::ostream& out, OutputFormat f) {
    if (spec.size() < 3)
        throw CLI::ValidationError("--family", "expects k r n [root sizes...]");
    const int k = spec[0], r = spec[1], n = spec[2];
    std::vector<std::vector<int>> choices;
    if (spec.size() > 3) {
        choices.emplace_back(spec.begin() + 3, spec.end());
    } else {
        choices = family_root_sizes(k, r, n);
        if (choices.empty()) {
            // Let nullity_family report the violated constraint.
            std::vector<int> none(static_cast<std::size_t>(std::max(r, 0)), 0);
            nullity_family(k, r, n, none);
        }
    }
    if (f == OutputFormat::table)
        out << "k  r  n    root_sizes  nullity  tree\n";
    for (const auto& sizes : choices) {
        const auto t = nullity_family(k, r, n, sizes);
        const auto eta = tp_nullity(t);
        if (f == OutputFormat::tsv) {
            out << k << '\t' << r << '\t' << n << '\t' << join_ints(sizes) << '\t' << eta << '\n';
        } else {
            const auto rs = join_ints(sizes);
            out << k << "  " << r << "  " << n << std::string(n < 10 ? 4 : 3, ' ') << rs
                << std::string(rs.size() < 12 ? 12 - rs.size() : 1, ' ') << eta << "        " << t.str() << '\n';
        }
    }
}

inline void cmd_tp_gadgets(int bound, std::ostream& out, OutputFormat f) {
    const auto triples = singular_gadget_triples(bound);
    const char sep = f == OutputFormat::tsv ? '\t' : ' ';
    for (const auto& t : triples)
        out << t[0] << sep << t[1] << sep << t[2] << '\n';
    if (f == OutputFormat::table)
        out << "singular triples " << triples.size() << '\n';
}

inline void cmd_bound(int k, record_writer& w) {
    const auto r = ramsey_value(k);
    w.field("k", k);
    w.field("ramsey", to_string(r.value));
    w.field("ramsey_exact", r.exact ? "yes" : "no (binomial upper bound)");
    if (r.value <= 2) {
        w.field("f", "undefined (pole at r = 2)");
        w.field("order_bound", degree_two_order_bound(k));
        return;
    }
    const auto f = moore_bound(k, r.value);
    w.field("f", to_string(f));
    w.field("floor_f", to_string(floor(f)));
}

/// Parses argv and runs one subcommand. Returns the process exit code; every
/// failure writes exactly one line to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact rank and nullity computations for graph distance matrices", "distrank"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "table";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "tsv"}));

    std::string input_format = "edgelist";
    std::string input_path;

    auto* rank_cmd = app.add_subcommand("rank", "Distance rank, nullity and diameter bound of a graph");
    rank_cmd->add_option("input", input_path, "Graph file ('-' for stdin)")->required();
    rank_cmd->add_option("--input-format", input_format, "edgelist or graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}));

    auto* quotient_cmd = app.add_subcommand("quotient", "Twin partition, quotient matrix and both nullities");
    quotient_cmd->add_option("input", input_path, "Graph file ('-' for stdin)")->required();
    quotient_cmd->add_option("--input-format", input_format, "edgelist or graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}));

    census_request census;
    auto* census_cmd = app.add_subcommand("census", "Connected graphs with a given distance rank");
    census_cmd->add_option("--rank", census.rank, "Target distance rank")->required()->check(CLI::PositiveNumber);
    census_cmd->add_option("--max-n", census.max_n, "Largest order scanned")->check(CLI::PositiveNumber);
    census_cmd->add_option("--shard", census.shard, "Mask-space shard i/of");
    census_cmd->add_flag("--dedupe", census.dedupe, "Keep one graph per isomorphism class");
    census_cmd->add_option("--jobs", census.jobs, "Worker threads")->check(CLI::PositiveNumber);
    census_cmd->add_flag("--max-n-override", census.override_cap, "Allow --max-n above the enumeration cap");

    std::string sequence;
    int search_budget = 0;
    auto* threshold_cmd = app.add_subcommand("threshold", "Threshold graphs from power sequences");
    threshold_cmd->add_option("sequence", sequence, "Power sequence, e.g. 4,1,3,2");
    auto* search_opt =
        threshold_cmd->add_option("--search", search_budget, "Search all sequences up to this many vertices");
    search_opt->check(CLI::Range(2, 1 << 20));

    std::string tree_text;
    std::vector<int> family;
    int gadget_bound = 0;
    auto* tp_cmd = app.add_subcommand("tp", "Trivially perfect graphs from rooted clique trees");
    tp_cmd->add_option("tree", tree_text, "Clique tree, e.g. 6(7(9,8),9(8(6,7),6))");
    auto* family_opt = tp_cmd->add_option("--family", family, "k r n [root sizes...]")->expected(3, 6);
    auto* gadget_opt = tp_cmd->add_option("--gadgets", gadget_bound, "List singular gadget triples up to bound");

    int bound_k = 0;
    auto* bound_cmd = app.add_subcommand("bound", "Ramsey value and order bound f(k, R(k))");
    bound_cmd->add_option("--k", bound_k, "Target rank k")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "distrank: usage error: " << one_line(e.what()) << '\n';
        return usage;
    }

    const OutputFormat fmt = format == "tsv" ? OutputFormat::tsv : OutputFormat::table;
    std::ostringstream buffer;
    record_writer w(buffer, fmt);
    try {
        if (rank_cmd->parsed()) {
            cmd_rank(load_graph(input_path, input_format), w);
        } else if (quotient_cmd->parsed()) {
            cmd_quotient(load_graph(input_path, input_format), buffer, w);
        } else if (census_cmd->parsed()) {
            if (census.rank < 2)
                throw CLI::ValidationError("--rank", "must be >= 2");
            cmd_census(census, buffer, fmt);
        } else if (threshold_cmd->parsed()) {
            if (search_opt->count() > 0)
                cmd_threshold_search(search_budget, buffer, fmt);
            else if (!sequence.empty())
                cmd_threshold_sequence(sequence, w);
            else
                throw CLI::ValidationError("threshold", "give a power sequence or --search");
        } else if (tp_cmd->parsed()) {
            if (family_opt->count() > 0)
                cmd_tp_family(family, buffer, fmt);
            else if (gadget_opt->count() > 0)
                cmd_tp_gadgets(gadget_bound, buffer, fmt);
            else if (!tree_text.empty())
                cmd_tp_tree(tree_text, w);
            else
                throw CLI::ValidationError("tp", "give a clique tree, --family or --gadgets");
        } else if (bound_cmd->parsed()) {
            if (bound_k < 2)
                throw CLI::ValidationError("--k", "must be >= 2");
            cmd_bound(bound_k, w);
        }
    } catch (const CLI::ParseError& e) {
        err << "distrank: usage error: " << one_line(e.what()) << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "distrank: error: " << one_line(e.what()) << '\n';
        return failure;
    }
    out << buffer.str();
    return ok;
}

} // namespace distrank::cli
