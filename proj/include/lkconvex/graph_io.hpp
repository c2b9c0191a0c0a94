#ifndef LKCONVEX_GRAPH_IO_HPP
#define LKCONVEX_GRAPH_IO_HPP

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace lkconvex {

enum class GraphFormat { edge_list, dimacs };

/// A graph read from text, with the id base its file used (0 for the
/// "n m" edge-list format, 1 for DIMACS) so reports can echo the same labels.
struct LabeledGraph {
    Graph graph;
    vertex_t label_base = 0;
    GraphFormat format = GraphFormat::edge_list;
};

namespace detail {

inline bool blank_or_comment(const std::string& line, bool dimacs) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) return true;
    if (line[first] == '#') return true;
    return dimacs && line[first] == 'c' && (first + 1 == line.size() || std::isspace(static_cast<unsigned char>(line[first + 1])));
}

inline long long read_id(std::istringstream& in, std::size_t line_no, const char* what) {
    long long v = 0;
    if (!(in >> v)) throw InvalidGraph("line " + std::to_string(line_no) + ": expected " + what);
    return v;
}

inline void expect_line_end(std::istringstream& in, std::size_t line_no) {
    std::string rest;
    if (in >> rest) throw InvalidGraph("line " + std::to_string(line_no) + ": unexpected trailing '" + rest + "'");
}

} // namespace detail

/// Parses either the canonical format ("n m" header, then m lines "u v" with
/// 0-based ids) or DIMACS ("p edge n m", then "e u v" with 1-based ids).
/// Lines starting with '#' are comments in both; DIMACS also allows "c" lines.
inline LabeledGraph read_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0, m = 0;
    bool have_header = false;
    LabeledGraph out;
    std::vector<Edge> pairs;

    while (std::getline(in, line)) {
        ++line_no;
        if (detail::blank_or_comment(line, out.format == GraphFormat::dimacs || !have_header)) continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string first;
            ls >> first;
            if (first == "p") {
                std::string kind;
                ls >> kind;
                if (kind != "edge" && kind != "col")
                    throw InvalidGraph("line " + std::to_string(line_no) + ": unsupported DIMACS problem '" + kind + "'");
                out.format = GraphFormat::dimacs;
                out.label_base = 1;
            } else {
                ls.clear();
                ls.str(line);
            }
            long long nn = detail::read_id(ls, line_no, "vertex count");
            long long mm = detail::read_id(ls, line_no, "edge count");
            detail::expect_line_end(ls, line_no);
            if (nn < 1) throw InvalidGraph("line " + std::to_string(line_no) + ": vertex count must be positive");
            if (mm < 0) throw InvalidGraph("line " + std::to_string(line_no) + ": edge count must be nonnegative");
            n = static_cast<std::size_t>(nn);
            m = static_cast<std::size_t>(mm);
            have_header = true;
            continue;
        }
        if (out.format == GraphFormat::dimacs) {
            std::string tag;
            ls >> tag;
            if (tag != "e") throw InvalidGraph("line " + std::to_string(line_no) + ": expected 'e u v'");
        }
        long long u = detail::read_id(ls, line_no, "edge endpoint");
        long long v = detail::read_id(ls, line_no, "edge endpoint");
        detail::expect_line_end(ls, line_no);
        u -= out.label_base;
        v -= out.label_base;
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw InvalidGraph("line " + std::to_string(line_no) + ": vertex id out of range");
        pairs.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
    }
    if (!have_header) throw InvalidGraph("missing header line");
    if (pairs.size() != m)
        throw InvalidGraph("header announces " + std::to_string(m) + " edges but " + std::to_string(pairs.size())
                           + " were listed");
    out.graph = Graph::from_edge_list(n, pairs);
    return out;
}

inline LabeledGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidGraph("cannot open '" + path + "'");
    return read_graph(in);
}

inline LabeledGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g, GraphFormat format = GraphFormat::edge_list) {
    auto edges = g.edges();
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.order() << ' ' << edges.size() << '\n';
        for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    } else {
        out << g.order() << ' ' << edges.size() << '\n';
        for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    }
}

inline std::string to_text(const Graph& g, GraphFormat format = GraphFormat::edge_list) {
    std::ostringstream out;
    write_graph(out, g, format);
    return out.str();
}

} // namespace lkconvex

#endif // LKCONVEX_GRAPH_IO_HPP
